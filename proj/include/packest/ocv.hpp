#pragma once

#include <string>
#include <vector>

namespace packest {

// Open-circuit potential of one electrode as a function of stoichiometry,
// with its entropic coefficient dU/dT. Backed by a monotone (Fritsch-
// Carlson) cubic interpolant so the shipped tables never introduce
// spurious wiggles between samples.
class OcvTable {
 public:
  // grid must be strictly increasing, cover [0,1], and have >= 10 points.
  OcvTable(std::vector<double> theta, std::vector<double> ocv,
           std::vector<double> docv_dt);

  // Plain text file: one header line, then rows "theta ocv docv_dT".
  static OcvTable load(const std::string& path);

  double ocv(double theta) const;
  double docv_dt(double theta) const;

  double theta_min() const { return theta_.front(); }
  double theta_max() const { return theta_.back(); }
  bool contains(double theta) const {
    return theta >= theta_.front() && theta <= theta_.back();
  }

 private:
  std::vector<double> theta_;
  std::vector<double> ocv_, ocv_slope_;
  std::vector<double> dudt_, dudt_slope_;

  static std::vector<double> monotone_slopes(const std::vector<double>& x,
                                             const std::vector<double>& y);
  static double eval(const std::vector<double>& x, const std::vector<double>& y,
                     const std::vector<double>& m, double xq);
};

}  // namespace packest
