#include "packest/ocv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "packest/errors.hpp"

namespace packest {

OcvTable::OcvTable(std::vector<double> theta, std::vector<double> ocv,
                   std::vector<double> docv_dt)
    : theta_(std::move(theta)), ocv_(std::move(ocv)), dudt_(std::move(docv_dt)) {
  if (theta_.size() < 10) {
    throw ValidationError("OCV table needs at least 10 points, got " +
                          std::to_string(theta_.size()));
  }
  if (theta_.size() != ocv_.size() || theta_.size() != dudt_.size()) {
    throw ValidationError("OCV table column length mismatch");
  }
  for (std::size_t i = 1; i < theta_.size(); ++i) {
    if (!(theta_[i] > theta_[i - 1])) {
      throw ValidationError("OCV table stoichiometry grid not strictly increasing at row " +
                            std::to_string(i));
    }
  }
  if (theta_.front() > 0.0 || theta_.back() < 1.0) {
    throw ValidationError("OCV table must cover the stoichiometry range [0,1]");
  }
  ocv_slope_ = monotone_slopes(theta_, ocv_);
  dudt_slope_ = monotone_slopes(theta_, dudt_);
}

OcvTable OcvTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open OCV table file: " + path);
  std::string header;
  std::getline(in, header);
  std::vector<double> t, u, du;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double a, b, c;
    if (!(row >> a >> b >> c)) {
      throw ValidationError("malformed OCV table row " + std::to_string(lineno) +
                            " in " + path);
    }
    t.push_back(a);
    u.push_back(b);
    du.push_back(c);
  }
  return OcvTable(std::move(t), std::move(u), std::move(du));
}

// Fritsch-Carlson limited slopes: the interpolant preserves monotone runs
// of the data and stays within the data hull.
std::vector<double> OcvTable::monotone_slopes(const std::vector<double>& x,
                                              const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) m[i] = 0.5 * (d[i - 1] + d[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      m[i] = m[i + 1] = 0.0;
      continue;
    }
    const double a = m[i] / d[i];
    const double b = m[i + 1] / d[i];
    if (a < 0.0) m[i] = 0.0;
    if (b < 0.0) m[i + 1] = 0.0;
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m[i] = tau * a * d[i];
      m[i + 1] = tau * b * d[i];
    }
  }
  return m;
}

double OcvTable::eval(const std::vector<double>& x, const std::vector<double>& y,
                      const std::vector<double>& m, double xq) {
  const auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::size_t i = (it == x.begin()) ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  if (i + 1 >= x.size()) i = x.size() - 2;
  const double h = x[i + 1] - x[i];
  const double t = (xq - x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y[i] + h10 * h * m[i] + h01 * y[i + 1] + h11 * h * m[i + 1];
}

double OcvTable::ocv(double theta) const {
  if (!contains(theta)) {
    throw std::domain_error("stoichiometry " + std::to_string(theta) +
                            " outside OCV table domain [" + std::to_string(theta_.front()) +
                            ", " + std::to_string(theta_.back()) + "]");
  }
  return eval(theta_, ocv_, ocv_slope_, theta);
}

double OcvTable::docv_dt(double theta) const {
  if (!contains(theta)) {
    throw std::domain_error("stoichiometry " + std::to_string(theta) +
                            " outside OCV table domain");
  }
  return eval(theta_, dudt_, dudt_slope_, theta);
}

}  // namespace packest
