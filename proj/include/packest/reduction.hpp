#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace packest {

// Reduced electrolyte parameters: C_e(s)/J(s) ~ gamma_e (beta_e s + g_e) /
// (s (beta_e (1 - beta_e) s + g_e)).
struct EhmParams {
  double gamma_e = 0.0;  // mol m^-3 A^-1 s^-1
  double beta_e = 0.0;   // in (0,1)
  double g_e = 0.0;      // s^-1

  double b_e() const { return beta_e * (1.0 - beta_e); }
};

// Exact transcendental transfer function of the electrolyte diffusion PDE,
// evaluated at the negative-terminal boundary x = 0.
struct ElectrolyteTf {
  struct Region {
    double eps_e;   // electrolyte volume fraction
    double d_eff;   // effective diffusivity [m^2/s]
    double length;  // [m]
  };
  Region neg, sep, pos;
  double t_plus;   // transference number
  double a_cross;  // cross-sectional area [m^2]

  // alpha = sqrt(eps/D) per region
  double alpha_neg() const { return std::sqrt(neg.eps_e / neg.d_eff); }
  double alpha_sep() const { return std::sqrt(sep.eps_e / sep.d_eff); }
  double alpha_pos() const { return std::sqrt(pos.eps_e / pos.d_eff); }
  // b^± = ∓(1 - t+)/(F L± A); b- > 0 with this convention
  double b_neg() const;
  double b_pos() const;

  void validate() const;
};

// N_c(s)/D_c(s) with exponent-scaled sinh/cosh so large |beta L| does not
// overflow. Throws std::domain_error at s = 0 and NumericalError when the
// evaluation degenerates.
std::complex<double> tf_eval(const ElectrolyteTf& tf, std::complex<double> s);

// First three Taylor coefficients of s*TF(s) at s = 0. Computed twice, by
// truncated-series arithmetic and by a contour integral around the origin;
// the two must agree to 1e-8 relative or a NumericalError is raised.
std::array<double, 3> tf_moments(const ElectrolyteTf& tf);

// The two individual methods, exposed for cross-validation in tests.
std::array<double, 3> tf_moments_series(const ElectrolyteTf& tf);
std::array<double, 3> tf_moments_contour(const ElectrolyteTf& tf, double radius);

// Moments of the reduced model itself (closed form), for round-trip checks.
std::array<double, 3> ehm_moments(const EhmParams& p);

// Solves the three-moment match. Throws NumericalError when the moments are
// not realizable with beta_e in (0,1) and g_e > 0.
EhmParams pade_fit(const std::array<double, 3>& m);

// Moment extraction + fit.
EhmParams reduce_electrolyte(const ElectrolyteTf& tf);

// Euler discretization of the reduced model: state [Ce1, Ce2],
// Ce(k+1) = a * Ce(k) + b * J(k).
struct EhmDiscrete {
  Eigen::Matrix2d a;
  Eigen::Vector2d b;
};
EhmDiscrete ehm_discretize(const EhmParams& p, double ts);

// Frequency response of the reduced model.
std::complex<double> ehm_tf_eval(const EhmParams& p, std::complex<double> s);

}  // namespace packest
