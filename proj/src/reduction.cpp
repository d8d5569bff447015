#include "packest/reduction.hpp"

#include <cmath>
#include <string>

#include "packest/constants.hpp"
#include "packest/errors.hpp"

namespace packest {

namespace {

using cx = std::complex<double>;

// sinh(z) e^{-Re z} and cosh(z) e^{-Re z} for Re z >= 0; both bounded, so
// products of hyperbolics can be formed with a common exponent factored out
// of numerator and denominator.
cx sinh_scaled(cx z) {
  const cx eiy(std::cos(z.imag()), std::sin(z.imag()));
  return 0.5 * (eiy - std::exp(-2.0 * z.real()) * std::conj(eiy));
}
cx cosh_scaled(cx z) {
  const cx eiy(std::cos(z.imag()), std::sin(z.imag()));
  return 0.5 * (eiy + std::exp(-2.0 * z.real()) * std::conj(eiy));
}

// Truncated power series in s with fixed order, for the exact moment
// expansion of s*TF(s) (which is rational in s: every term of N_c carries
// an overall sqrt(s) and D_c an overall s*sqrt(s)).
constexpr int kOrder = 8;

struct Series {
  std::array<double, kOrder> c{};

  static Series one() {
    Series r;
    r.c[0] = 1.0;
    return r;
  }
  Series operator*(const Series& o) const {
    Series r;
    for (int i = 0; i < kOrder; ++i)
      for (int j = 0; i + j < kOrder; ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  Series operator+(const Series& o) const {
    Series r;
    for (int i = 0; i < kOrder; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Series operator-(const Series& o) const {
    Series r;
    for (int i = 0; i < kOrder; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Series scaled(double k) const {
    Series r;
    for (int i = 0; i < kOrder; ++i) r.c[i] = k * c[i];
    return r;
  }
  // multiply by s
  Series shifted() const {
    Series r;
    for (int i = 1; i < kOrder; ++i) r.c[i] = c[i - 1];
    return r;
  }
  // reciprocal, requires c[0] != 0
  Series inverse() const {
    Series r;
    r.c[0] = 1.0 / c[0];
    for (int i = 1; i < kOrder; ++i) {
      double acc = 0.0;
      for (int j = 1; j <= i; ++j) acc += c[j] * r.c[i - j];
      r.c[i] = -acc / c[0];
    }
    return r;
  }
};

// sinh(aL sqrt(s)) / sqrt(s) and cosh(aL sqrt(s)) as series in s.
Series sinh_series(double al) {
  Series r;
  double term = al;  // (aL)^{2k+1} / (2k+1)!
  for (int k = 0; k < kOrder; ++k) {
    r.c[k] = term;
    term *= al * al / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return r;
}
Series cosh_series(double al) {
  Series r;
  double term = 1.0;  // (aL)^{2k} / (2k)!
  for (int k = 0; k < kOrder; ++k) {
    r.c[k] = term;
    term *= al * al / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return r;
}

struct TfCoeffs {
  double an, as, ap;        // alpha per region
  double en, es, ep;        // eps per region
  double u, v, w;           // alpha*L per region (-, +, s)
  double bn, bp;            // source coefficients
  double de;                // D_eff^- entering the alpha^-alpha^+alpha^s D_e term
};

TfCoeffs coeffs(const ElectrolyteTf& tf) {
  TfCoeffs k;
  k.an = tf.alpha_neg();
  k.as = tf.alpha_sep();
  k.ap = tf.alpha_pos();
  k.en = tf.neg.eps_e;
  k.es = tf.sep.eps_e;
  k.ep = tf.pos.eps_e;
  k.u = k.an * tf.neg.length;
  k.v = k.ap * tf.pos.length;
  k.w = k.as * tf.sep.length;
  k.bn = tf.b_neg();
  k.bp = tf.b_pos();
  k.de = tf.neg.d_eff;
  return k;
}

}  // namespace

double ElectrolyteTf::b_neg() const {
  return (1.0 - t_plus) / (kFaraday * neg.length * a_cross);
}
double ElectrolyteTf::b_pos() const {
  return -(1.0 - t_plus) / (kFaraday * pos.length * a_cross);
}

void ElectrolyteTf::validate() const {
  for (const Region* r : {&neg, &sep, &pos}) {
    if (!(r->eps_e > 0.0) || !(r->d_eff > 0.0) || !(r->length > 0.0)) {
      throw ValidationError("electrolyte transfer function requires positive eps, D, L");
    }
  }
  if (!(a_cross > 0.0)) throw ValidationError("cross-sectional area must be positive");
  if (!(t_plus > 0.0 && t_plus < 1.0)) throw ValidationError("transference number outside (0,1)");
}

std::complex<double> tf_eval(const ElectrolyteTf& tf, std::complex<double> s) {
  if (s == cx(0.0, 0.0)) throw std::domain_error("tf_eval: pole at s = 0");
  const TfCoeffs k = coeffs(tf);
  const cx rs = std::sqrt(s);  // principal branch, Re >= 0
  const cx zu = k.u * rs, zv = k.v * rs, zw = k.w * rs;

  const cx shu = sinh_scaled(zu), shv = sinh_scaled(zv), shw = sinh_scaled(zw);
  const cx chu = cosh_scaled(zu), chv = cosh_scaled(zv), chw = cosh_scaled(zw);
  // Common scale e^{Re(zu+zv+zw)} is factored out of every term; terms that
  // miss a hyperbolic in one region pick up the corresponding decay factor.
  const double mu = std::exp(-zu.real());
  const double mw = std::exp(-zw.real());

  const cx num = k.bn * (k.an * k.ep * shu * shv * shw
                         + k.as * k.ep * chu * chw * shv
                         + k.an * k.ap * k.as * k.de * chv * chw * shu
                         + k.ap * k.es * chu * chv * shw
                         - k.as * k.ep * chw * shv * mu
                         - k.ap * k.es * chv * shw * mu)
                 - k.bp * k.as * k.en * shv * (mu * mw);
  const cx den = k.en * s * (k.as * k.ep * chu * chw * shv
                             + k.ap * k.es * chu * chv * shw
                             + k.an * k.ep * shu * shv * shw
                             + k.an * k.ap * k.as * k.de * chv * chw * shu);
  if (!std::isfinite(den.real()) || !std::isfinite(den.imag()) || den == cx(0.0, 0.0) ||
      !std::isfinite(num.real()) || !std::isfinite(num.imag())) {
    throw NumericalError("tf_eval: degenerate evaluation at |s| = " + std::to_string(std::abs(s)));
  }
  return num / den;
}

std::array<double, 3> tf_moments_series(const ElectrolyteTf& tf) {
  const TfCoeffs k = coeffs(tf);
  // Reduced hyperbolics: Sh = sinh(aL sqrt s)/sqrt s, Ch = cosh(aL sqrt s).
  const Series shu = sinh_series(k.u), shv = sinh_series(k.v), shw = sinh_series(k.w);
  const Series chu = cosh_series(k.u), chv = cosh_series(k.v), chw = cosh_series(k.w);

  // N_c = sqrt(s) * pn(s), D_c = s sqrt(s) * pd(s); s*TF = pn/pd.
  const Series triple = (shu * shv * shw).shifted();  // sinh sinh sinh = s^{3/2} ShShSh
  const Series pn = (triple.scaled(k.an * k.ep)
                     + (chu * chw * shv).scaled(k.as * k.ep)
                     + (chv * chw * shu).scaled(k.an * k.ap * k.as * k.de)
                     + (chu * chv * shw).scaled(k.ap * k.es)
                     - (chw * shv).scaled(k.as * k.ep)
                     - (chv * shw).scaled(k.ap * k.es))
                        .scaled(k.bn)
                    - shv.scaled(k.bp * k.as * k.en);
  const Series pd = (triple.scaled(k.an * k.ep)
                     + (chu * chw * shv).scaled(k.as * k.ep)
                     + (chu * chv * shw).scaled(k.ap * k.es)
                     + (chv * chw * shu).scaled(k.an * k.ap * k.as * k.de))
                        .scaled(k.en);
  const Series phi = pn * pd.inverse();
  return {phi.c[0], phi.c[1], phi.c[2]};
}

std::array<double, 3> tf_moments_contour(const ElectrolyteTf& tf, double radius) {
  constexpr int n = 256;
  std::array<double, 3> m{};
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * M_PI * j / n;
    const cx z = radius * cx(std::cos(th), std::sin(th));
    const cx phi = z * tf_eval(tf, z);
    cx zk(1.0, 0.0);
    for (int k = 0; k < 3; ++k) {
      m[k] += (phi / zk).real() / n;
      zk *= z;
    }
  }
  return m;
}

std::array<double, 3> tf_moments(const ElectrolyteTf& tf) {
  tf.validate();
  const auto series = tf_moments_series(tf);
  if (!(std::abs(series[0]) > 0.0) || series[1] == 0.0 || series[2] == 0.0) {
    throw NumericalError("tf_moments: degenerate series expansion");
  }
  // Contour radius from the pole scale of the expansion itself, checked at
  // two radii for stability before trusting the cross-method agreement.
  const double pole_scale = std::abs(series[1] / series[2]);
  for (double r : {0.25 * pole_scale, 0.125 * pole_scale}) {
    const auto contour = tf_moments_contour(tf, r);
    for (int k = 0; k < 3; ++k) {
      const double rel = std::abs(contour[k] - series[k]) / std::abs(series[k]);
      if (!(rel < 1e-8)) {
        throw NumericalError("tf_moments: series and contour methods disagree on m" +
                             std::to_string(k) + " (rel " + std::to_string(rel) + ")");
      }
    }
  }
  return series;
}

std::array<double, 3> ehm_moments(const EhmParams& p) {
  // gamma (beta s + g)/(b s + g) = gamma [1 + (beta-b)s/g - b(beta-b)s^2/g^2 + ...]
  const double b = p.b_e();
  return {p.gamma_e, p.gamma_e * (p.beta_e - b) / p.g_e,
          -p.gamma_e * b * (p.beta_e - b) / (p.g_e * p.g_e)};
}

EhmParams pade_fit(const std::array<double, 3>& m) {
  if (m[0] == 0.0) throw NumericalError("pade_fit: zero leading moment");
  const auto report = [&m] {
    return " (moments " + std::to_string(m[0]) + ", " + std::to_string(m[1]) + ", " +
           std::to_string(m[2]) + ")";
  };
  if (m[1] == 0.0 || m[2] == 0.0) {
    throw NumericalError("pade_fit: vanishing higher moment" + report());
  }
  // m1/m0 = beta^2/g, m2/m1 = -beta(1-beta)/g  =>  beta/(1-beta) = -m1^2/(m0 m2)
  const double q = -(m[1] * m[1]) / (m[0] * m[2]);
  const double beta = q / (1.0 + q);
  if (!(beta > 0.0 && beta < 1.0)) {
    throw NumericalError("pade_fit: beta_e = " + std::to_string(beta) +
                         " outside (0,1)" + report());
  }
  EhmParams p;
  p.gamma_e = m[0];
  p.beta_e = beta;
  p.g_e = beta * beta * m[0] / m[1];
  if (!(p.g_e > 0.0)) {
    throw NumericalError("pade_fit: g_e = " + std::to_string(p.g_e) + " not positive" + report());
  }
  const auto back = ehm_moments(p);
  for (int k = 0; k < 3; ++k) {
    if (!(std::abs(back[k] - m[k]) <= 1e-10 * std::abs(m[k]))) {
      throw NumericalError("pade_fit: fitted model fails to reproduce moments" + report());
    }
  }
  return p;
}

EhmParams reduce_electrolyte(const ElectrolyteTf& tf) { return pade_fit(tf_moments(tf)); }

EhmDiscrete ehm_discretize(const EhmParams& p, double ts) {
  const double rate = ts * p.g_e / p.b_e();
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ValidationError("ehm_discretize: ts*g_e/b_e = " + std::to_string(rate) +
                          " violates the Euler stability bound [0,1)");
  }
  EhmDiscrete d;
  d.a << 1.0, 0.0, rate, 1.0 - rate;
  d.b << -ts * p.gamma_e, ts * p.gamma_e / (1.0 - p.beta_e);
  return d;
}

std::complex<double> ehm_tf_eval(const EhmParams& p, std::complex<double> s) {
  return p.gamma_e * (p.beta_e * s + p.g_e) / (s * (p.b_e() * s + p.g_e));
}

}  // namespace packest
