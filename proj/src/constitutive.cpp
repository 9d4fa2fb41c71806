#include "elast2d/constitutive.hpp"

#include <cmath>
#include <stdexcept>

namespace elast2d {

Moduli::Moduli(double lambda0, double mu, double mu0)
    : lambda0_(lambda0), mu_(mu), mu0_(mu0) {
  if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
    throw std::invalid_argument("Moduli: lambda0 must be positive");
  }
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("Moduli: mu must be nonnegative");
  }
  if (!std::isfinite(mu0) || !(mu * mu + mu0 * mu0 > 0.0)) {
    throw std::invalid_argument("Moduli: complex modulus mu + i*mu0 must be nonzero");
  }
}

Moduli Moduli::from_lame(double lambda, double mu, double mu0) {
  return Moduli(lambda + mu, mu, mu0);
}

double Moduli::kappa0() const {
  if (mu_ <= 0.0) {
    throw std::domain_error("Moduli::kappa0: requires mu > 0");
  }
  return (lambda() + 3.0 * mu_) / lambda0_;
}

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

double Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 operator*(const Mat3& lhs, const Mat3& rhs) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += lhs(i, k) * rhs(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

double max_abs_diff(const Mat3& lhs, const Mat3& rhs) {
  double worst = 0.0;
  for (size_t i = 0; i < 9; ++i) {
    worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
  }
  return worst;
}

Stress2 stress_from_strain(const Moduli& m, const Strain2& e) {
  const double l0 = m.lambda0(), mu = m.mu(), mu0 = m.mu0();
  return {
      (mu + l0) * e.e11 + 2.0 * mu0 * e.e12 + (l0 - mu) * e.e22,
      -mu0 * e.e11 + 2.0 * mu * e.e12 + mu0 * e.e22,
      (l0 - mu) * e.e11 - 2.0 * mu0 * e.e12 + (l0 + mu) * e.e22,
  };
}

Strain2 strain_from_stress(const Moduli& m, const Stress2& s) {
  const double l0 = m.lambda0(), mu = m.mu(), mu0 = m.mu0();
  const double ae2 = m.ae_norm2();
  const double det = 8.0 * l0 * ae2;
  const double k = 2.0 / det;
  return {
      k * ((ae2 + l0 * mu) * s.s11 - 2.0 * mu0 * l0 * s.s12 + (ae2 - l0 * mu) * s.s22),
      k * (l0 * mu0 * s.s11 + 2.0 * mu * l0 * s.s12 - l0 * mu0 * s.s22),
      k * ((ae2 - l0 * mu) * s.s11 + 2.0 * mu0 * l0 * s.s12 + (ae2 + l0 * mu) * s.s22),
  };
}

Mat3 constitutive_matrix(const Moduli& m) {
  const double l0 = m.lambda0(), mu = m.mu(), mu0 = m.mu0();
  Mat3 a;
  a(0, 0) = mu + l0;  a(0, 1) = 2.0 * mu0;  a(0, 2) = l0 - mu;
  a(1, 0) = -mu0;     a(1, 1) = 2.0 * mu;   a(1, 2) = mu0;
  a(2, 0) = l0 - mu;  a(2, 1) = -2.0 * mu0; a(2, 2) = l0 + mu;
  return a;
}

Mat3 inverse_constitutive_matrix(const Moduli& m) {
  const double l0 = m.lambda0(), mu = m.mu(), mu0 = m.mu0();
  const double ae2 = m.ae_norm2();
  const double k = 1.0 / (4.0 * l0 * ae2);
  Mat3 a;
  a(0, 0) = k * (ae2 + l0 * mu);  a(0, 1) = k * (-2.0 * mu0 * l0); a(0, 2) = k * (ae2 - l0 * mu);
  a(1, 0) = k * (mu0 * l0);       a(1, 1) = k * (2.0 * mu * l0);   a(1, 2) = k * (-mu0 * l0);
  a(2, 0) = k * (ae2 - l0 * mu);  a(2, 1) = k * (2.0 * mu0 * l0);  a(2, 2) = k * (ae2 + l0 * mu);
  return a;
}

StressDecomposition decompose_stress(const Moduli& m, const DisplacementGradient& g) {
  const double theta = g.divergence();
  const double mu = m.mu(), mu0 = m.mu0();
  // eps0 = [[ux - vy, uy + vx], [uy + vx, vy - ux]]
  const double d = g.ux - g.vy;
  const double w = g.uy + g.vx;
  StressDecomposition out;
  const double t = theta * m.lambda0();
  out.trace_part = {t, 0.0, t};
  // M * eps0 with M = [[mu, mu0], [-mu0, mu]]; symmetric with zero trace.
  out.deviator_part = {mu * d + mu0 * w, mu * w - mu0 * d, -(mu * d + mu0 * w)};
  return out;
}

double check_polar_factor(const Moduli& m) {
  const double mu = m.mu(), mu0 = m.mu0();
  const double ae2 = m.ae_norm2();
  // M M^T for M = [[mu, mu0], [-mu0, mu]]
  const double d00 = mu * mu + mu0 * mu0 - ae2;
  const double d01 = mu * mu0 - mu0 * mu;
  const double d10 = -mu0 * mu + mu * mu0;
  const double d11 = mu0 * mu0 + mu * mu - ae2;
  return std::max({std::abs(d00), std::abs(d01), std::abs(d10), std::abs(d11)});
}

Stress2 rotate_stress(const Stress2& s, double angle) {
  const double c = std::cos(angle), n = std::sin(angle);
  return {
      s.s11 * c * c + 2.0 * s.s12 * c * n + s.s22 * n * n,
      (s.s22 - s.s11) * c * n + s.s12 * (c * c - n * n),
      s.s11 * n * n - 2.0 * s.s12 * c * n + s.s22 * c * c,
  };
}

}  // namespace elast2d
