#include "elast2d/kirsch.hpp"

#include <cmath>
#include <stdexcept>

namespace elast2d {

KirschProblem::KirschProblem(double p, double radius, Moduli m)
    : p_(p), radius_(radius), m_(m) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("KirschProblem: radius must be positive");
  }
  if (!std::isfinite(p)) {
    throw std::invalid_argument("KirschProblem: tension must be finite");
  }
}

void KirschProblem::require_exterior(double r) const {
  if (!(r >= radius_)) {
    throw std::domain_error("KirschProblem: point inside the hole (r < R)");
  }
}

PotentialPair KirschProblem::potentials() const {
  const double R2 = radius_ * radius_;
  PotentialPair pair;
  // phi: c_{-1} = p R^2 / 2, c_1 = p / 4
  pair.phi = LaurentPotential(-1, {p_ * R2 / 2.0, 0.0, p_ / 4.0});
  // psi: c_{-3} = p R^4 / 2, c_{-1} = -p R^2 / 2, c_1 = -p / 2
  pair.psi = LaurentPotential(-3, {p_ * R2 * R2 / 2.0, 0.0, -p_ * R2 / 2.0, 0.0, -p_ / 2.0});
  return pair;
}

FieldEvaluator KirschProblem::evaluator() const { return FieldEvaluator(potentials()); }

PolarStress KirschProblem::stresses_polar(double r, double theta) const {
  require_exterior(r);
  const double q = radius_ * radius_ / (r * r);  // (R/r)^2
  const double q2 = q * q;                       // (R/r)^4
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  const double half = 0.5 * p_;
  return {
      half * (1.0 - q) + half * (1.0 - 4.0 * q + 3.0 * q2) * c2,
      half * (1.0 + q) - half * (1.0 + 3.0 * q2) * c2,
      -half * (1.0 + 2.0 * q - 3.0 * q2) * s2,
  };
}

PolarDisplacement KirschProblem::displacements(double r, double theta) const {
  require_exterior(r);
  const auto w = evaluator().displacement_polar(m_, r, theta);
  return {w.real(), w.imag()};
}

PolarDisplacement KirschProblem::classical_displacements(double r, double theta) const {
  require_exterior(r);
  const double mu = m_.mu();
  if (mu <= 0.0) {
    throw std::domain_error("KirschProblem::classical_displacements: requires mu > 0");
  }
  const double l0 = m_.lambda0();
  const double R = radius_;
  const double k = p_ * R / 4.0;
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  const double ur = k * ((r / R) / l0 + (R / r) / mu) +
                    k * (2.0 * (R / r) / l0 +
                         (r / R + 2.0 * R / r - (R * R * R) / (r * r * r)) / mu) *
                        c2;
  const double ut =
      -k * (2.0 * (R / r) / l0 + (r / R + (R * R * R) / (r * r * r)) / mu) * s2;
  return {ur, ut};
}

double KirschProblem::boundary_coefficient() const {
  const double mu = m_.mu(), mu0 = m_.mu0();
  const double ae2 = m_.ae_norm2();
  return p_ * radius_ * (mu0 * mu0 + 2.0 * mu * mu + m_.lambda() * mu) /
         (4.0 * m_.lambda0() * ae2);
}

double KirschProblem::classical_boundary_coefficient() const {
  const double mu = m_.mu();
  if (mu <= 0.0) {
    throw std::domain_error("KirschProblem::classical_boundary_coefficient: requires mu > 0");
  }
  return p_ * radius_ * (m_.lambda() + 2.0 * mu) / (4.0 * mu * m_.lambda0());
}

PolarDisplacement KirschProblem::boundary_displacements(double theta) const {
  const double c = boundary_coefficient();
  return {c * (1.0 + 2.0 * std::cos(2.0 * theta)), -2.0 * c * std::sin(2.0 * theta)};
}

FieldSample KirschProblem::sample(double r, double theta) const {
  return sample(evaluator(), r, theta);
}

FieldSample KirschProblem::sample(const FieldEvaluator& ev, double r, double theta) const {
  require_exterior(r);
  FieldSample out;
  out.r = r;
  out.theta = theta;
  out.x = r * std::cos(theta);
  out.y = r * std::sin(theta);

  const PolarStress sp = stresses_polar(r, theta);
  out.srr = sp.rr;
  out.stt = sp.tt;
  out.srt = sp.rt;
  const Stress2 s = rotate_stress({sp.rr, sp.rt, sp.tt}, -theta);
  out.s11 = s.s11;
  out.s12 = s.s12;
  out.s22 = s.s22;

  const std::complex<double> z(out.x, out.y);
  const std::complex<double> w = ev.displacement(m_, z);
  out.u = w.real();
  out.v = w.imag();
  const std::complex<double> wp = std::polar(1.0, -theta) * w;
  out.ur = wp.real();
  out.utheta = wp.imag();

  out.airy = ev.airy(z);
  out.trace = ev.trace(z);
  return out;
}

PolarDisplacement boundary_limit_mu_to_zero(double p, double radius, double lambda,
                                            double theta) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("boundary_limit_mu_to_zero: requires lambda > 0");
  }
  const double c = p * radius / (4.0 * lambda);
  return {c * (1.0 + 2.0 * std::cos(2.0 * theta)), -2.0 * c * std::sin(2.0 * theta)};
}

}  // namespace elast2d
