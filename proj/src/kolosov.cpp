#include "elast2d/kolosov.hpp"

#include <cmath>

namespace elast2d {

using Complex = FieldEvaluator::Complex;

FieldEvaluator::FieldEvaluator(PotentialPair pair)
    : pair_(std::move(pair)),
      dphi_(pair_.phi.derivative()),
      ddphi_(dphi_.derivative()),
      dpsi_(pair_.psi.derivative()),
      chi_(pair_.psi.antiderivative()) {}

double FieldEvaluator::airy(Complex z) const {
  return (std::conj(z) * pair_.phi.eval(z) + chi_.eval(z)).real();
}

Complex FieldEvaluator::airy_gradient(Complex z) const {
  return pair_.phi.eval(z) + z * std::conj(dphi_.eval(z)) + std::conj(pair_.psi.eval(z));
}

Stress2 FieldEvaluator::stresses(Complex z) const {
  const double sum = 4.0 * dphi_.eval(z).real();
  const Complex diff = 2.0 * (std::conj(z) * ddphi_.eval(z) + dpsi_.eval(z));
  return {0.5 * (sum - diff.real()), 0.5 * diff.imag(), 0.5 * (sum + diff.real())};
}

double FieldEvaluator::trace(Complex z) const { return 4.0 * dphi_.eval(z).real(); }

Complex FieldEvaluator::displacement(const Moduli& m, Complex z) const {
  const double ae2 = m.ae_norm2();
  const double c = (ae2 + m.lambda0() * m.mu()) / (m.lambda0() * ae2);
  return c * pair_.phi.eval(z) - m.ae() / (2.0 * ae2) * airy_gradient(z);
}

Complex FieldEvaluator::displacement_polar(const Moduli& m, double r, double theta) const {
  const Complex z = std::polar(r, theta);
  return std::polar(1.0, -theta) * displacement(m, z);
}

FieldSample FieldEvaluator::sample(const Moduli& m, Complex z) const {
  FieldSample out;
  out.x = z.real();
  out.y = z.imag();
  out.r = std::abs(z);
  out.theta = std::atan2(z.imag(), z.real());

  const Stress2 s = stresses(z);
  out.s11 = s.s11;
  out.s12 = s.s12;
  out.s22 = s.s22;
  const Stress2 sp = rotate_stress(s, out.theta);
  out.srr = sp.s11;
  out.srt = sp.s12;
  out.stt = sp.s22;

  const Complex w = displacement(m, z);
  out.u = w.real();
  out.v = w.imag();
  const Complex wp = std::polar(1.0, -out.theta) * w;
  out.ur = wp.real();
  out.utheta = wp.imag();

  out.airy = airy(z);
  out.trace = trace(z);
  return out;
}

double airy(const PotentialPair& pair, std::complex<double> z) {
  return FieldEvaluator(pair).airy(z);
}

std::complex<double> airy_gradient(const PotentialPair& pair, std::complex<double> z) {
  return FieldEvaluator(pair).airy_gradient(z);
}

Stress2 stresses_from_potentials(const PotentialPair& pair, std::complex<double> z) {
  return FieldEvaluator(pair).stresses(z);
}

std::complex<double> displacement(const PotentialPair& pair, const Moduli& m,
                                  std::complex<double> z) {
  return FieldEvaluator(pair).displacement(m, z);
}

std::complex<double> displacement_polar(const PotentialPair& pair, const Moduli& m, double r,
                                        double theta) {
  return FieldEvaluator(pair).displacement_polar(m, r, theta);
}

HarmonicComponents harmonic_components(const LaurentPotential& phi, std::complex<double> z) {
  const Complex value = phi.eval(z);
  const Complex rate = phi.derivative().eval(z);
  return {value.real(), value.imag(), 4.0 * rate.real(), -4.0 * rate.imag()};
}

}  // namespace elast2d
