#pragma once

#include <complex>

#include "elast2d/constitutive.hpp"
#include "elast2d/laurent.hpp"

namespace elast2d {

/// Local data of the analytic potential phi at a point: its real and
/// imaginary parts and the stress trace they generate.
struct HarmonicComponents {
  double p = 0;                // Re phi
  double q = 0;                // Im phi
  double trace = 0;            // 4 Re phi' = s11 + s22
  double trace_conjugate = 0;  // -4 Im phi'
};

/// Every field quantity at one point; the flat layout mirrors the CSV
/// export columns.
struct FieldSample {
  double x = 0, y = 0;
  double r = 0, theta = 0;
  double srr = 0, stt = 0, srt = 0;
  double s11 = 0, s12 = 0, s22 = 0;
  double ur = 0, utheta = 0;
  double u = 0, v = 0;
  double airy = 0;   // U
  double trace = 0;  // Q = s11 + s22
};

/// Point evaluator for a fixed potential pair. Precomputes the derivative
/// series (phi', phi'', psi', chi = integral of psi) once so that grid
/// sweeps pay only for series evaluation per point. Immutable and safe to
/// share across threads.
class FieldEvaluator {
public:
  using Complex = std::complex<double>;

  explicit FieldEvaluator(PotentialPair pair);

  const PotentialPair& pair() const { return pair_; }

  /// Airy stress function U = Re(conj(z) phi(z) + chi(z)). Single-valued on
  /// the punctured plane: only ln|z| of the log term enters the real part.
  double airy(Complex z) const;

  /// U_x + i U_y = phi(z) + z conj(phi'(z)) + conj(psi(z)).
  Complex airy_gradient(Complex z) const;

  /// Stresses from the two Kolosov relations
  ///   s11 + s22 = 4 Re phi'(z)
  ///   s22 - s11 + 2 i s12 = 2 (conj(z) phi''(z) + psi'(z)).
  Stress2 stresses(Complex z) const;

  /// s11 + s22 = 4 Re phi'(z).
  double trace(Complex z) const;

  /// Complex displacement u + iv:
  ///   u + iv = (|ae|^2 + lambda0 mu) / (lambda0 |ae|^2) * phi(z)
  ///            - ae / (2 |ae|^2) * (U_x + i U_y).
  /// Requires a nonzero complex modulus; z = 0 follows the series domain.
  Complex displacement(const Moduli& m, Complex z) const;

  /// e^{-i theta} (u + iv) at z = r e^{i theta}: (u_r, u_theta) packed as a
  /// complex number.
  Complex displacement_polar(const Moduli& m, double r, double theta) const;

  /// All field quantities at z; polar components use r = |z|,
  /// theta = atan2(y, x).
  FieldSample sample(const Moduli& m, Complex z) const;

private:
  PotentialPair pair_;
  LaurentPotential dphi_;
  LaurentPotential ddphi_;
  LaurentPotential dpsi_;
  LaurentPotential chi_;
};

// Free-function forms of the operations above; each builds a local
// FieldEvaluator, so prefer the class for repeated evaluation.
double airy(const PotentialPair& pair, std::complex<double> z);
std::complex<double> airy_gradient(const PotentialPair& pair, std::complex<double> z);
Stress2 stresses_from_potentials(const PotentialPair& pair, std::complex<double> z);
std::complex<double> displacement(const PotentialPair& pair, const Moduli& m,
                                  std::complex<double> z);
std::complex<double> displacement_polar(const PotentialPair& pair, const Moduli& m, double r,
                                        double theta);

/// (p, q, trace, conjugate rate) of phi at z; trace equals s11 + s22 of any
/// pair built on this phi.
HarmonicComponents harmonic_components(const LaurentPotential& phi, std::complex<double> z);

}  // namespace elast2d
