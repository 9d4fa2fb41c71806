#pragma once

#include "elast2d/constitutive.hpp"
#include "elast2d/kolosov.hpp"
#include "elast2d/laurent.hpp"

namespace elast2d {

/// Stress components in the local (e_r, e_theta) frame.
struct PolarStress {
  double rr = 0;
  double tt = 0;
  double rt = 0;
};

/// Displacement components in the local (e_r, e_theta) frame.
struct PolarDisplacement {
  double ur = 0;
  double utheta = 0;
};

/// Infinite plate with a traction-free circular hole of radius R under
/// remote uniaxial tension p along x. Fields are defined on the exterior
/// r >= R; evaluation inside the hole is a domain error.
class KirschProblem {
public:
  KirschProblem(double p, double radius, Moduli m);

  double tension() const { return p_; }
  double radius() const { return radius_; }
  const Moduli& moduli() const { return m_; }

  /// The potential pair of the hole solution:
  ///   phi(z) = (p/4) (z + 2 R^2 / z)
  ///   psi(z) = -(p/2) (z + R^2 / z - R^4 / z^3)
  PotentialPair potentials() const;

  /// Evaluator on potentials(), for shared use across grid sweeps.
  FieldEvaluator evaluator() const;

  /// Closed-form polar stresses. Independent of the moduli:
  ///   srr = p/2 (1 - R^2/r^2) + p/2 (1 - 4R^2/r^2 + 3R^4/r^4) cos 2theta
  ///   stt = p/2 (1 + R^2/r^2) - p/2 (1 + 3R^4/r^4) cos 2theta
  ///   srt = -p/2 (1 + 2R^2/r^2 - 3R^4/r^4) sin 2theta
  PolarStress stresses_polar(double r, double theta) const;

  /// Displacements from the complex-potential pipeline (the authoritative
  /// route). Valid for any nonzero complex modulus, including mu = 0.
  PolarDisplacement displacements(double r, double theta) const;

  /// The classical closed forms; require mu > 0 and diverge as mu -> 0.
  PolarDisplacement classical_displacements(double r, double theta) const;

  /// Hole-boundary displacements
  ///   ur     = c (1 + 2 cos 2theta)
  ///   utheta = -2 c sin 2theta
  /// with c = boundary_coefficient().
  PolarDisplacement boundary_displacements(double theta) const;

  /// c = p R (mu0^2 + 2 mu^2 + lambda mu) / (4 (lambda + mu)(mu0^2 + mu^2)).
  double boundary_coefficient() const;

  /// Classical counterpart p R (lambda + 2 mu) / (4 mu (lambda + mu));
  /// requires mu > 0.
  double classical_boundary_coefficient() const;

  /// All field quantities at (r, theta): stresses from the closed forms,
  /// displacements and Airy data from the potential pipeline.
  FieldSample sample(double r, double theta) const;
  /// Same, with a caller-held evaluator (must be built on potentials()).
  FieldSample sample(const FieldEvaluator& ev, double r, double theta) const;

private:
  void require_exterior(double r) const;

  double p_;
  double radius_;
  Moduli m_;
};

/// Boundary displacements in the mu -> 0 limit (mu0 != 0 regime):
///   ur -> p R / (4 lambda) (1 + 2 cos 2theta)
///   utheta -> -p R / (2 lambda) sin 2theta
/// Requires lambda > 0.
PolarDisplacement boundary_limit_mu_to_zero(double p, double radius, double lambda, double theta);

}  // namespace elast2d
