#pragma once

#include <array>
#include <complex>

namespace elast2d {

/// Elastic moduli of the asymmetric plane-stress law.
///
/// The material is described by three constants: lambda0 = lambda + mu (the
/// trace modulus, required positive), the shear modulus mu >= 0, and the
/// asymmetric modulus mu0 (any real). Together mu and mu0 form the complex
/// modulus ae = mu + i*mu0, which must be nonzero so that the constitutive
/// system stays invertible. mu = 0 is admitted (the degenerate regime needs
/// it) but operations that rely on the classical Kolosov constant kappa0
/// reject it.
class Moduli {
public:
  Moduli(double lambda0, double mu, double mu0);

  /// Build from the Lame constant lambda instead of lambda0 = lambda + mu.
  static Moduli from_lame(double lambda, double mu, double mu0);

  double lambda0() const { return lambda0_; }
  double mu() const { return mu_; }
  double mu0() const { return mu0_; }

  /// lambda = lambda0 - mu.
  double lambda() const { return lambda0_ - mu_; }
  /// Complex modulus ae = mu + i*mu0.
  std::complex<double> ae() const { return {mu_, mu0_}; }
  /// |ae|^2 = mu^2 + mu0^2.
  double ae_norm2() const { return mu_ * mu_ + mu0_ * mu0_; }
  /// Classical constant (lambda + 3 mu)/(lambda + mu); requires mu > 0.
  double kappa0() const;

private:
  double lambda0_;
  double mu_;
  double mu0_;
};

/// Symmetric 2x2 strain tensor, three independent components (e21 == e12).
struct Strain2 {
  double e11 = 0;
  double e12 = 0;
  double e22 = 0;

  double trace() const { return e11 + e22; }
};

/// Symmetric 2x2 stress tensor, three independent components (s21 == s12).
struct Stress2 {
  double s11 = 0;
  double s12 = 0;
  double s22 = 0;

  double trace() const { return s11 + s22; }
};

/// The four partials of the displacement field (u, v).
struct DisplacementGradient {
  double ux = 0;
  double uy = 0;
  double vx = 0;
  double vy = 0;

  Strain2 strain() const { return {ux, 0.5 * (uy + vx), vy}; }
  double divergence() const { return ux + vy; }
};

/// Minimal 3x3 matrix backing the constitutive system in the
/// (e11, e12, e22) -> (s11, s12, s22) basis.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[static_cast<size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(3 * i + j)]; }

  static Mat3 identity();
  double det() const;

  friend Mat3 operator*(const Mat3& lhs, const Mat3& rhs);
};

/// Max-norm of the elementwise difference.
double max_abs_diff(const Mat3& lhs, const Mat3& rhs);

/// Forward constitutive law:
///   s11 = (mu+lambda0) e11 + 2 mu0 e12 + (lambda0-mu) e22
///   s12 = -mu0 e11 + 2 mu e12 + mu0 e22
///   s22 = (lambda0-mu) e11 - 2 mu0 e12 + (lambda0+mu) e22
/// Satisfies s11 + s22 = 2 lambda0 (e11 + e22).
Stress2 stress_from_strain(const Moduli& m, const Strain2& e);

/// Inverse constitutive law; exact inverse of stress_from_strain.
Strain2 strain_from_stress(const Moduli& m, const Stress2& s);

/// The system matrix A with det A = 8 lambda0 (mu0^2 + mu^2).
Mat3 constitutive_matrix(const Moduli& m);

/// Closed-form A^-1; product with constitutive_matrix is the identity.
Mat3 inverse_constitutive_matrix(const Moduli& m);

struct StressDecomposition {
  Stress2 trace_part;     // theta * lambda0 * I
  Stress2 deviator_part;  // M * eps0, trace-free
};

/// Split the stress of a displacement gradient into its trace part and the
/// trace-free part M * eps0. The parts sum to stress_from_strain of the
/// extracted strain.
StressDecomposition decompose_stress(const Moduli& m, const DisplacementGradient& g);

/// Residual of the polar-factor identity M M^T = (mu0^2 + mu^2) I, max-norm.
/// Zero for every valid modulus up to rounding; M / sqrt(mu0^2 + mu^2) is the
/// orthogonal factor.
double check_polar_factor(const Moduli& m);

/// Components of s in a frame rotated by +angle (x' axis at `angle` from x).
/// With angle = theta this yields the polar components: s11' = srr,
/// s12' = srt, s22' = stt. Inverse rotation: pass -angle.
Stress2 rotate_stress(const Stress2& s, double angle);

}  // namespace elast2d
