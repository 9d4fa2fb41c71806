#pragma once

#include <complex>
#include <vector>

namespace elast2d {

/// A finite Laurent series
///
///   f(z) = sum_{n = n_min}^{n_max} c_n z^n  +  log_coeff * ln(z)
///
/// representing an analytic function on an annulus around the origin. The
/// ln(z) term uses the principal branch and only appears as the
/// antiderivative of a 1/z term. Exponent bookkeeping is exact: derivative
/// and antiderivative are term-wise series operations, never truncations.
class LaurentPotential {
public:
  using Complex = std::complex<double>;

  /// The zero series.
  LaurentPotential() = default;

  /// Series with coefficients c_{n_min}, c_{n_min + 1}, ... in order.
  LaurentPotential(int n_min, std::vector<Complex> coeffs, Complex log_coeff = {});

  /// Single term c * z^n.
  static LaurentPotential monomial(int n, Complex c);

  bool is_zero() const { return coeffs_.empty() && log_coeff_ == Complex{}; }
  int n_min() const { return n_min_; }
  /// Inclusive upper exponent bound; n_max() < n_min() for an empty series.
  int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }

  /// c_n, zero outside the stored range.
  Complex coeff(int n) const;
  Complex log_coeff() const { return log_coeff_; }

  /// True when evaluation is undefined at z = 0 (negative powers or log term).
  bool needs_punctured_plane() const;

  /// Evaluate at z. Throws std::domain_error at z = 0 when the series needs
  /// the punctured plane.
  Complex eval(Complex z) const;

  /// Term-wise derivative; a log term differentiates into c/z.
  LaurentPotential derivative() const;

  /// Term-wise antiderivative with integration constant zero; c_{-1}/z
  /// integrates into a log term. Throws std::domain_error if the series
  /// already carries a log term (z ln z - z is not representable).
  LaurentPotential antiderivative() const;

  friend LaurentPotential operator+(const LaurentPotential& lhs, const LaurentPotential& rhs);
  friend LaurentPotential operator*(Complex scale, const LaurentPotential& p);

private:
  void trim();

  int n_min_ = 0;
  std::vector<Complex> coeffs_;  // coeffs_[i] = c_{n_min_ + i}
  Complex log_coeff_{};
};

/// The potential pair (phi, psi) of a plane-elastic field; psi is the
/// derivative of the second stress function chi.
struct PotentialPair {
  LaurentPotential phi;
  LaurentPotential psi;
};

}  // namespace elast2d
