#include "elast2d/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace elast2d {

using Complex = LaurentPotential::Complex;

LaurentPotential::LaurentPotential(int n_min, std::vector<Complex> coeffs, Complex log_coeff)
    : n_min_(n_min), coeffs_(std::move(coeffs)), log_coeff_(log_coeff) {
  trim();
}

LaurentPotential LaurentPotential::monomial(int n, Complex c) {
  return LaurentPotential(n, {c});
}

void LaurentPotential::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == Complex{}) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    n_min_ = 0;
    return;
  }
  size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == Complex{}) --tail;
  coeffs_.erase(coeffs_.begin() + static_cast<long>(tail), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  n_min_ += static_cast<int>(lead);
}

Complex LaurentPotential::coeff(int n) const {
  if (n < n_min_ || n > n_max()) return {};
  return coeffs_[static_cast<size_t>(n - n_min_)];
}

bool LaurentPotential::needs_punctured_plane() const {
  return n_min_ < 0 || log_coeff_ != Complex{};
}

Complex LaurentPotential::eval(Complex z) const {
  if (z == Complex{} && needs_punctured_plane()) {
    throw std::domain_error("LaurentPotential::eval: z = 0 with negative powers or log term");
  }
  Complex value{};
  // Nonnegative powers, Horner from the top.
  if (n_max() >= 0) {
    Complex acc{};
    for (int n = n_max(); n >= 0; --n) {
      acc = acc * z + coeff(n);
    }
    value += acc;
  }
  // Negative powers, Horner in w = 1/z. The chain always runs through
  // n = -1 so that each step contributes exactly one factor of w.
  if (n_min_ < 0) {
    const Complex w = 1.0 / z;
    Complex acc{};
    for (int n = n_min_; n <= -1; ++n) {
      acc = (acc + coeff(n)) * w;
    }
    value += acc;
  }
  if (log_coeff_ != Complex{}) {
    value += log_coeff_ * std::log(z);
  }
  return value;
}

LaurentPotential LaurentPotential::derivative() const {
  std::vector<Complex> out;
  int out_min = 0;
  if (!coeffs_.empty()) {
    out_min = n_min_ - 1;
    out.resize(coeffs_.size());
    for (int n = n_min_; n <= n_max(); ++n) {
      out[static_cast<size_t>(n - n_min_)] = static_cast<double>(n) * coeff(n);
    }
  }
  LaurentPotential d(out_min, std::move(out));
  if (log_coeff_ != Complex{}) {
    d = d + monomial(-1, log_coeff_);
  }
  return d;
}

LaurentPotential LaurentPotential::antiderivative() const {
  if (log_coeff_ != Complex{}) {
    throw std::domain_error("LaurentPotential::antiderivative: log term has no series antiderivative");
  }
  if (coeffs_.empty()) return {};
  std::vector<Complex> out(coeffs_.size() + 1);
  Complex log_out{};
  const int out_min = n_min_;  // term n goes to exponent n + 1 >= n_min
  for (int n = n_min_; n <= n_max(); ++n) {
    if (n == -1) {
      log_out = coeff(n);
    } else {
      out[static_cast<size_t>(n + 1 - out_min)] = coeff(n) / static_cast<double>(n + 1);
    }
  }
  return LaurentPotential(out_min, std::move(out), log_out);
}

LaurentPotential operator+(const LaurentPotential& lhs, const LaurentPotential& rhs) {
  if (lhs.coeffs_.empty() && rhs.coeffs_.empty()) {
    return LaurentPotential(0, {}, lhs.log_coeff_ + rhs.log_coeff_);
  }
  const int lo = std::min(lhs.coeffs_.empty() ? rhs.n_min_ : lhs.n_min_,
                          rhs.coeffs_.empty() ? lhs.n_min_ : rhs.n_min_);
  const int hi = std::max(lhs.coeffs_.empty() ? rhs.n_max() : lhs.n_max(),
                          rhs.coeffs_.empty() ? lhs.n_max() : rhs.n_max());
  std::vector<Complex> out(static_cast<size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    out[static_cast<size_t>(n - lo)] = lhs.coeff(n) + rhs.coeff(n);
  }
  return LaurentPotential(lo, std::move(out), lhs.log_coeff_ + rhs.log_coeff_);
}

LaurentPotential operator*(Complex scale, const LaurentPotential& p) {
  std::vector<Complex> out(p.coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = scale * p.coeffs_[i];
  return LaurentPotential(p.n_min_, std::move(out), scale * p.log_coeff_);
}

}  // namespace elast2d
