#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "elast2d/laurent.hpp"

using namespace elast2d;
using Complex = std::complex<double>;

namespace {

LaurentPotential random_series(std::mt19937& rng, bool allow_log = false) {
  std::uniform_int_distribution<int> lo(-4, 0);
  std::uniform_int_distribution<int> span(0, 5);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  const int n_min = lo(rng);
  const int n = span(rng) + 1;
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) coeffs.emplace_back(coeff(rng), coeff(rng));
  Complex log_coeff{};
  if (allow_log && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    log_coeff = Complex(coeff(rng), coeff(rng));
  }
  return LaurentPotential(n_min, std::move(coeffs), log_coeff);
}

Complex naive_eval(const LaurentPotential& p, Complex z) {
  Complex value{};
  for (int n = p.n_min(); n <= p.n_max(); ++n) {
    value += p.coeff(n) * std::pow(z, n);
  }
  if (p.log_coeff() != Complex{}) value += p.log_coeff() * std::log(z);
  return value;
}

}  // namespace

TEST_CASE("evaluation basics") {
  CHECK(LaurentPotential::monomial(1, 1.0).eval({2.0, 1.0}) == Complex(2.0, 1.0));
  CHECK(LaurentPotential::monomial(-1, 1.0).eval(2.0) == Complex(0.5, 0.0));

  // phi of the hole problem with p = 1, R = 1: (1/4)(z + 2/z) at z = 2.
  const LaurentPotential phi(-1, {0.5, 0.0, 0.25});
  CHECK(phi.eval(2.0).real() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(phi.eval(2.0).imag() == doctest::Approx(0.0).epsilon(1e-15));

  CHECK(LaurentPotential().eval({3.0, -2.0}) == Complex{});
  CHECK(LaurentPotential().is_zero());
}

TEST_CASE("domain: z = 0 needs nonnegative powers and no log") {
  CHECK_THROWS_AS(LaurentPotential::monomial(-1, 1.0).eval(Complex{}), std::domain_error);
  CHECK_THROWS_AS(LaurentPotential(0, {1.0}, Complex(1.0, 0.0)).eval(Complex{}),
                  std::domain_error);
  // A polynomial evaluates fine at the origin.
  const LaurentPotential poly(0, {Complex(3.0, 1.0), 2.0, 5.0});
  CHECK(poly.eval(Complex{}) == Complex(3.0, 1.0));
  CHECK_FALSE(poly.needs_punctured_plane());
}

TEST_CASE("trimming keeps exponent bounds tight") {
  const LaurentPotential p(-2, {0.0, 0.0, 0.0, 3.0});
  CHECK(p.n_min() == 1);
  CHECK(p.n_max() == 1);
  CHECK_FALSE(p.needs_punctured_plane());
  CHECK(p.coeff(-2) == Complex{});
  CHECK(p.coeff(1) == Complex(3.0, 0.0));
}

TEST_CASE("derivative is the exact term-wise rule") {
  const LaurentPotential d = LaurentPotential::monomial(2, 1.0).derivative();
  CHECK(d.n_min() == 1);
  CHECK(d.n_max() == 1);
  CHECK(d.coeff(1) == Complex(2.0, 0.0));

  // Constants vanish; the result is a genuine zero series.
  CHECK(LaurentPotential::monomial(0, 5.0).derivative().is_zero());

  // A log term differentiates into 1/z.
  const LaurentPotential log_only(0, {}, Complex(2.0, 1.0));
  const LaurentPotential dlog = log_only.derivative();
  CHECK(dlog.coeff(-1) == Complex(2.0, 1.0));
  CHECK(dlog.log_coeff() == Complex{});
}

TEST_CASE("antiderivative: integration constant zero, 1/z becomes a log") {
  const LaurentPotential a = LaurentPotential::monomial(-1, 1.0).antiderivative();
  CHECK(a.log_coeff() == Complex(1.0, 0.0));
  CHECK(a.is_zero() == false);
  CHECK(a.coeff(0) == Complex{});

  CHECK_THROWS_AS(LaurentPotential(0, {1.0}, Complex(1.0, 0.0)).antiderivative(),
                  std::domain_error);

  // psi of the hole problem (p = 1, R = 1): -(1/2)(z + 1/z - 1/z^3)
  // integrates to -(1/2)(z^2/2 + ln z + 1/(2 z^2)).
  const LaurentPotential psi(-3, {0.5, 0.0, -0.5, 0.0, -0.5});
  const LaurentPotential chi = psi.antiderivative();
  CHECK(chi.coeff(2) == Complex(-0.25, 0.0));
  CHECK(chi.coeff(-2) == Complex(-0.25, 0.0));
  CHECK(chi.log_coeff() == Complex(-0.5, 0.0));
  CHECK(chi.coeff(0) == Complex{});
  CHECK(chi.coeff(1) == Complex{});
}

TEST_CASE("derivative(antiderivative(p)) == p on random series") {
  std::mt19937 rng(91);
  for (int i = 0; i < 100; ++i) {
    const LaurentPotential p = random_series(rng);
    const LaurentPotential round = p.antiderivative().derivative();
    for (int n = std::min(p.n_min(), round.n_min()); n <= std::max(p.n_max(), round.n_max());
         ++n) {
      CHECK(std::abs(round.coeff(n) - p.coeff(n)) <= 1e-15 * (1.0 + std::abs(p.coeff(n))));
    }
    CHECK(round.log_coeff() == Complex{});
  }
}

TEST_CASE("Horner evaluation agrees with the naive power sum") {
  std::mt19937 rng(92);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const LaurentPotential p = random_series(rng, /*allow_log=*/true);
    Complex z(re(rng), re(rng));
    if (std::abs(z) < 0.3) z += Complex(1.0, 1.0);
    const Complex a = p.eval(z);
    const Complex b = naive_eval(p, z);
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
  }
}

TEST_CASE("series sum and scaling evaluate pointwise") {
  std::mt19937 rng(93);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const LaurentPotential p = random_series(rng, true);
    const LaurentPotential q = random_series(rng, true);
    const Complex scale(re(rng), re(rng));
    Complex z(re(rng), re(rng));
    if (std::abs(z) < 0.3) z += Complex(1.5, 0.5);
    const Complex lhs = (p + q).eval(z);
    const Complex rhs = p.eval(z) + q.eval(z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    const Complex lhs2 = (scale * p).eval(z);
    const Complex rhs2 = scale * p.eval(z);
    CHECK(std::abs(lhs2 - rhs2) <= 1e-12 * (1.0 + std::abs(rhs2)));
  }
}
