#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "elast2d/constitutive.hpp"

using namespace elast2d;

namespace {

Moduli random_moduli(std::mt19937& rng) {
  std::uniform_real_distribution<double> lambda0_dist(0.1, 10.0);
  std::uniform_real_distribution<double> mu_dist(0.01, 10.0);
  std::uniform_real_distribution<double> mu0_dist(-10.0, 10.0);
  return Moduli(lambda0_dist(rng), mu_dist(rng), mu0_dist(rng));
}

Strain2 random_strain(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  return {dist(rng), dist(rng), dist(rng)};
}

Stress2 random_stress(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  return {dist(rng), dist(rng), dist(rng)};
}

double inf_norm(const Strain2& e) {
  return std::max({std::abs(e.e11), std::abs(e.e12), std::abs(e.e22)});
}

double inf_norm(const Stress2& s) {
  return std::max({std::abs(s.s11), std::abs(s.s12), std::abs(s.s22)});
}

}  // namespace

TEST_CASE("moduli invariants") {
  CHECK_THROWS_AS(Moduli(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Moduli(-1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Moduli(1.0, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Moduli(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(Moduli(1.0, 0.0, 1.0));  // degenerate shear regime is admitted

  const Moduli m = Moduli::from_lame(1.0, 1.0, 0.5);
  CHECK(m.lambda0() == 2.0);
  CHECK(m.lambda() == 1.0);
  CHECK(m.ae() == std::complex<double>(1.0, 0.5));
  CHECK(m.ae_norm2() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(m.kappa0() == doctest::Approx(2.0).epsilon(1e-15));

  const Moduli degenerate(1.0, 0.0, 1.0);
  CHECK_THROWS_AS(degenerate.kappa0(), std::domain_error);
}

TEST_CASE("stress from strain matches the hand-evaluated cases") {
  const Stress2 a = stress_from_strain(Moduli(2.0, 1.0, 0.0), {1.0, 0.0, 0.0});
  CHECK(a.s11 == doctest::Approx(3.0));
  CHECK(a.s12 == doctest::Approx(0.0));
  CHECK(a.s22 == doctest::Approx(1.0));

  const Stress2 b = stress_from_strain(Moduli(2.0, 1.0, 1.0), {1.0, 0.0, 0.0});
  CHECK(b.s11 == doctest::Approx(3.0));
  CHECK(b.s12 == doctest::Approx(-1.0));
  CHECK(b.s22 == doctest::Approx(1.0));

  const Stress2 c = stress_from_strain(Moduli(2.0, 1.0, 1.0), {0.0, 1.0, 0.0});
  CHECK(c.s11 == doctest::Approx(2.0));
  CHECK(c.s12 == doctest::Approx(2.0));
  CHECK(c.s22 == doctest::Approx(-2.0));
  CHECK(c.trace() == doctest::Approx(0.0));

  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Stress2 z = stress_from_strain(random_moduli(rng), {0.0, 0.0, 0.0});
    CHECK(inf_norm(z) == 0.0);
  }
}

TEST_CASE("strain from stress inverts and handles the hydrostatic case") {
  const Strain2 e = strain_from_stress(Moduli(2.0, 1.0, 1.0), {3.0, -1.0, 1.0});
  CHECK(e.e11 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(e.e12 == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(e.e22 == doctest::Approx(0.0).epsilon(1e-13));

  // Hydrostatic stress: e11 = e22 = (s11 + s22)/(4 lambda0), e12 = 0, for any
  // shear moduli.
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::uniform_real_distribution<double> mu_dist(0.01, 10.0);
    std::uniform_real_distribution<double> mu0_dist(-10.0, 10.0);
    const Moduli m(2.0, mu_dist(rng), mu0_dist(rng));
    const Strain2 h = strain_from_stress(m, {1.0, 0.0, 1.0});
    CHECK(h.e11 == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(h.e12 == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(h.e22 == doctest::Approx(0.25).epsilon(1e-13));
  }
}

TEST_CASE("constitutive round trip over random moduli and strains") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Moduli m = random_moduli(rng);
    const Strain2 e = random_strain(rng);
    const Strain2 back = strain_from_stress(m, stress_from_strain(m, e));
    const double scale = std::max(inf_norm(e), 1e-30);
    CHECK(std::abs(back.e11 - e.e11) <= 1e-12 * scale);
    CHECK(std::abs(back.e12 - e.e12) <= 1e-12 * scale);
    CHECK(std::abs(back.e22 - e.e22) <= 1e-12 * scale);

    const Stress2 s = random_stress(rng);
    const Stress2 s_back = stress_from_strain(m, strain_from_stress(m, s));
    const double s_scale = std::max(inf_norm(s), 1e-30);
    CHECK(std::abs(s_back.s11 - s.s11) <= 1e-12 * s_scale);
    CHECK(std::abs(s_back.s12 - s.s12) <= 1e-12 * s_scale);
    CHECK(std::abs(s_back.s22 - s.s22) <= 1e-12 * s_scale);
  }
}

TEST_CASE("trace identity s11 + s22 = 2 lambda0 theta") {
  std::mt19937 rng(43);
  for (int i = 0; i < 500; ++i) {
    const Moduli m = random_moduli(rng);
    const Strain2 e = random_strain(rng);
    const Stress2 s = stress_from_strain(m, e);
    const double expected = 2.0 * m.lambda0() * e.trace();
    CHECK(std::abs(s.trace() - expected) <=
          1e-13 * std::max({1.0, std::abs(expected), inf_norm(s)}));
  }
}

TEST_CASE("constitutive matrix reproduces the printed entries and the operator") {
  const Mat3 a = constitutive_matrix(Moduli(2.0, 1.0, 1.0));
  const double expected[9] = {3, 2, 1, -1, 2, 1, 1, -2, 3};
  for (int i = 0; i < 9; ++i) CHECK(a.a[static_cast<size_t>(i)] == expected[i]);

  const Mat3 diag = constitutive_matrix(Moduli(1.0, 1.0, 0.0));
  const double expected_diag[9] = {2, 0, 0, 0, 2, 0, 0, 0, 2};
  for (int i = 0; i < 9; ++i) CHECK(diag.a[static_cast<size_t>(i)] == expected_diag[i]);

  std::mt19937 rng(44);
  for (int i = 0; i < 200; ++i) {
    const Moduli m = random_moduli(rng);
    const Strain2 e = random_strain(rng);
    const Mat3 mat = constitutive_matrix(m);
    const Stress2 s = stress_from_strain(m, e);
    const double via_matrix[3] = {
        mat(0, 0) * e.e11 + mat(0, 1) * e.e12 + mat(0, 2) * e.e22,
        mat(1, 0) * e.e11 + mat(1, 1) * e.e12 + mat(1, 2) * e.e22,
        mat(2, 0) * e.e11 + mat(2, 1) * e.e12 + mat(2, 2) * e.e22,
    };
    const double scale = std::max(inf_norm(s), 1e-30);
    CHECK(std::abs(via_matrix[0] - s.s11) <= 1e-13 * scale);
    CHECK(std::abs(via_matrix[1] - s.s12) <= 1e-13 * scale);
    CHECK(std::abs(via_matrix[2] - s.s22) <= 1e-13 * scale);
  }
}

TEST_CASE("determinant identity det A = 8 lambda0 (mu0^2 + mu^2)") {
  std::mt19937 rng(45);
  for (int i = 0; i < 200; ++i) {
    const Moduli m = random_moduli(rng);
    const double expected = 8.0 * m.lambda0() * m.ae_norm2();
    CHECK(constitutive_matrix(m).det() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("inverse constitutive matrix") {
  const Mat3 inv = inverse_constitutive_matrix(Moduli(2.0, 1.0, 1.0));
  const double expected[9] = {4, -4, 0, 2, 4, -2, 0, 4, 4};
  for (int i = 0; i < 9; ++i) {
    CHECK(inv.a[static_cast<size_t>(i)] ==
          doctest::Approx(expected[i] / 16.0).epsilon(1e-14));
  }

  std::mt19937 rng(46);
  for (int i = 0; i < 100; ++i) {
    const Moduli m = random_moduli(rng);
    const Mat3 prod = constitutive_matrix(m) * inverse_constitutive_matrix(m);
    CHECK(max_abs_diff(prod, Mat3::identity()) <= 1e-12);
  }

  // mu0 = 0 reduces to the classical plane-stress compliance.
  for (int i = 0; i < 50; ++i) {
    std::uniform_real_distribution<double> lambda0_dist(0.1, 10.0);
    std::uniform_real_distribution<double> mu_dist(0.01, 10.0);
    const double l0 = lambda0_dist(rng), mu = mu_dist(rng);
    const Mat3 inv0 = inverse_constitutive_matrix(Moduli(l0, mu, 0.0));
    const double diag = 0.25 / l0 + 0.25 / mu;
    const double off = 0.25 / l0 - 0.25 / mu;
    CHECK(inv0(0, 0) == doctest::Approx(diag).epsilon(1e-12));
    CHECK(inv0(0, 2) == doctest::Approx(off).epsilon(1e-12));
    CHECK(inv0(2, 0) == doctest::Approx(off).epsilon(1e-12));
    CHECK(inv0(2, 2) == doctest::Approx(diag).epsilon(1e-12));
    CHECK(inv0(1, 1) == doctest::Approx(0.5 / mu).epsilon(1e-12));
    CHECK(inv0(0, 1) == doctest::Approx(0.0));
    CHECK(inv0(1, 0) == doctest::Approx(0.0));
  }
}

TEST_CASE("mu0 = 0 reduces the forward law to classical isotropic elasticity") {
  std::mt19937 rng(47);
  for (int i = 0; i < 200; ++i) {
    std::uniform_real_distribution<double> lambda0_dist(0.1, 10.0);
    std::uniform_real_distribution<double> mu_dist(0.01, 10.0);
    const double l0 = lambda0_dist(rng), mu = mu_dist(rng);
    const Moduli m(l0, mu, 0.0);
    const Strain2 e = random_strain(rng);
    const Stress2 s = stress_from_strain(m, e);
    const double lambda = l0 - mu;
    const double scale = std::max(inf_norm(s), 1e-30);
    CHECK(std::abs(s.s11 - (lambda * e.trace() + 2.0 * mu * e.e11)) <= 1e-13 * scale);
    CHECK(std::abs(s.s12 - 2.0 * mu * e.e12) <= 1e-13 * scale);
    CHECK(std::abs(s.s22 - (lambda * e.trace() + 2.0 * mu * e.e22)) <= 1e-13 * scale);
  }
}

TEST_CASE("stress decomposition into trace part and trace-free part") {
  const Moduli m(2.0, 1.0, 1.0);

  const auto dilation = decompose_stress(m, {1.0, 0.0, 0.0, 1.0});
  CHECK(dilation.trace_part.s11 == doctest::Approx(4.0));
  CHECK(dilation.trace_part.s12 == doctest::Approx(0.0));
  CHECK(dilation.trace_part.s22 == doctest::Approx(4.0));
  CHECK(inf_norm(dilation.deviator_part) == 0.0);

  const auto sheared = decompose_stress(m, {1.0, 0.0, 0.0, -1.0});
  CHECK(inf_norm(sheared.trace_part) == 0.0);
  CHECK(sheared.deviator_part.s11 == doctest::Approx(2.0));
  CHECK(sheared.deviator_part.s12 == doctest::Approx(-2.0));
  CHECK(sheared.deviator_part.s22 == doctest::Approx(-2.0));

  std::mt19937 rng(48);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Moduli mm = random_moduli(rng);
    const DisplacementGradient g{dist(rng), dist(rng), dist(rng), dist(rng)};
    const auto parts = decompose_stress(mm, g);
    CHECK(parts.deviator_part.trace() == 0.0);
    const Stress2 total = stress_from_strain(mm, g.strain());
    const double scale = std::max(inf_norm(total), 1e-30);
    CHECK(std::abs(parts.trace_part.s11 + parts.deviator_part.s11 - total.s11) <=
          1e-13 * scale);
    CHECK(std::abs(parts.trace_part.s12 + parts.deviator_part.s12 - total.s12) <=
          1e-13 * scale);
    CHECK(std::abs(parts.trace_part.s22 + parts.deviator_part.s22 - total.s22) <=
          1e-13 * scale);
  }
}

TEST_CASE("polar factor: M M^T = (mu0^2 + mu^2) I") {
  CHECK(check_polar_factor(Moduli(2.0, 1.0, 1.0)) == 0.0);
  CHECK(check_polar_factor(Moduli(2.0, 1.0, 0.0)) == 0.0);
  CHECK(check_polar_factor(Moduli(2.0, 3.0, 4.0)) == 0.0);

  std::mt19937 rng(49);
  for (int i = 0; i < 200; ++i) {
    const Moduli m = random_moduli(rng);
    CHECK(check_polar_factor(m) <= 1e-14 * m.ae_norm2());
  }
}

TEST_CASE("stress rotation round trip and axis cases") {
  std::mt19937 rng(50);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 200; ++i) {
    const Stress2 s{dist(rng), dist(rng), dist(rng)};
    const double a = angle(rng);
    const Stress2 back = rotate_stress(rotate_stress(s, a), -a);
    const double scale = std::max(inf_norm(s), 1e-30);
    CHECK(std::abs(back.s11 - s.s11) <= 1e-14 * scale);
    CHECK(std::abs(back.s12 - s.s12) <= 1e-14 * scale);
    CHECK(std::abs(back.s22 - s.s22) <= 1e-14 * scale);
    // The trace is rotation invariant.
    const Stress2 rotated = rotate_stress(s, a);
    CHECK(rotated.trace() == doctest::Approx(s.trace()).epsilon(1e-12));
  }

  // Uniaxial tension viewed from the transverse direction.
  const Stress2 polar = rotate_stress({1.0, 0.0, 0.0}, 1.5707963267948966);
  CHECK(polar.s11 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(polar.s22 == doctest::Approx(1.0).epsilon(1e-15));
}
