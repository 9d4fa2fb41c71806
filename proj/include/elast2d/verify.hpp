#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elast2d/constitutive.hpp"
#include "elast2d/laurent.hpp"

namespace elast2d::verify {

using ScalarField = std::function<double(double, double)>;
using ComplexField = std::function<std::complex<double>(double, double)>;
using StressField = std::function<Stress2(double, double)>;
using StrainField = std::function<Strain2(double, double)>;

/// Acceptance window for the estimated convergence order of a second-order
/// central scheme.
inline constexpr double kOrderWindowMin = 1.8;
inline constexpr double kOrderWindowMax = 2.2;

/// Finite-difference configuration. The scheme is fixed: central,
/// second-order stencils, refined over `richardson_levels` levels
/// h, h/2, h/4, ... for the order estimate. Points must keep the widest
/// stencil (offset 2h) inside the field's domain.
struct StencilConfig {
  double h = 1e-2;            // base step, in length units
  int richardson_levels = 3;  // >= 2
  double tolerance = 1e-4;    // on the normalized finest-level residual
  double length_scale = 1.0;  // problem length scale (R for hole problems)
};

/// Outcome of one identity check.
///
/// Residuals are max-norms over the sample set, one per refinement level.
/// `normalized` is the finest-level residual made dimensionless with the
/// field scale and length scale. `noise_floor` is the rounding floor of the
/// stencil at the finest level (sum of absolute stencil weights times
/// machine epsilon); levels that are not safely above their floor are
/// excluded from the least-squares order fit, and the pass threshold never
/// demands accuracy below that floor. The order is reported only when at
/// least two levels sit above rounding noise.
struct ResidualReport {
  std::string check;
  std::vector<double> steps;
  std::vector<double> residuals;
  double field_scale = 0;
  double normalized = 0;
  double noise_floor = 0;
  std::optional<double> order;
  double threshold = 0;
  bool passed = false;
};

/// ADL hook for nlohmann::json (and any basic_json instantiation).
template <typename BasicJsonType>
void to_json(BasicJsonType& j, const ResidualReport& report) {
  j = BasicJsonType{
      {"check", report.check},       {"steps", report.steps},
      {"residuals", report.residuals}, {"field_scale", report.field_scale},
      {"normalized", report.normalized}, {"noise_floor", report.noise_floor},
      {"threshold", report.threshold}, {"passed", report.passed},
  };
  if (report.order) {
    j["order"] = *report.order;
  } else {
    j["order"] = nullptr;
  }
}

/// | d s11/dx + d s12/dy | and | d s12/dx + d s22/dy |.
ResidualReport check_equilibrium(const StressField& field,
                                 std::span<const std::complex<double>> points,
                                 const StencilConfig& cfg);

/// | d2 e11/dy2 + d2 e22/dx2 - 2 d2 e12/dxdy |.
ResidualReport check_compatibility(const StrainField& field,
                                   std::span<const std::complex<double>> points,
                                   const StencilConfig& cfg);

/// | Laplacian of the stress trace |.
ResidualReport check_laplace_trace(const ScalarField& trace,
                                   std::span<const std::complex<double>> points,
                                   const StencilConfig& cfg);

/// | Bilaplacian of the Airy function |, 13-point stencil.
ResidualReport check_biharmonic(const ScalarField& airy,
                                std::span<const std::complex<double>> points,
                                const StencilConfig& cfg);

/// Cauchy-Riemann residuals of phi = p + iq, plus | trace - 4 dp/dx | when a
/// trace field is supplied.
ResidualReport check_cauchy_riemann(const ComplexField& phi, const ScalarField* trace,
                                    std::span<const std::complex<double>> points,
                                    const StencilConfig& cfg);

/// FD strains of the displacement field against directly evaluated strains.
ResidualReport check_displacement_consistency(const ComplexField& displacement,
                                              const StrainField& strain,
                                              std::span<const std::complex<double>> points,
                                              const StencilConfig& cfg);

/// End-to-end form: displacement from the potential pipeline, strains from
/// the inverse constitutive law applied to the Kolosov stresses.
ResidualReport check_displacement_consistency(const PotentialPair& pair, const Moduli& m,
                                              std::span<const std::complex<double>> points,
                                              const StencilConfig& cfg);

}  // namespace elast2d::verify
