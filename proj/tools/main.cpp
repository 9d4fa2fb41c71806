// Command-line front end: sample the circular-hole fields onto CSV grids,
// run the finite-difference verification suite, tabulate the small-shear
// limit, and convert single stress/strain states.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elast2d/constitutive.hpp"
#include "elast2d/grid.hpp"
#include "elast2d/kirsch.hpp"
#include "elast2d/kolosov.hpp"
#include "elast2d/laurent.hpp"
#include "elast2d/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDomainViolation = 3;

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

struct ModuliFlags {
  std::optional<double> lambda;
  std::optional<double> lambda0;
  double mu = 1.0;
  double mu0 = 0.0;

  elast2d::Moduli resolve() const {
    if (lambda0) return elast2d::Moduli(*lambda0, mu, mu0);
    return elast2d::Moduli::from_lame(lambda.value_or(1.0), mu, mu0);
  }
};

void add_moduli_flags(CLI::App* cmd, ModuliFlags& flags, double default_mu0) {
  flags.mu0 = default_mu0;
  auto* lambda = cmd->add_option("--lambda", flags.lambda, "Lame constant lambda");
  auto* lambda0 =
      cmd->add_option("--lambda0", flags.lambda0, "Trace modulus lambda0 = lambda + mu");
  lambda->excludes(lambda0);
  lambda0->excludes(lambda);
  cmd->add_option("--mu", flags.mu, "Shear modulus mu")->capture_default_str();
  cmd->add_option("--mu0", flags.mu0, "Asymmetric modulus mu0")->capture_default_str();
}

json moduli_json(const elast2d::Moduli& m) {
  return json{{"lambda", m.lambda()},
              {"lambda0", m.lambda0()},
              {"mu", m.mu()},
              {"mu0", m.mu0()},
              {"ae_norm2", m.ae_norm2()}};
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  file << content;
}

// ---------------------------------------------------------------------------
// kirsch: field CSV on a polar grid

struct KirschArgs {
  double p = 1.0;
  double radius = 1.0;
  ModuliFlags moduli;
  std::optional<double> r_min;
  double r_max = 5.0;
  int n_r = 50;
  int n_theta = 36;
  double theta_min = 0.0;
  std::optional<double> theta_max;
  bool degrees = false;
  std::string output = "-";
  std::string format = "csv";
};

int run_kirsch(const KirschArgs& args) {
  if (args.format != "csv") {
    throw std::invalid_argument("unsupported --format (only csv)");
  }
  const elast2d::KirschProblem prob(args.p, args.radius, args.moduli.resolve());
  elast2d::PolarGrid grid;
  grid.r_min = args.r_min.value_or(args.radius);
  grid.r_max = args.r_max;
  grid.n_r = args.n_r;
  grid.n_theta = args.n_theta;
  const double to_rad = args.degrees ? kTwoPi / 360.0 : 1.0;
  grid.theta_min = args.theta_min * to_rad;
  grid.theta_max = args.theta_max ? *args.theta_max * to_rad : kTwoPi;
  grid.validate();
  if (grid.r_min < args.radius) {
    throw std::invalid_argument("grid r_min must be >= the hole radius");
  }

  const auto samples = elast2d::sample_kirsch_grid(prob, grid);
  std::ostringstream csv;
  elast2d::write_field_csv(csv, samples);
  write_output(args.output, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: the finite-difference check suite

struct VerifyArgs {
  std::string kind = "kirsch";
  double p = 1.0;
  double radius = 1.0;
  ModuliFlags moduli;
  std::optional<double> r_min;
  std::optional<double> r_max;
  int n_r = 5;
  int n_theta = 12;
  std::optional<double> h;
  int levels = 3;
  double tolerance = 1e-4;
  std::string corrupt;
  std::string output = "-";
};

elast2d::PotentialPair preset_pair(const std::string& kind, double p) {
  using elast2d::LaurentPotential;
  elast2d::PotentialPair pair;
  if (kind == "uniform") {
    pair.phi = LaurentPotential::monomial(1, p / 4.0);
    pair.psi = LaurentPotential::monomial(1, -p / 2.0);
  } else {  // shear
    pair.psi = LaurentPotential::monomial(1, std::complex<double>(0.0, p));
  }
  return pair;
}

int run_verify(const VerifyArgs& args) {
  namespace verify = elast2d::verify;
  const bool is_kirsch = args.kind == "kirsch";
  const elast2d::Moduli m = args.moduli.resolve();
  const double R = args.radius;

  elast2d::PolarGrid grid;
  grid.r_min = args.r_min.value_or(is_kirsch ? 1.05 * R : R);
  grid.r_max = args.r_max.value_or(is_kirsch ? 1.5 * R : 2.0 * R);
  grid.n_r = args.n_r;
  grid.n_theta = args.n_theta;
  grid.validate();
  if (is_kirsch && grid.r_min < R) {
    throw std::invalid_argument("grid r_min must be >= the hole radius");
  }
  const auto points = grid.points();

  verify::StencilConfig cfg;
  cfg.h = args.h.value_or(1e-2 * R);
  cfg.richardson_levels = args.levels;
  cfg.tolerance = args.tolerance;
  cfg.length_scale = R;

  const elast2d::PotentialPair pair =
      is_kirsch ? elast2d::KirschProblem(args.p, R, m).potentials()
                : preset_pair(args.kind, args.p);
  const elast2d::FieldEvaluator ev(pair);

  const bool corrupt_s12 = args.corrupt == "s12";
  const bool corrupt_airy = args.corrupt == "airy";
  const bool corrupt_phi = args.corrupt == "phi";

  // Stresses: the closed forms for the hole problem (so Eq.-level formulas
  // get differentiated), the Kolosov route for raw potential presets.
  verify::StressField stress;
  if (is_kirsch) {
    const elast2d::KirschProblem prob(args.p, R, m);
    stress = [prob, corrupt_s12](double x, double y) {
      const double r = std::hypot(x, y);
      const double theta = std::atan2(y, x);
      const elast2d::PolarStress sp = prob.stresses_polar(r, theta);
      elast2d::Stress2 s = elast2d::rotate_stress({sp.rr, sp.rt, sp.tt}, -theta);
      if (corrupt_s12) s.s12 += x;
      return s;
    };
  } else {
    stress = [ev, corrupt_s12](double x, double y) {
      elast2d::Stress2 s = ev.stresses({x, y});
      if (corrupt_s12) s.s12 += x;
      return s;
    };
  }
  const verify::StrainField strain = [stress, m](double x, double y) {
    return elast2d::strain_from_stress(m, stress(x, y));
  };
  const verify::ScalarField trace = [stress](double x, double y) {
    return stress(x, y).trace();
  };
  const verify::ScalarField airy = [ev, corrupt_airy](double x, double y) {
    double value = ev.airy({x, y});
    if (corrupt_airy) value += x * x * x * x;
    return value;
  };
  const verify::ComplexField phi = [&pair, corrupt_phi](double x, double y) {
    std::complex<double> value = pair.phi.eval({x, y});
    if (corrupt_phi) value += x;
    return value;
  };
  const verify::ScalarField kolosov_trace = [ev](double x, double y) {
    return ev.trace({x, y});
  };

  std::vector<verify::ResidualReport> reports;
  reports.push_back(verify::check_equilibrium(stress, points, cfg));
  reports.push_back(verify::check_compatibility(strain, points, cfg));
  reports.push_back(verify::check_laplace_trace(trace, points, cfg));
  reports.push_back(verify::check_biharmonic(airy, points, cfg));
  reports.push_back(verify::check_cauchy_riemann(phi, &kolosov_trace, points, cfg));
  reports.push_back(verify::check_displacement_consistency(pair, m, points, cfg));

  bool all_passed = true;
  json checks = json::array();
  for (const auto& report : reports) {
    all_passed = all_passed && report.passed;
    checks.push_back(report);
  }

  json doc{{"scenario",
            {{"kind", args.kind},
             {"p", args.p},
             {"radius", R},
             {"moduli", moduli_json(m)},
             {"grid",
              {{"r_min", grid.r_min},
               {"r_max", grid.r_max},
               {"n_r", grid.n_r},
               {"n_theta", grid.n_theta}}},
             {"h", cfg.h},
             {"levels", cfg.richardson_levels},
             {"tolerance", cfg.tolerance},
             {"corrupt", args.corrupt}}},
           {"checks", checks},
           {"all_passed", all_passed}};
  write_output(args.output, doc.dump(2) + "\n");
  return all_passed ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// limits: hole-boundary displacement coefficients along a modulus sweep

struct LimitsArgs {
  double p = 1.0;
  double radius = 1.0;
  ModuliFlags moduli;
  std::string sweep = "mu";
  std::vector<double> values;
  std::string output = "-";
};

int run_limits(const LimitsArgs& args) {
  if (args.values.empty()) {
    throw std::invalid_argument("empty sweep (--values)");
  }
  const bool sweep_mu = args.sweep == "mu";
  // lambda is held fixed along the sweep; lambda0 = lambda + mu follows mu.
  double lambda;
  if (args.moduli.lambda0) {
    lambda = *args.moduli.lambda0 - args.moduli.mu;
  } else {
    lambda = args.moduli.lambda.value_or(1.0);
  }

  std::ostringstream csv;
  csv << args.sweep
      << ",ur_coeff,utheta_coeff,ur_coeff_classical,utheta_coeff_classical,"
         "ur_coeff_limit,utheta_coeff_limit\n";
  const double limit_coeff = args.p * args.radius / (4.0 * lambda);
  for (double value : args.values) {
    const double mu = sweep_mu ? value : args.moduli.mu;
    const double mu0 = sweep_mu ? args.moduli.mu0 : value;
    const elast2d::KirschProblem prob(args.p, args.radius,
                                      elast2d::Moduli::from_lame(lambda, mu, mu0));
    const double asym = prob.boundary_coefficient();
    const double classical = mu > 0.0 ? prob.classical_boundary_coefficient()
                                      : std::numeric_limits<double>::quiet_NaN();
    const double cells[] = {value,     asym,          -2.0 * asym,
                            classical, -2.0 * classical, limit_coeff,
                            -2.0 * limit_coeff};
    for (size_t i = 0; i < std::size(cells); ++i) {
      if (i != 0) csv << ',';
      csv << elast2d::csv_number(cells[i]);
    }
    csv << '\n';
  }
  write_output(args.output, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// constitutive: one-shot strain <-> stress conversion

struct ConstitutiveArgs {
  ModuliFlags moduli;
  std::optional<double> e11, e12, e22;
  std::optional<double> s11, s12, s22;
  std::string output = "-";
};

int run_constitutive(const ConstitutiveArgs& args) {
  const bool has_strain = args.e11 || args.e12 || args.e22;
  const bool has_stress = args.s11 || args.s12 || args.s22;
  if (has_strain == has_stress) {
    throw std::invalid_argument("give exactly one of strain (--e11/--e12/--e22) "
                                "or stress (--s11/--s12/--s22) components");
  }
  const elast2d::Moduli m = args.moduli.resolve();

  json doc{{"moduli", moduli_json(m)},
           {"det_a", elast2d::constitutive_matrix(m).det()}};
  if (m.mu() > 0.0) doc["moduli"]["kappa0"] = m.kappa0();

  if (has_strain) {
    const elast2d::Strain2 e{args.e11.value_or(0.0), args.e12.value_or(0.0),
                             args.e22.value_or(0.0)};
    const elast2d::Stress2 s = elast2d::stress_from_strain(m, e);
    const elast2d::Strain2 back = elast2d::strain_from_stress(m, s);
    doc["input"] = {{"kind", "strain"}, {"e11", e.e11}, {"e12", e.e12}, {"e22", e.e22}};
    doc["output"] = {{"kind", "stress"}, {"s11", s.s11}, {"s12", s.s12}, {"s22", s.s22},
                     {"trace", s.trace()}};
    doc["round_trip_max_error"] = std::max(
        {std::abs(back.e11 - e.e11), std::abs(back.e12 - e.e12), std::abs(back.e22 - e.e22)});
  } else {
    const elast2d::Stress2 s{args.s11.value_or(0.0), args.s12.value_or(0.0),
                             args.s22.value_or(0.0)};
    const elast2d::Strain2 e = elast2d::strain_from_stress(m, s);
    const elast2d::Stress2 back = elast2d::stress_from_strain(m, e);
    doc["input"] = {{"kind", "stress"}, {"s11", s.s11}, {"s12", s.s12}, {"s22", s.s22}};
    doc["output"] = {{"kind", "strain"}, {"e11", e.e11}, {"e12", e.e12}, {"e22", e.e22},
                     {"trace", e.trace()}};
    doc["round_trip_max_error"] = std::max(
        {std::abs(back.s11 - s.s11), std::abs(back.s12 - s.s12), std::abs(back.s22 - s.s22)});
  }
  write_output(args.output, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane-stress elasticity with an asymmetric shear modulus"};
  app.require_subcommand(1);
  // --h is a stencil-step option below, so help is long-form only.
  app.set_help_flag("--help", "Print help and exit");

  KirschArgs kirsch_args;
  auto* kirsch = app.add_subcommand("kirsch", "Sample the circular-hole fields to CSV");
  kirsch->add_option("--p", kirsch_args.p, "Far-field tension")->capture_default_str();
  kirsch->add_option("--radius", kirsch_args.radius, "Hole radius R")->capture_default_str();
  add_moduli_flags(kirsch, kirsch_args.moduli, 0.0);
  kirsch->add_option("--rmin", kirsch_args.r_min, "Inner grid radius (default R)");
  kirsch->add_option("--rmax", kirsch_args.r_max, "Outer grid radius")->capture_default_str();
  kirsch->add_option("--nr", kirsch_args.n_r, "Radial samples")->capture_default_str();
  kirsch->add_option("--ntheta", kirsch_args.n_theta, "Angular samples")
      ->capture_default_str();
  kirsch->add_option("--theta-min", kirsch_args.theta_min, "Arc start (radians)")
      ->capture_default_str();
  kirsch->add_option("--theta-max", kirsch_args.theta_max, "Arc end, exclusive (radians)");
  kirsch->add_flag("--degrees", kirsch_args.degrees, "Interpret --theta-min/--theta-max in degrees");
  kirsch->add_option("--output", kirsch_args.output, "Output path, - for stdout")
      ->capture_default_str();
  kirsch->add_option("--format", kirsch_args.format, "Output format")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the finite-difference check suite");
  verify->set_help_flag("--help", "Print help and exit");
  verify->add_option("--kind", verify_args.kind, "Field source: kirsch, uniform, shear")
      ->check(CLI::IsMember({"kirsch", "uniform", "shear"}))
      ->capture_default_str();
  verify->add_option("--p", verify_args.p, "Load amplitude")->capture_default_str();
  verify->add_option("--radius", verify_args.radius, "Hole radius / length scale")
      ->capture_default_str();
  add_moduli_flags(verify, verify_args.moduli, 1.0);
  verify->add_option("--rmin", verify_args.r_min, "Inner grid radius (default 1.05 R)");
  verify->add_option("--rmax", verify_args.r_max, "Outer grid radius (default 1.5 R)");
  verify->add_option("--nr", verify_args.n_r, "Radial samples")->capture_default_str();
  verify->add_option("--ntheta", verify_args.n_theta, "Angular samples")
      ->capture_default_str();
  verify->add_option("--h", verify_args.h, "Base stencil step (default 1e-2 R)");
  verify->add_option("--levels", verify_args.levels, "Richardson refinement levels")
      ->capture_default_str();
  verify->add_option("--tolerance", verify_args.tolerance, "Normalized residual tolerance")
      ->capture_default_str();
  verify->add_option("--corrupt", verify_args.corrupt,
                     "Test hook: plant a defect (s12, airy, phi)")
      ->check(CLI::IsMember({"s12", "airy", "phi"}));
  verify->add_option("--output", verify_args.output, "Report path, - for stdout")
      ->capture_default_str();

  LimitsArgs limits_args;
  auto* limits = app.add_subcommand("limits", "Boundary-displacement coefficient sweep");
  limits->add_option("--p", limits_args.p, "Far-field tension")->capture_default_str();
  limits->add_option("--radius", limits_args.radius, "Hole radius R")->capture_default_str();
  add_moduli_flags(limits, limits_args.moduli, 1.0);
  limits->add_option("--sweep", limits_args.sweep, "Swept modulus: mu or mu0")
      ->check(CLI::IsMember({"mu", "mu0"}))
      ->capture_default_str();
  limits->add_option("--values", limits_args.values, "Sweep values (comma separated)")
      ->delimiter(',');
  limits->add_option("--output", limits_args.output, "Output path, - for stdout")
      ->capture_default_str();

  ConstitutiveArgs constitutive_args;
  auto* constitutive =
      app.add_subcommand("constitutive", "Convert one strain or stress state");
  add_moduli_flags(constitutive, constitutive_args.moduli, 0.0);
  constitutive->add_option("--e11", constitutive_args.e11, "Strain component");
  constitutive->add_option("--e12", constitutive_args.e12, "Strain component");
  constitutive->add_option("--e22", constitutive_args.e22, "Strain component");
  constitutive->add_option("--s11", constitutive_args.s11, "Stress component");
  constitutive->add_option("--s12", constitutive_args.s12, "Stress component");
  constitutive->add_option("--s22", constitutive_args.s22, "Stress component");
  constitutive->add_option("--output", constitutive_args.output, "Output path, - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (kirsch->parsed()) return run_kirsch(kirsch_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (limits->parsed()) return run_limits(limits_args);
    if (constitutive->parsed()) return run_constitutive(constitutive_args);
  } catch (const std::domain_error& e) {
    std::cerr << "domain violation: " << e.what() << "\n";
    return kExitDomainViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
