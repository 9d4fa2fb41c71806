#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "elast2d/kirsch.hpp"
#include "elast2d/kolosov.hpp"

namespace elast2d {

/// Polar sampling grid: n_r radii spaced linearly over [r_min, r_max] (both
/// inclusive; a single radius when n_r == 1) and n_theta angles spaced over
/// the half-open arc [theta_min, theta_max), so a full circle has no
/// duplicate row. Points enumerate r-major, then theta.
struct PolarGrid {
  double r_min = 1.0;
  double r_max = 5.0;
  int n_r = 50;
  int n_theta = 36;
  double theta_min = 0.0;
  double theta_max = 2.0 * 3.14159265358979323846;

  /// Throws std::invalid_argument on an inconsistent spec.
  void validate() const;

  size_t size() const { return static_cast<size_t>(n_r) * static_cast<size_t>(n_theta); }
  double radius_at(int i) const;
  double theta_at(int j) const;

  /// All grid points as x + iy, in row order.
  std::vector<std::complex<double>> points() const;
};

/// Evaluate every Kirsch field quantity on the grid. Output order is
/// deterministic (r-major, then theta) regardless of how evaluation is
/// scheduled; large grids are evaluated on multiple threads.
std::vector<FieldSample> sample_kirsch_grid(const KirschProblem& prob, const PolarGrid& grid);

/// Shortest round-trippable decimal form of v ("%.17g"), used for every
/// numeric CSV cell so files are byte-stable across runs.
std::string csv_number(double v);

/// Quote a string cell if it contains a comma, quote, or newline.
std::string csv_cell(const std::string& text);

inline constexpr const char* kFieldCsvHeader =
    "x,y,r,theta,srr,stt,srt,s11,s12,s22,ur,utheta,u,v,U,Q";

/// Write the fixed-header field CSV.
void write_field_csv(std::ostream& os, std::span<const FieldSample> samples);

}  // namespace elast2d
