#include "elast2d/grid.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace elast2d {

namespace {

// Runs fn(0..n-1) over contiguous chunks; results must be written by index.
// Serial below the threshold, where thread spawn would dominate.
void parallel_apply(size_t n, const std::function<void(size_t)>& fn) {
  const size_t kSerialCutoff = 512;
  const unsigned hw = std::thread::hardware_concurrency();
  if (n < kSerialCutoff || hw <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const size_t workers = std::min<size_t>(hw, (n + kSerialCutoff - 1) / kSerialCutoff);
  const size_t chunk = (n + workers - 1) / workers;

  std::mutex mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        for (size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void PolarGrid::validate() const {
  if (!(r_min > 0.0) || !std::isfinite(r_min) || !std::isfinite(r_max)) {
    throw std::invalid_argument("PolarGrid: radii must be positive and finite");
  }
  if (r_max < r_min) {
    throw std::invalid_argument("PolarGrid: r_max must be >= r_min");
  }
  if (n_r < 1 || n_theta < 1) {
    throw std::invalid_argument("PolarGrid: grid counts must be at least 1");
  }
  if (n_r == 1 && r_max != r_min) {
    throw std::invalid_argument("PolarGrid: n_r == 1 requires r_max == r_min");
  }
  if (!(theta_max > theta_min)) {
    throw std::invalid_argument("PolarGrid: empty angular range");
  }
}

double PolarGrid::radius_at(int i) const {
  if (n_r == 1) return r_min;
  return r_min + (r_max - r_min) * static_cast<double>(i) / static_cast<double>(n_r - 1);
}

double PolarGrid::theta_at(int j) const {
  return theta_min + (theta_max - theta_min) * static_cast<double>(j) /
                         static_cast<double>(n_theta);
}

std::vector<std::complex<double>> PolarGrid::points() const {
  validate();
  std::vector<std::complex<double>> pts;
  pts.reserve(size());
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_theta; ++j) {
      pts.push_back(std::polar(radius_at(i), theta_at(j)));
    }
  }
  return pts;
}

std::vector<FieldSample> sample_kirsch_grid(const KirschProblem& prob, const PolarGrid& grid) {
  grid.validate();
  const FieldEvaluator ev = prob.evaluator();
  std::vector<FieldSample> samples(grid.size());
  const size_t n_theta = static_cast<size_t>(grid.n_theta);
  parallel_apply(samples.size(), [&](size_t index) {
    const int i = static_cast<int>(index / n_theta);
    const int j = static_cast<int>(index % n_theta);
    samples[index] = prob.sample(ev, grid.radius_at(i), grid.theta_at(j));
  });
  return samples;
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_field_csv(std::ostream& os, std::span<const FieldSample> samples) {
  os << kFieldCsvHeader << '\n';
  std::string row;
  for (const FieldSample& s : samples) {
    row.clear();
    const double values[] = {s.x,   s.y,   s.r,   s.theta, s.srr, s.stt,
                             s.srt, s.s11, s.s12, s.s22,   s.ur,  s.utheta,
                             s.u,   s.v,   s.airy, s.trace};
    for (size_t i = 0; i < std::size(values); ++i) {
      if (i != 0) row += ',';
      row += csv_number(values[i]);
    }
    os << row << '\n';
  }
}

}  // namespace elast2d
