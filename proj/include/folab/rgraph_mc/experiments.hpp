#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"
#include "folab/rgraph_mc/estimate.hpp"

namespace folab {

struct PoissonReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Rational exponent;  // 1 / rho(pattern)
  double p = 0.0;
  std::uint64_t automorphisms = 0;
  double lambda = 0.0;  // 1 / automorphisms
  std::array<std::size_t, 4> observed{};  // copies = 0, 1, 2, >= 3
  std::array<double, 4> expected{};       // Poisson(lambda) mass of the same bins
  double mean = 0.0;
  double chi_square = 0.0;
  double p_value = 0.0;  // chi-square with 3 degrees of freedom
  std::size_t containing = 0;
  double containment_fraction = 0.0;
};

// Samples at p = n^(-1/rho(pattern)), ignoring spec.p_mode. The pattern must be
// strictly balanced with rho >= 1 so that the exponent lies in (0, 1].
PoissonReport poisson_check(const SampleSpec& spec, const Graph& pattern);

struct ScanConfig {
  std::vector<std::size_t> n_values;
  std::vector<Rational> alphas;  // each in (0, 1)
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // When set, every alpha is replaced by the interval endpoints alpha - eps, alpha + eps.
  std::optional<Rational> epsilon;
};

struct ScanCell {
  std::size_t n = 0;
  Rational alpha;  // exponent actually sampled
  Estimate estimate;
};

// Cells in (n, alpha) order. Every cell uses the same seed, so trial t at different
// alphas is driven by the same uniforms and hit counts of monotone properties are
// monotone in alpha.
std::vector<ScanCell> threshold_scan(const ScanConfig& config, const GraphProperty& property);

// Columns n, alpha, p, trials, hits, p_hat, ci_low, ci_high, seed, wall_ms. wall_ms is
// written as 0 unless with_timing, keeping the output reproducible.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ScanCell& cell, bool with_timing);
std::string format_real(double value);

}  // namespace folab
