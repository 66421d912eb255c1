#include "folab/rgraph_mc/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "folab/graph_core/errors.hpp"
#include "folab/graph_core/invariants.hpp"
#include "folab/rgraph_mc/copies.hpp"

namespace folab {

PoissonReport poisson_check(const SampleSpec& spec, const Graph& pattern) {
  if (!is_strictly_balanced(pattern)) throw DomainError("pattern is not strictly balanced");
  const Rational rho = density(pattern);
  if (rho < 1) throw DomainError("1/rho(pattern) = " + to_string(1 / rho) + " lies outside (0, 1]");

  PoissonReport report;
  report.n = spec.n;
  report.trials = spec.trials;
  report.seed = spec.seed;
  report.exponent = 1 / rho;
  report.automorphisms = automorphism_count(pattern);
  report.lambda = 1.0 / static_cast<double>(report.automorphisms);

  SampleSpec run = spec;
  run.p_mode = PowerLaw{report.exponent};
  report.p = run.resolved_p();

  std::mutex mutex;
  std::uint64_t total = 0;
  for_each_trial(run, [&](std::uint64_t, const Graph& g) {
    const auto copies = count_copies(g, pattern);
    std::lock_guard lock(mutex);
    total += copies;
    ++report.observed[std::min<std::uint64_t>(copies, 3)];
  });

  const double lambda = report.lambda;
  const double p0 = std::exp(-lambda);
  const double p1 = p0 * lambda;
  const double p2 = p1 * lambda / 2.0;
  report.expected = {p0, p1, p2, std::max(0.0, 1.0 - p0 - p1 - p2)};
  const double trials = static_cast<double>(spec.trials);
  report.mean = static_cast<double>(total) / trials;
  for (std::size_t b = 0; b < 4; ++b) {
    const double want = report.expected[b] * trials;
    const double diff = static_cast<double>(report.observed[b]) - want;
    report.chi_square += diff * diff / want;
  }
  const boost::math::chi_squared dist(3.0);
  report.p_value = boost::math::cdf(boost::math::complement(dist, report.chi_square));
  report.containing = spec.trials - report.observed[0];
  report.containment_fraction = static_cast<double>(report.containing) / trials;
  return report;
}

std::vector<ScanCell> threshold_scan(const ScanConfig& config, const GraphProperty& property) {
  if (config.n_values.empty() || config.alphas.empty()) throw DomainError("scan grids must be nonempty");
  std::vector<Rational> exponents;
  for (const Rational& a : config.alphas) {
    if (a <= 0 || a >= 1) throw DomainError("alpha " + to_string(a) + " lies outside (0, 1)");
    if (config.epsilon) {
      const Rational lo = a - *config.epsilon;
      const Rational hi = a + *config.epsilon;
      if (*config.epsilon <= 0 || lo <= 0 || hi >= 1) {
        throw DomainError("interval around " + to_string(a) + " leaves (0, 1)");
      }
      exponents.push_back(lo);
      exponents.push_back(hi);
    } else {
      exponents.push_back(a);
    }
  }
  std::vector<ScanCell> cells;
  for (std::size_t n : config.n_values) {
    for (const Rational& a : exponents) {
      SampleSpec spec{n, PowerLaw{a}, config.seed, config.trials};
      cells.push_back({n, a, mc_estimate(spec, property)});
    }
  }
  return cells;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_csv_header(std::ostream& out) {
  out << "n,alpha,p,trials,hits,p_hat,ci_low,ci_high,seed,wall_ms\n";
}

void write_csv_row(std::ostream& out, const ScanCell& cell, bool with_timing) {
  const Estimate& e = cell.estimate;
  out << cell.n << ',' << to_string(cell.alpha) << ',' << format_real(e.p) << ',' << e.trials << ','
      << e.hits << ',' << format_real(e.p_hat) << ',' << format_real(e.ci_low) << ','
      << format_real(e.ci_high) << ',' << e.spec.seed << ','
      << (with_timing ? format_real(e.wall_ms) : std::string("0")) << '\n';
}

}  // namespace folab
