#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "folab/graph_core/graph.hpp"
#include "folab/rgraph_mc/sampler.hpp"

namespace folab {

using GraphProperty = std::function<bool(const Graph&)>;

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};

// 95% Wilson score interval.
WilsonInterval wilson_interval(std::size_t hits, std::size_t trials);

struct Estimate {
  SampleSpec spec;
  std::size_t trials = 0;
  std::size_t hits = 0;
  double p = 0.0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double wall_ms = 0.0;
};

// Raised (nested around the original exception) when the property throws.
class TrialFailure : public std::runtime_error {
 public:
  TrialFailure(std::uint64_t trial_index, const std::string& what)
      : std::runtime_error("trial " + std::to_string(trial_index) + ": " + what),
        trial_index_(trial_index) {}
  std::uint64_t trial_index() const noexcept { return trial_index_; }

 private:
  std::uint64_t trial_index_;
};

// Worker count from FOLAB_THREADS, else hardware concurrency.
std::size_t worker_count();

// Runs spec.trials independent trials; trial t samples sample_gnp(spec, t). Workers
// take trials t = w, w + W, ...; the hit total does not depend on W.
Estimate mc_estimate(const SampleSpec& spec, const GraphProperty& property);

// Same loop with a per-trial observer instead of a predicate (used by experiments
// that need more than a hit count). observe(t, graph) is called from worker threads.
void for_each_trial(const SampleSpec& spec, const std::function<void(std::uint64_t, const Graph&)>& observe);

}  // namespace folab
