#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "folab/graph_core/graph.hpp"
#include "folab/graph_core/rational.hpp"

namespace folab {

struct ExplicitP {
  double p = 0.0;
};

// p = n^(-exponent). The exponent is any positive rational here; scans restrict it
// to (0, 1) themselves.
struct PowerLaw {
  Rational exponent;
};

struct SampleSpec {
  std::size_t n = 0;
  std::variant<ExplicitP, PowerLaw> p_mode = ExplicitP{};
  std::uint64_t seed = 0;
  std::size_t trials = 1;

  // DomainError on n = 0, trials = 0, p outside [0,1] or a nonpositive exponent.
  void validate() const;
  double resolved_p() const;
};

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Stream key for one trial: splitmix64(splitmix64(seed) ^ (trial + 1) * golden).
std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial_index);

// Uniform in [0,1) from draw number `index` of a stream: top 53 bits of
// splitmix64(key + index * 0xD1B54A32D192ED03).
double uniform_draw(std::uint64_t key, std::uint64_t index);

// Edge {u,v}, u < v, is present iff draw u*n + v of the trial's stream is below p.
Graph sample_gnp(const SampleSpec& spec, std::uint64_t trial_index);

// |E| ln p + (C(n,2) - |E|) ln(1-p); -infinity when p is 0 or 1 and g is impossible.
double log_probability(const Graph& g, std::size_t n, double p);

}  // namespace folab
