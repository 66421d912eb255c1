#include "folab/rgraph_mc/sampler.hpp"

#include <cmath>
#include <limits>

#include "folab/graph_core/errors.hpp"

namespace folab {

void SampleSpec::validate() const {
  if (n == 0) throw DomainError("n must be positive");
  if (trials == 0) throw DomainError("trials must be positive");
  if (const auto* e = std::get_if<ExplicitP>(&p_mode)) {
    if (!(e->p >= 0.0 && e->p <= 1.0)) throw DomainError("p must lie in [0,1]");
  } else if (std::get<PowerLaw>(p_mode).exponent <= 0) {
    throw DomainError("power-law exponent must be positive");
  }
}

double SampleSpec::resolved_p() const {
  if (const auto* e = std::get_if<ExplicitP>(&p_mode)) return e->p;
  return std::pow(static_cast<double>(n), -to_double(std::get<PowerLaw>(p_mode).exponent));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial_index) {
  return splitmix64(splitmix64(seed) ^ ((trial_index + 1) * 0x9E3779B97F4A7C15ULL));
}

double uniform_draw(std::uint64_t key, std::uint64_t index) {
  return static_cast<double>(splitmix64(key + index * 0xD1B54A32D192ED03ULL) >> 11) * 0x1.0p-53;
}

Graph sample_gnp(const SampleSpec& spec, std::uint64_t trial_index) {
  spec.validate();
  const double p = spec.resolved_p();
  const std::uint64_t key = trial_key(spec.seed, trial_index);
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_draw(key, std::uint64_t{u} * n + v) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

double log_probability(const Graph& g, std::size_t n, double p) {
  if (g.vertex_count() != n) throw DomainError("graph size does not match n");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - (n > 0 ? 1 : 0)) / 2.0;
  const double e = static_cast<double>(g.edge_count());
  const double absent = pairs - e;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (p == 0.0) return e > 0 ? kNegInf : 0.0;
  if (p == 1.0) return absent > 0 ? kNegInf : 0.0;
  return e * std::log(p) + absent * std::log1p(-p);
}

}  // namespace folab
