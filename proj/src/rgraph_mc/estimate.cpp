#include "folab/rgraph_mc/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace folab {

WilsonInterval wilson_interval(std::size_t hits, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(hits) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  return {std::max(0.0, std::min(center - half, phat)), std::min(1.0, std::max(center + half, phat))};
}

std::size_t worker_count() {
  if (const char* env = std::getenv("FOLAB_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void for_each_trial(const SampleSpec& spec, const std::function<void(std::uint64_t, const Graph&)>& observe) {
  spec.validate();
  const std::size_t workers = std::min(worker_count(), spec.trials);
  std::mutex failure_mutex;
  std::optional<std::uint64_t> failed_trial;
  std::exception_ptr failure;
  std::atomic<bool> stop{false};

  auto work = [&](std::size_t w) {
    for (std::uint64_t t = w; t < spec.trials && !stop; t += workers) {
      try {
        observe(t, sample_gnp(spec, t));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failed_trial || t < *failed_trial) {
          failed_trial = t;
          failure = std::current_exception();
        }
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      std::throw_with_nested(TrialFailure(*failed_trial, e.what()));
    }
  }
}

Estimate mc_estimate(const SampleSpec& spec, const GraphProperty& property) {
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> hits{0};
  for_each_trial(spec, [&](std::uint64_t, const Graph& g) {
    if (property(g)) ++hits;
  });
  Estimate out;
  out.spec = spec;
  out.trials = spec.trials;
  out.hits = hits;
  out.p = spec.resolved_p();
  out.p_hat = static_cast<double>(out.hits) / static_cast<double>(out.trials);
  const auto ci = wilson_interval(out.hits, out.trials);
  out.ci_low = ci.low;
  out.ci_high = ci.high;
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace folab
