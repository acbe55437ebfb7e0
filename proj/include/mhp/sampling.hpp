#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "mhp/contract.hpp"
#include "mhp/lottery.hpp"
#include "mhp/output_space.hpp"

namespace mhp {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t n_samples = 10000;
  double prize_lo = -5.0;
  double prize_hi = 5.0;
  std::size_t support_size_max = 2;
  std::vector<double> mixture_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  // Behavioural comparators need at least this many samples satisfying their
  // hypothesis before a pass is reported.
  std::size_t min_hypothesis = 100;
  // A violation counts only when the conclusion fails by more than this.
  double violation_margin = 1e-6;
  // Indifference band for hypotheses.
  double band = 1e-9;
  unsigned jobs = 1;

  void validate() const;
};

// Portable RNG: mt19937_64 is fully specified by the standard; the real and
// index draws below avoid the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  bool bernoulli(double p) { return uniform01() < p; }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch);

// Degenerate prize uniform on [prize_lo, prize_hi]; with probability 0.3
// (and support_size_max >= 2) a two-point lottery instead.
Lottery random_lottery(Rng& rng, const SamplerConfig& cfg);
Contract random_contract(Rng& rng, const OutputSpace& space, const SamplerConfig& cfg);
double random_alpha(Rng& rng, const SamplerConfig& cfg);

template <class Witness>
struct SearchOutcome {
  std::size_t samples_run = 0;
  std::size_t hypothesis_count = 0;
  std::optional<Witness> witness;
};

inline constexpr std::size_t kBatchSize = 256;

// Runs cfg.n_samples draws of trial(rng, hypothesis_flag) -> optional<Witness>
// in fixed-size batches, each with its own RNG derived from (seed, batch).
// Returns the violation with the lowest sample index, so the outcome does not
// depend on cfg.jobs.
template <class Witness, class Trial>
SearchOutcome<Witness> run_search(const SamplerConfig& cfg, Trial trial) {
  struct BatchResult {
    std::size_t run = 0;
    std::size_t hypothesis = 0;
    std::optional<Witness> witness;
  };
  const std::size_t n_batches = (cfg.n_samples + kBatchSize - 1) / kBatchSize;
  auto run_batch = [&](std::size_t b) {
    BatchResult r;
    Rng rng(batch_seed(cfg.seed, b));
    const std::size_t end = std::min(cfg.n_samples, (b + 1) * kBatchSize);
    for (std::size_t i = b * kBatchSize; i < end; ++i) {
      bool hypothesis = false;
      auto w = trial(rng, hypothesis);
      ++r.run;
      if (hypothesis) ++r.hypothesis;
      if (w) {
        r.witness = std::move(w);
        break;
      }
    }
    return r;
  };

  SearchOutcome<Witness> out;
  const std::size_t wave = std::max(1u, cfg.jobs);
  for (std::size_t first = 0; first < n_batches; first += wave) {
    const std::size_t last = std::min(n_batches, first + wave);
    std::vector<BatchResult> results(last - first);
    if (wave == 1) {
      results[0] = run_batch(first);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t b = first; b < last; ++b)
        threads.emplace_back([&, b] { results[b - first] = run_batch(b); });
      for (auto& t : threads) t.join();
    }
    for (auto& r : results) {
      out.samples_run += r.run;
      out.hypothesis_count += r.hypothesis;
      if (r.witness) {
        out.witness = std::move(r.witness);
        return out;
      }
    }
  }
  return out;
}

}  // namespace mhp
