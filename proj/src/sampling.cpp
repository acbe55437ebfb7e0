#include "mhp/sampling.hpp"

#include <cmath>

#include "mhp/errors.hpp"

namespace mhp {

void SamplerConfig::validate() const {
  if (n_samples == 0) throw InputError("sampler: n_samples must be >= 1");
  if (!(std::isfinite(prize_lo) && std::isfinite(prize_hi) && prize_lo < prize_hi))
    throw InputError("sampler: prize range must satisfy lo < hi");
  if (support_size_max == 0) throw InputError("sampler: support_size_max must be >= 1");
  if (mixture_grid.empty()) throw InputError("sampler: mixture grid is empty");
  for (double a : mixture_grid)
    if (!(a >= 0.0 && a <= 1.0)) throw InputError("sampler: mixture weights must lie in [0,1]");
  if (!(violation_margin > 0.0) || !(band >= 0.0)) throw InputError("sampler: bad tolerances");
  if (jobs == 0) throw InputError("sampler: jobs must be >= 1");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch) {
  return splitmix64(splitmix64(seed) ^ splitmix64(batch + 0x632BE59BD9B4E019ULL));
}

Lottery random_lottery(Rng& rng, const SamplerConfig& cfg) {
  const double x = rng.uniform(cfg.prize_lo, cfg.prize_hi);
  if (cfg.support_size_max >= 2 && rng.bernoulli(0.3)) {
    const double y = rng.uniform(cfg.prize_lo, cfg.prize_hi);
    const double q = rng.uniform(0.1, 0.9);
    if (y != x) return Lottery({{x, q}, {y, 1.0 - q}});
  }
  return Lottery::degenerate(x);
}

Contract random_contract(Rng& rng, const OutputSpace& space, const SamplerConfig& cfg) {
  std::vector<Lottery> payoffs;
  payoffs.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) payoffs.push_back(random_lottery(rng, cfg));
  return Contract(space, std::move(payoffs));
}

double random_alpha(Rng& rng, const SamplerConfig& cfg) {
  return cfg.mixture_grid[rng.index(cfg.mixture_grid.size())];
}

}  // namespace mhp
