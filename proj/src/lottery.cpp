#include "mhp/lottery.hpp"

#include <algorithm>
#include <cmath>

#include "mhp/errors.hpp"
#include "mhp/tolerances.hpp"

namespace mhp {

Lottery::Lottery(std::vector<Outcome> support) : support_(std::move(support)) {
  if (support_.empty()) throw InputError("lottery support must be non-empty");
  std::sort(support_.begin(), support_.end(),
            [](const Outcome& a, const Outcome& b) { return a.prize < b.prize; });
  double total = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const auto& o = support_[i];
    if (!std::isfinite(o.prize)) throw InputError("lottery prizes must be finite");
    if (!(o.prob > 0.0 && o.prob <= 1.0)) throw InputError("lottery probabilities must lie in (0, 1]");
    if (i > 0 && support_[i - 1].prize == o.prize) throw InputError("lottery prizes must be distinct");
    total += o.prob;
  }
  if (std::abs(total - 1.0) > kTol.equality) throw InputError("lottery probabilities must sum to 1");
}

Lottery Lottery::degenerate(double prize) { return Lottery({{prize, 1.0}}); }

Lottery Lottery::mix(double alpha, const Lottery& a, const Lottery& b) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("mixture weight must lie in [0, 1]");
  if (alpha == 1.0) return a;
  if (alpha == 0.0) return b;
  std::vector<Outcome> merged;
  merged.reserve(a.support_.size() + b.support_.size());
  auto ia = a.support_.begin();
  auto ib = b.support_.begin();
  while (ia != a.support_.end() || ib != b.support_.end()) {
    if (ib == b.support_.end() || (ia != a.support_.end() && ia->prize < ib->prize)) {
      merged.push_back({ia->prize, alpha * ia->prob});
      ++ia;
    } else if (ia == a.support_.end() || ib->prize < ia->prize) {
      merged.push_back({ib->prize, (1.0 - alpha) * ib->prob});
      ++ib;
    } else {
      merged.push_back({ia->prize, alpha * ia->prob + (1.0 - alpha) * ib->prob});
      ++ia;
      ++ib;
    }
  }
  return Lottery(Trusted{}, std::move(merged));
}

}  // namespace mhp
