#include "mhp/output_space.hpp"

#include <cmath>
#include <string>

#include "mhp/errors.hpp"

namespace mhp {

OutputSpace::OutputSpace(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw InputError("output space needs at least one level");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!std::isfinite(levels_[i])) throw InputError("output levels must be finite");
    if (i > 0 && !(levels_[i - 1] < levels_[i]))
      throw InputError("output levels must be strictly increasing (index " + std::to_string(i) + ")");
  }
}

OutputSpace OutputSpace::indexed(std::size_t n) {
  std::vector<double> levels(n);
  for (std::size_t i = 0; i < n; ++i) levels[i] = static_cast<double>(i + 1);
  return OutputSpace(std::move(levels));
}

}  // namespace mhp
