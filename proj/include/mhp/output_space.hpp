#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mhp {

// Ordered output levels s_1 < ... < s_n.
class OutputSpace {
 public:
  explicit OutputSpace(std::vector<double> levels);

  // Levels 1, 2, ..., n.
  static OutputSpace indexed(std::size_t n);

  std::size_t size() const { return levels_.size(); }
  double level(std::size_t i) const { return levels_.at(i); }
  std::span<const double> levels() const { return levels_; }

  friend bool operator==(const OutputSpace&, const OutputSpace&) = default;

 private:
  std::vector<double> levels_;
};

}  // namespace mhp
