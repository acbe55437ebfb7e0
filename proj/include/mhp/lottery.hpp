#pragma once

#include <span>
#include <vector>

namespace mhp {

struct Outcome {
  double prize;
  double prob;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Finite-support distribution over money prizes. The support is kept sorted
// by prize so that equal lotteries compare equal field by field.
class Lottery {
 public:
  explicit Lottery(std::vector<Outcome> support);

  static Lottery degenerate(double prize);

  // alpha * a + (1 - alpha) * b, merging equal prizes.
  static Lottery mix(double alpha, const Lottery& a, const Lottery& b);

  std::span<const Outcome> support() const { return support_; }
  bool is_degenerate() const { return support_.size() == 1; }
  double min_prize() const { return support_.front().prize; }
  double max_prize() const { return support_.back().prize; }

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  struct Trusted {};
  Lottery(Trusted, std::vector<Outcome> support) : support_(std::move(support)) {}

  std::vector<Outcome> support_;
};

}  // namespace mhp
