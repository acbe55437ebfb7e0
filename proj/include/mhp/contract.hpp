#pragma once

#include <span>
#include <vector>

#include "mhp/lottery.hpp"
#include "mhp/output_space.hpp"

namespace mhp {

// A map from output levels to lotteries: payoffs[i] is paid when s_i realises.
class Contract {
 public:
  Contract(OutputSpace space, std::vector<Lottery> payoffs);

  static Contract constant(OutputSpace space, const Lottery& x);
  static Contract degenerate(OutputSpace space, std::span<const double> prizes);

  const OutputSpace& space() const { return space_; }
  std::size_t size() const { return payoffs_.size(); }
  const Lottery& at(std::size_t i) const { return payoffs_.at(i); }
  std::span<const Lottery> payoffs() const { return payoffs_; }

  bool is_constant() const;

  friend bool operator==(const Contract&, const Contract&) = default;

 private:
  OutputSpace space_;
  std::vector<Lottery> payoffs_;
};

// Statewise mixture [alpha w + (1 - alpha) w'](s) = alpha w(s) + (1 - alpha) w'(s).
Contract mix_contracts(double alpha, const Contract& w, const Contract& w2);

}  // namespace mhp
