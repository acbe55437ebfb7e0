#include "mhp/contract.hpp"

#include <algorithm>

#include "mhp/errors.hpp"

namespace mhp {

Contract::Contract(OutputSpace space, std::vector<Lottery> payoffs)
    : space_(std::move(space)), payoffs_(std::move(payoffs)) {
  if (payoffs_.size() != space_.size())
    throw InputError("contract needs exactly one lottery per output level");
}

Contract Contract::constant(OutputSpace space, const Lottery& x) {
  std::vector<Lottery> payoffs(space.size(), x);
  return Contract(std::move(space), std::move(payoffs));
}

Contract Contract::degenerate(OutputSpace space, std::span<const double> prizes) {
  std::vector<Lottery> payoffs;
  payoffs.reserve(prizes.size());
  for (double prize : prizes) payoffs.push_back(Lottery::degenerate(prize));
  return Contract(std::move(space), std::move(payoffs));
}

bool Contract::is_constant() const {
  return std::all_of(payoffs_.begin(), payoffs_.end(),
                     [&](const Lottery& x) { return x == payoffs_.front(); });
}

Contract mix_contracts(double alpha, const Contract& w, const Contract& w2) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("mixture weight must lie in [0, 1]");
  if (!(w.space() == w2.space())) throw DomainError("mixed contracts must share an output space");
  std::vector<Lottery> payoffs;
  payoffs.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) payoffs.push_back(Lottery::mix(alpha, w.at(i), w2.at(i)));
  return Contract(w.space(), std::move(payoffs));
}

}  // namespace mhp
