#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhp/contract.hpp"
#include "mhp/oracle.hpp"
#include "mhp/sampling.hpp"
#include "mhp/tolerances.hpp"

namespace mhp {

enum class Axiom {
  weak_order,
  monotonicity,
  dominance,
  continuity_surrogate,
  quasiconvexity,
  vnm_independence,
  mmr_independence,
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::weak_order,     Axiom::monotonicity,     Axiom::dominance,
    Axiom::continuity_surrogate, Axiom::quasiconvexity, Axiom::vnm_independence,
    Axiom::mmr_independence,
};

std::string_view axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);

// A self-contained violation. The meaning of contracts/alphas depends on the
// axiom (see axioms.cpp); `values` records the oracle values observed when the
// witness was found and `margin` by how much the conclusion failed.
struct AxiomWitness {
  std::string form;  // which clause failed, e.g. "weak", "strict", "jump"
  std::vector<Contract> contracts;
  std::vector<double> alphas;
  std::vector<double> values;
  double margin = 0.0;
};

struct AxiomVerdict {
  Axiom axiom;
  bool passed = true;
  std::size_t samples = 0;
  std::size_t hypothesis_samples = 0;
  // Continuity is only checked through a finite-grid surrogate.
  bool surrogate = false;
  std::optional<AxiomWitness> witness;
};

// Sampling falsifier for one axiom. A pass means no violation larger than
// cfg.violation_margin among cfg.n_samples draws.
AxiomVerdict check_axiom(const PreferenceOracle& o, Axiom which, const SamplerConfig& cfg);

// Re-evaluates a witness against o, independently of any RNG. Returns the
// violation margin when the violation reproduces, nullopt otherwise.
std::optional<double> reverify_axiom_witness(const PreferenceOracle& o, Axiom which, const AxiomWitness& w,
                                             double band = kTol.optimization,
                                             double violation_margin = kTol.strict_margin);

}  // namespace mhp
