#pragma once

namespace mhp {

// Every numeric threshold used by the library lives here.
struct Tolerances {
  // Probability sums, normalisation, simplex membership, FOSD.
  double equality = 1e-12;
  // Indifference band of compare(); optimisation and LP accuracy.
  double optimization = 1e-9;
  // Default accuracy target for recovered utilities and costs.
  double identification = 1e-3;
  // A preference is "strict" only when the value gap exceeds this.
  double strict_margin = 1e-6;
};

inline constexpr Tolerances kTol{};

}  // namespace mhp
