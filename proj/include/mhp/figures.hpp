#pragma once

#include <span>
#include <string>
#include <vector>

namespace mhp {

// Cost curves c(p) = alpha (p - beta)^2 on an evenly spaced grid of the
// high-output mass p in [0, 1].
struct CurveTable {
  std::vector<std::string> header;  // "p" followed by one label per curve
  std::vector<double> p;
  std::vector<std::vector<double>> columns;
};

CurveTable alpha_sweep(std::span<const double> alphas, double beta, std::size_t points = 101);
CurveTable beta_sweep(std::span<const double> betas, double alpha, std::size_t points = 101);

// Shortest round-trip decimal form of every value.
std::string to_csv(const CurveTable& t);

// "lo:step:hi" -> lo, lo + step, ..., hi (hi included when on the lattice).
std::vector<double> parse_range(const std::string& text);

}  // namespace mhp
