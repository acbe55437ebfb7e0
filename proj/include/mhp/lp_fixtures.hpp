#pragma once

#include <string>
#include <vector>

#include "mhp/lp.hpp"

namespace mhp {

// Reference LPs (min c.x, Ax = b, x >= 0) with optimal values computed
// independently by HiGHS (tools/oracles/lp_fixtures.py).
struct LpFixture {
  std::string name;
  std::vector<double> objective;
  std::vector<std::vector<double>> constraints;
  std::vector<double> rhs;
  LpStatus status;
  double value;  // meaningful only when status == optimal
};

const std::vector<LpFixture>& lp_fixtures();

}  // namespace mhp
