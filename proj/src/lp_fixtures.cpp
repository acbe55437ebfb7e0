#include "mhp/lp_fixtures.hpp"

namespace mhp {

const std::vector<LpFixture>& lp_fixtures() {
  static const std::vector<LpFixture> fixtures = {
    {"corner", {1.0, 0.0}, {{1.0, 1.0}}, {1.0}, LpStatus::optimal, 0.0},
    {"sign_contradiction", {1.0}, {{1.0}}, {-1.0}, LpStatus::infeasible, 0.0},
    {"ray", {-1.0, 0.0}, {{1.0, -1.0}}, {0.0}, LpStatus::unbounded, 0.0},
    {"textbook_max", {-3.0, -5.0, 0.0, 0.0, 0.0}, {{1.0, 0.0, 1.0, 0.0, 0.0}, {0.0, 2.0, 0.0, 1.0, 0.0}, {3.0, 2.0, 0.0, 0.0, 1.0}}, {4.0, 12.0, 18.0}, LpStatus::optimal, -36.0},
    {"diet", {2.0, 3.0, 0.0, 0.0}, {{1.0, 2.0, -1.0, 0.0}, {3.0, 1.0, 0.0, -1.0}}, {4.0, 6.0}, LpStatus::optimal, 6.799999999999999},
    {"redundant_rows", {1.0, 2.0, 3.0}, {{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}, {1.0, -1.0, 0.0}}, {3.0, 6.0, 0.0}, LpStatus::optimal, 4.5},
    {"degenerate_vertex", {-1.0, -1.0, 0.0, 0.0, 0.0}, {{1.0, 0.0, 1.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 1.0, 0.0}, {1.0, 1.0, 0.0, 0.0, 1.0}}, {1.0, 1.0, 2.0}, LpStatus::optimal, -2.0},
    {"degenerate_zero_rhs", {-1.0, -2.0, 0.0, 0.0}, {{1.0, -1.0, 1.0, 0.0}, {-1.0, 1.0, 0.0, 1.0}}, {0.0, 0.0}, LpStatus::unbounded, 0.0},
    {"infeasible_pair", {1.0, 1.0}, {{1.0, 1.0}, {1.0, 1.0}}, {1.0, 2.0}, LpStatus::infeasible, 0.0},
    {"infeasible_negative_sum", {0.0, 0.0, 0.0}, {{1.0, 1.0, 1.0}}, {-2.0}, LpStatus::infeasible, 0.0},
    {"infeasible_mass", {1.0, 1.0, 0.0}, {{1.0, 1.0, 0.0}, {1.0, 1.0, -1.0}, {0.0, 0.0, 1.0}}, {1.0, 3.0, 1.0}, LpStatus::infeasible, 0.0},
    {"unbounded_slack", {-1.0, 0.0, 0.0}, {{1.0, -1.0, 0.0}, {0.0, 1.0, -1.0}}, {1.0, 1.0}, LpStatus::unbounded, 0.0},
    {"unbounded_two_rays", {-1.0, -1.0, 0.0}, {{1.0, -1.0, 1.0}}, {2.0}, LpStatus::unbounded, 0.0},
    {"single_variable", {5.0}, {{2.0}}, {4.0}, LpStatus::optimal, 10.0},
    {"zero_objective", {0.0, 0.0, 0.0}, {{1.0, 1.0, 1.0}, {1.0, 0.0, -1.0}}, {2.0, 0.0}, LpStatus::optimal, 0.0},
    {"transport_2x2", {4.0, 6.0, 5.0, 3.0}, {{1.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 1.0}, {1.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 1.0}}, {30.0, 20.0, 25.0, 25.0}, LpStatus::optimal, 190.0},
    {"envelope_like", {0.0, 0.5, 0.1}, {{1.0, 0.0, 0.6}, {0.0, 1.0, 0.4}, {1.0, 1.0, 1.0}}, {0.5, 0.5, 1.0}, LpStatus::optimal, 0.16666666666666666},
    {"no_rows_bounded", {1.0, 2.0}, {}, {}, LpStatus::optimal, 0.0},
    {"no_rows_unbounded", {1.0, -2.0}, {}, {}, LpStatus::unbounded, 0.0},
    {"beale_cycling", {0.0, 0.0, 0.0, -0.75, 20.0, -0.5, 6.0}, {{1.0, 0.0, 0.0, 0.25, -8.0, -1.0, 9.0}, {0.0, 1.0, 0.0, 0.5, -12.0, -0.5, 3.0}, {0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0}}, {0.0, 0.0, 1.0}, LpStatus::optimal, -1.25},
    {"beale_classic", {-0.75, 150.0, -0.02, 6.0, 0.0, 0.0, 0.0}, {{0.25, -60.0, -0.04, 9.0, 1.0, 0.0, 0.0}, {0.5, -90.0, -0.02, 3.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}}, {0.0, 0.0, 1.0}, LpStatus::optimal, -0.05},
    {"chvatal_cycling", {-10.0, 57.0, 9.0, 24.0, 0.0, 0.0, 0.0}, {{0.5, -5.5, -2.5, 9.0, 1.0, 0.0, 0.0}, {0.5, -1.5, -0.5, 1.0, 0.0, 1.0, 0.0}, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}}, {0.0, 0.0, 1.0}, LpStatus::optimal, -1.0},
    {"random_22", {3.0, 8.0, 7.0, -6.0, 1.0, -2.0}, {{-1.0, 0.0, 3.0, 1.0, 2.0, 0.0}, {-2.0, 2.0, 3.0, -2.0, 0.0, -2.0}, {-3.0, 0.0, -3.0, 1.0, -1.0, 2.0}, {-3.0, -3.0, 2.0, 2.0, 2.0, -3.0}}, {-1.0, -10.0, -1.0, -10.0}, LpStatus::optimal, -4.0},
    {"random_23", {3.0, 5.0, 2.0, 4.0, 0.0}, {{-1.0, 2.0, -1.0, -3.0, -1.0}, {1.0, 0.0, 0.0, 3.0, 0.0}}, {0.0, 1.0}, LpStatus::optimal, 3.833333333333333},
    {"random_24", {-7.0, 7.0, 0.0, 6.0}, {{-1.0, 2.0, 3.0, 0.0}, {3.0, -1.0, 3.0, 0.0}, {-1.0, 2.0, 3.0, 3.0}}, {3.0, 3.0, 3.0}, LpStatus::optimal, 0.0},
    {"random_25", {-6.0, -2.0, -2.0, 3.0, 2.0, 5.0, 10.0, -3.0}, {{-1.0, 0.0, -3.0, 3.0, -1.0, 1.0, -3.0, 2.0}, {-3.0, 2.0, -2.0, -3.0, 0.0, 3.0, -3.0, -3.0}, {2.0, 0.0, 3.0, -3.0, 2.0, 0.0, -1.0, 1.0}, {-1.0, -2.0, 0.0, 2.0, 2.0, 2.0, 2.0, 3.0}}, {5.0, -10.0, 0.0, 11.0}, LpStatus::optimal, 3.897959183673473},
    {"random_26", {6.0, -13.0, 0.0, 4.0}, {{0.0, -3.0, -1.0, 2.0}, {-1.0, 3.0, 0.0, 1.0}, {2.0, -2.0, 0.0, 0.0}}, {-7.0, 6.0, -4.0}, LpStatus::optimal, -26.0},
    {"random_27", {4.0, 1.0, 3.0, 0.0}, {{3.0, 3.0, -2.0, 0.0}, {2.0, 1.0, 2.0, 0.0}}, {1.0, 3.0}, LpStatus::optimal, 4.0},
    {"random_28", {3.0, -12.0, 11.0, 2.0, -9.0}, {{3.0, -3.0, 1.0, -3.0, -1.0}, {0.0, 2.0, 0.0, 0.0, -3.0}, {-3.0, -3.0, 2.0, 2.0, -3.0}, {1.0, -2.0, 2.0, 2.0, -1.0}}, {-7.0, 4.0, -1.0, 5.0}, LpStatus::optimal, 5.0},
    {"random_29", {-7.0, 2.0, 8.0, 8.0, -1.0, -4.0}, {{-1.0, -1.0, 3.0, 1.0, 2.0, 0.0}, {-3.0, 2.0, 1.0, 3.0, -3.0, -2.0}, {-2.0, -1.0, 1.0, 0.0, -1.0, -3.0}}, {-1.0, -2.0, -9.0}, LpStatus::optimal, -6.000000000000009},
  };
  return fixtures;
}

}  // namespace mhp
