#include <gtest/gtest.h>

#include "mhp/errors.hpp"
#include "mhp/lp.hpp"
#include "mhp/lp_fixtures.hpp"

namespace mhp {
namespace {

TEST(SolveLp, CornerSolution) {
  const auto r = solve_lp({{1, 0}, {{1, 1}}, {1}});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
  EXPECT_NEAR(r.solution[0], 0.0, 1e-12);
  EXPECT_NEAR(r.solution[1], 1.0, 1e-12);
}

TEST(SolveLp, Infeasible) { EXPECT_EQ(solve_lp({{1}, {{1}}, {-1}}).status, LpStatus::infeasible); }

TEST(SolveLp, Unbounded) { EXPECT_EQ(solve_lp({{-1, 0}, {{1, -1}}, {0}}).status, LpStatus::unbounded); }

TEST(SolveLp, RejectsRaggedInput) { EXPECT_THROW(solve_lp({{1, 2}, {{1}}, {1}}), InputError); }

class LpFixtureTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(LpFixtureTest, MatchesReference) {
  const auto& f = lp_fixtures()[GetParam()];
  const auto r = solve_lp({f.objective, f.constraints, f.rhs});
  ASSERT_EQ(r.status, f.status);
  if (f.status != LpStatus::optimal) return;
  EXPECT_NEAR(r.value, f.value, 1e-9);
  for (std::size_t i = 0; i < f.rhs.size(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < r.solution.size(); ++j) lhs += f.constraints[i][j] * r.solution[j];
    EXPECT_NEAR(lhs, f.rhs[i], 1e-9);
  }
  for (double x : r.solution) EXPECT_GE(x, -1e-9);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, LpFixtureTest, ::testing::Range<std::size_t>(0, lp_fixtures().size()),
                         [](const auto& info) { return lp_fixtures()[info.param].name; });

TEST(LpFixtures, ThirtyWithCyclingCases) {
  const auto& fx = lp_fixtures();
  EXPECT_EQ(fx.size(), 30u);
  std::size_t infeasible = 0, unbounded = 0;
  for (const auto& f : fx) {
    infeasible += f.status == LpStatus::infeasible;
    unbounded += f.status == LpStatus::unbounded;
  }
  EXPECT_GT(infeasible, 0u);
  EXPECT_GT(unbounded, 0u);
}

}  // namespace
}  // namespace mhp
