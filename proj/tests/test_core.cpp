#include <gtest/gtest.h>

#include <cmath>

#include "mhp/contract.hpp"
#include "mhp/cost.hpp"
#include "mhp/errors.hpp"
#include "mhp/sampling.hpp"
#include "mhp/simplex.hpp"
#include "mhp/utility.hpp"

namespace mhp {
namespace {

// Frozen from tools/oracles/derived_values.py.
constexpr double kCara1Half = 0.6224593312018546;
constexpr double kCara2Half = 0.7310585786300049;

Lottery coin(double a, double b) { return Lottery({{a, 0.5}, {b, 0.5}}); }

TEST(ExpectedUtility, DegenerateAndCoinUnderLinear) {
  const auto u = UtilityFunction::linear();
  EXPECT_DOUBLE_EQ(expected_utility(u, Lottery::degenerate(0.5)), 0.5);
  EXPECT_DOUBLE_EQ(expected_utility(u, coin(0, 1)), 0.5);
}

TEST(ExpectedUtility, CaraMatchesClosedForm) {
  EXPECT_NEAR(expected_utility(UtilityFunction::cara(1.0), Lottery::degenerate(0.5)), kCara1Half, 1e-14);
  EXPECT_NEAR(UtilityFunction::cara(2.0)(0.5), kCara2Half, 1e-14);
  EXPECT_NEAR(UtilityFunction::cara(-1.5)(0.0), 0.0, 1e-15);
  EXPECT_NEAR(UtilityFunction::cara(-1.5)(1.0), 1.0, 1e-15);
}

TEST(Utility, InverseRoundTrips) {
  for (const auto& u : {UtilityFunction::linear(-1, 3), UtilityFunction::cara(0.7), UtilityFunction::cara(-2.0),
                        UtilityFunction::piecewise_linear({{-2, -1}, {0, 0}, {1, 1}, {4, 1.5}}, 0, 1)}) {
    for (double x : {-1.5, -0.2, 0.0, 0.3, 1.0, 2.5}) EXPECT_NEAR(u.inverse(u(x)), x, 1e-9) << x;
  }
}

TEST(Utility, RejectsBadParameters) {
  EXPECT_THROW(UtilityFunction::linear(1, 1), InputError);
  EXPECT_THROW(UtilityFunction::cara(0.0), InputError);
  EXPECT_THROW(UtilityFunction::piecewise_linear({{0, 0}, {1, 2}}, 0, 1), InputError);
  EXPECT_THROW(UtilityFunction::linear().with_domain(0, 1)(2.0), DomainError);
}

TEST(Utility, BoundednessFlags) {
  EXPECT_TRUE(UtilityFunction::linear().unbounded());
  EXPECT_FALSE(UtilityFunction::cara(1.0).unbounded_above());
  EXPECT_TRUE(UtilityFunction::cara(1.0).unbounded_below());
  EXPECT_FALSE(UtilityFunction::linear().with_domain(-5, 5).unbounded());
}

TEST(UtilityVector, Examples) {
  const auto u = UtilityFunction::linear();
  const auto space = OutputSpace::indexed(2);
  const double pays[] = {0.0, 1.0};
  EXPECT_EQ(utility_vector(u, Contract::degenerate(space, pays)), (std::vector<double>{0.0, 1.0}));
  const auto x = coin(-1, 3);
  const auto fc = utility_vector(u, Contract::constant(space, x));
  EXPECT_DOUBLE_EQ(fc[0], expected_utility(u, x));
  EXPECT_DOUBLE_EQ(fc[1], expected_utility(u, x));
  const Contract w(space, {coin(0, 1), Lottery::degenerate(1)});
  EXPECT_EQ(utility_vector(u, w), (std::vector<double>{0.5, 1.0}));
}

TEST(MixContracts, Examples) {
  const auto space = OutputSpace::indexed(2);
  const auto w0 = Contract::constant(space, Lottery::degenerate(0));
  const auto w1 = Contract::constant(space, Lottery::degenerate(1));
  EXPECT_EQ(mix_contracts(1.0, w0, w1), w0);
  EXPECT_EQ(mix_contracts(0.5, w0, w1), Contract::constant(space, coin(0, 1)));
}

TEST(MixContracts, CommutesWithUtilityVector) {
  Rng rng(11);
  SamplerConfig cfg;
  const auto space = OutputSpace::indexed(3);
  const auto u = UtilityFunction::cara(0.4);
  for (int t = 0; t < 500; ++t) {
    const auto w = random_contract(rng, space, cfg);
    const auto w2 = random_contract(rng, space, cfg);
    const double a = rng.uniform01();
    const auto f = utility_vector(u, w), f2 = utility_vector(u, w2);
    const auto fm = utility_vector(u, mix_contracts(a, w, w2));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(fm[i], a * f[i] + (1 - a) * f2[i], 1e-12);
  }
}

TEST(Fosd, Examples) {
  const SimplexPoint lo({1, 0}), hi({0, 1});
  EXPECT_TRUE(fosd(lo, lo));
  EXPECT_TRUE(fosd(hi, lo));
  EXPECT_FALSE(fosd(lo, hi));
  EXPECT_TRUE(fosd(SimplexPoint({0.2, 0.8}), SimplexPoint({0.5, 0.5})));
}

TEST(Fosd, PartialOrderOnSamples) {
  const auto grid = simplex_grid(3, 4);
  for (const auto& p : grid) {
    EXPECT_TRUE(fosd(p, p));
    for (const auto& q : grid) {
      if (fosd(p, q) && fosd(q, p)) {
        EXPECT_EQ(p, q);
      }
      for (const auto& r : grid) {
        if (fosd(p, q) && fosd(q, r)) {
          EXPECT_TRUE(fosd(p, r));
        }
      }
    }
  }
}

TEST(SimplexGrid, Examples) {
  const auto g = simplex_grid(2, 2);
  ASSERT_EQ(g.size(), 3u);
  for (const auto& p : {SimplexPoint({0, 1}), SimplexPoint({0.5, 0.5}), SimplexPoint({1, 0})})
    EXPECT_NE(std::find(g.begin(), g.end(), p), g.end());
  EXPECT_EQ(simplex_grid(1, 7), std::vector<SimplexPoint>{SimplexPoint({1})});
  EXPECT_EQ(simplex_grid(3, 2).size(), 6u);
  EXPECT_EQ(simplex_grid_size(4, 5), 56u);
  EXPECT_THROW(simplex_grid(3, 2000, 1000), SizeError);
}

TEST(SimplexPoint, RejectsInvalid) {
  EXPECT_THROW(SimplexPoint({0.5, 0.6}), InputError);
  EXPECT_THROW(SimplexPoint({-0.1, 1.1}), InputError);
  EXPECT_THROW(SimplexPoint(std::vector<double>{}), InputError);
}

TEST(CostAt, Examples) {
  EXPECT_DOUBLE_EQ(cost_at(CostFunction::quadratic1d(1, 0), SimplexPoint({0.5, 0.5})), 0.25);
  const auto g = CostFunction::grid({{SimplexPoint({1, 0}), 0.0}, {SimplexPoint({0, 1}), 0.5}});
  EXPECT_NEAR(cost_at(g, SimplexPoint({0.5, 0.5})), 0.25, 1e-12);
  EXPECT_NEAR(envelope_by_lp(g.points(), SimplexPoint({0.5, 0.5})), 0.25, 1e-9);
  const auto single = CostFunction::grid({{SimplexPoint({1, 0}), 0.0}});
  EXPECT_EQ(cost_at(single, SimplexPoint({0, 1})), kInf);
}

TEST(CostAt, InfinitePointsStayOffTheHull) {
  const auto g = CostFunction::grid(
      {{SimplexPoint({1, 0}), 0.0}, {SimplexPoint({0.5, 0.5}), 1.0}, {SimplexPoint({0, 1}), kInf}});
  EXPECT_NEAR(cost_at(g, SimplexPoint({0.75, 0.25})), 0.5, 1e-12);
  EXPECT_EQ(cost_at(g, SimplexPoint({0.25, 0.75})), kInf);
}

TEST(CostFunction, RejectsUngroundedAndBadParameters) {
  EXPECT_THROW(CostFunction::grid({{SimplexPoint({1, 0}), 0.2}}), InputError);
  EXPECT_THROW(CostFunction::grid({{SimplexPoint({1, 0}), kInf}}), InputError);
  EXPECT_THROW(CostFunction::quadratic1d(-1, 0.5), InputError);
  EXPECT_THROW(CostFunction::quadratic1d(1, 1.5), InputError);
}

std::vector<double> random_values(Rng& rng, std::size_t k) {
  std::vector<double> v(k);
  for (double& x : v) x = rng.uniform(0.0, 2.0);
  v[rng.index(k)] = 0.0;
  return v;
}

TEST(CostAt, GridEnvelopeMatchesLpOnRandomCosts) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 2;
    const auto grid = simplex_grid(n, n == 2 ? 6 : 3);
    const auto vals = random_values(rng, grid.size());
    std::vector<CostPoint> pts;
    for (std::size_t i = 0; i < grid.size(); ++i) pts.push_back({grid[i], vals[i]});
    const auto c = CostFunction::grid(pts);
    for (const auto& p : simplex_grid(n, 12)) EXPECT_NEAR(cost_at(c, p), envelope_by_lp(pts, p), 1e-9);
  }
}

TEST(CostAt, ConvexAlongSegments) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto grid = simplex_grid(3, 4);
    const auto vals = random_values(rng, grid.size());
    std::vector<CostPoint> pts;
    for (std::size_t i = 0; i < grid.size(); ++i) pts.push_back({grid[i], vals[i]});
    const auto c = CostFunction::grid(pts);
    const auto& a = grid[rng.index(grid.size())];
    const auto& b = grid[rng.index(grid.size())];
    std::vector<double> along;
    for (int k = 0; k <= 10; ++k) {
      std::vector<double> x(3);
      for (int i = 0; i < 3; ++i) x[i] = (1 - k / 10.0) * a[i] + k / 10.0 * b[i];
      along.push_back(cost_at(c, SimplexPoint(x, 1e-9)));
    }
    for (int k = 1; k < 10; ++k) EXPECT_LE(along[k], 0.5 * (along[k - 1] + along[k + 1]) + 1e-9);
  }
}

TEST(CostAt, Grounded) {
  Rng rng(3);
  const auto grid = simplex_grid(3, 5);
  const auto vals = random_values(rng, grid.size());
  std::vector<CostPoint> pts;
  for (std::size_t i = 0; i < grid.size(); ++i) pts.push_back({grid[i], vals[i]});
  const auto c = CostFunction::grid(pts);
  double lowest = kInf;
  for (const auto& p : grid) lowest = std::min(lowest, cost_at(c, p));
  EXPECT_EQ(lowest, 0.0);
  double coarse = kInf;
  const auto q = CostFunction::quadratic1d(2.0, 1.0 / 3.0);
  for (std::size_t m : {2u, 4u, 16u, 256u}) {
    double best = kInf;
    for (const auto& p : simplex_grid(2, m)) best = std::min(best, cost_at(q, p));
    EXPECT_LE(best, coarse);
    coarse = best;
  }
  EXPECT_LT(coarse, 1e-5);
}

}  // namespace
}  // namespace mhp
