#include <gtest/gtest.h>

#include <cmath>

#include "mhp/errors.hpp"
#include "mhp/figures.hpp"
#include "mhp/identification.hpp"
#include "mhp/sampling.hpp"

namespace mhp {
namespace {

// Frozen from tools/oracles/derived_values.py.
constexpr double kCara1Half = 0.6224593312018546;
constexpr double kBiconjugateMid = 0.25;

const OutputSpace kTwo = OutputSpace::indexed(2);

PreferenceOracle mh(const CostFunction& c, const UtilityFunction& u) {
  return PreferenceOracle::moral_hazard(OutputSpace::indexed(c.dimension()), c, u);
}

IdentificationConfig prize_config() {
  IdentificationConfig cfg;
  cfg.prize_grid = parse_range("-5:0.5:5");
  cfg.prize_grid.push_back(0.5);
  return cfg;
}

TEST(RecoverU, LinearAndCara) {
  const auto cfg = prize_config();
  const auto lin = recover_u(mh(CostFunction::quadratic1d(1, 0.5), UtilityFunction::linear()), cfg);
  EXPECT_NEAR(lin(0.5), 0.5, 1e-8);
  EXPECT_EQ(lin(0.0), 0.0);
  EXPECT_EQ(lin(1.0), 1.0);
  const auto ca = recover_u(mh(CostFunction::quadratic1d(1, 0.5), UtilityFunction::cara(1)), cfg);
  EXPECT_NEAR(ca(0.5), kCara1Half, 1e-8);
  for (double x : cfg.prize_grid) EXPECT_NEAR(ca(x), UtilityFunction::cara(1)(x), 1e-3) << x;
}

TEST(RecoverU, InvariantToCost) {
  const auto cfg = prize_config();
  const auto u = UtilityFunction::cara(-0.4);
  const auto a = recover_u(mh(CostFunction::quadratic1d(1, 0.5), u), cfg);
  const auto b = recover_u(mh(CostFunction::quadratic1d(3, 0.1), u), cfg);
  for (double x : cfg.prize_grid) EXPECT_EQ(a(x), b(x));
}

TEST(RecoverU, EmptyGridIsAnInputError) {
  IdentificationConfig cfg;
  EXPECT_THROW(recover_u(mh(CostFunction::quadratic1d(1, 0.5), UtilityFunction::linear()), cfg), InputError);
}

TEST(RecoverC, QuadraticMidpointAndZero) {
  IdentificationConfig cfg;
  cfg.prize_grid = parse_range("-5:0.5:5");
  cfg.f_grid = utility_lattice(2, 4.0, 0.1);
  cfg.p_grid = simplex_grid(2, 10);
  const auto o = mh(CostFunction::quadratic1d(1, 0), UtilityFunction::linear());
  const auto values = recover_c_values(o, UtilityFunction::linear(), cfg);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (cfg.p_grid[i].high_mass() == 0.5) {
      EXPECT_NEAR(values[i], kBiconjugateMid, 1e-2);
    }
    if (cfg.p_grid[i].high_mass() == 0.0) {
      EXPECT_NEAR(values[i], 0.0, 1e-8);
    }
  }
  const auto c = recover_c(o, UtilityFunction::linear(), cfg);
  EXPECT_NEAR(cost_at(c, SimplexPoint::binary(0.5)), kBiconjugateMid, 1e-2);
}

TEST(RecoverC, ConstantDirectionsCarryNoSlopeInformation) {
  IdentificationConfig cfg;
  cfg.f_grid = {{0, 0}, {1, 1}, {-2, -2}};
  cfg.p_grid = simplex_grid(2, 5);
  const auto o = mh(CostFunction::quadratic1d(2, 0.3), UtilityFunction::linear());
  for (double v : recover_c_values(o, UtilityFunction::linear(), cfg)) EXPECT_NEAR(v, 0.0, 1e-8);
}

TEST(RecoverC, BoundedUtilityIsRejected) {
  IdentificationConfig cfg;
  cfg.f_grid = utility_lattice(2, 1.0, 0.5);
  cfg.p_grid = simplex_grid(2, 5);
  const auto u = UtilityFunction::cara(1.0);
  EXPECT_THROW(recover_c_values(mh(CostFunction::quadratic1d(1, 0), u), u, cfg), PreconditionError);
}

TEST(RecoverC, RefiningTheLatticeNeverLowersEstimates) {
  IdentificationConfig cfg;
  cfg.p_grid = simplex_grid(2, 20);
  const auto o = mh(CostFunction::quadratic1d(1.5, 0.2), UtilityFunction::linear());
  std::vector<double> prev;
  for (double step : {0.4, 0.2, 0.1}) {
    cfg.f_grid = utility_lattice(2, 4.0, step);
    const auto v = recover_c_values(o, UtilityFunction::linear(), cfg);
    for (std::size_t i = 0; i < prev.size(); ++i) EXPECT_GE(v[i], prev[i] - 1e-12);
    prev = v;
  }
}

TEST(UtilityLattice, ShapeAndValidation) {
  const auto l = utility_lattice(2, 4.0, 0.1);
  EXPECT_EQ(l.size(), 81u);
  for (const auto& f : l) EXPECT_EQ(f[0], 0.0);
  EXPECT_EQ(utility_lattice(3, 1.0, 0.5).size(), 25u);
  EXPECT_THROW(utility_lattice(2, 1.0, 0.3), InputError);
  EXPECT_THROW(utility_lattice(2, 1.0, 0.0), InputError);
}

TEST(Biconjugate, ExactAtGeneratingPointsWithSupportingSlopes) {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    std::vector<CostPoint> pts;
    const auto grid = simplex_grid(3, 4);
    const std::size_t zero = rng.index(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) pts.push_back({grid[i], i == zero ? 0.0 : rng.uniform(0, 1)});
    const auto c = CostFunction::grid(pts);
    auto f = utility_lattice(3, std::ceil(lipschitz_scale(c)) + 1.0, 0.5);
    for (auto& g : supporting_slopes(c)) f.push_back(g);
    for (const auto& cp : c.points()) EXPECT_NEAR(biconjugate(c, f, cp.p), cost_at(c, cp.p), 1e-9);
  }
}

TEST(SupportingSlopes, PlanesStayBelowTheCost) {
  const auto g = simplex_grid(2, 6);
  std::vector<CostPoint> pts;
  for (const auto& p : g) pts.push_back({p, (p.high_mass() - 0.3) * (p.high_mass() - 0.3)});
  double lo = kInf;
  for (const auto& x : pts) lo = std::min(lo, x.value);
  for (auto& x : pts) x.value -= lo;
  const auto c = CostFunction::grid(pts);
  for (const auto& f : supporting_slopes(c))
    for (const auto& p : simplex_grid(2, 50)) EXPECT_LE(dot(f, p) - conjugate(c, f), cost_at(c, p) + 1e-9);
}

TEST(FindDisagreement, DistinctRepresentationsDisagree) {
  SamplerConfig cfg;
  cfg.seed = 4;
  cfg.n_samples = 10'000;
  const auto a = mh(CostFunction::quadratic1d(1, 0.5), UtilityFunction::linear());
  const auto b = mh(CostFunction::quadratic1d(2, 0.5), UtilityFunction::linear());
  const auto c = mh(CostFunction::quadratic1d(1, 0.5), UtilityFunction::cara(0.5));
  EXPECT_TRUE(find_disagreement(a, b, cfg).has_value());
  EXPECT_TRUE(find_disagreement(a, c, cfg).has_value());
  EXPECT_FALSE(find_disagreement(a, a, cfg).has_value());
}

TEST(BehavioralCertaintyEquivalent, MatchesParametric) {
  Rng rng(12);
  SamplerConfig scfg;
  const auto u = UtilityFunction::cara(0.6);
  const auto o = mh(CostFunction::quadratic1d(1.2, 0.4), u);
  for (int t = 0; t < 50; ++t) {
    const auto w = random_contract(rng, kTwo, scfg);
    EXPECT_NEAR(behavioral_certainty_equivalent(o, w, u, 1e-10), certainty_equivalent(o, w), 1e-8);
  }
}

}  // namespace
}  // namespace mhp
