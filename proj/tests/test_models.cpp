#include <gtest/gtest.h>

#include <cmath>

#include "mhp/errors.hpp"
#include "mhp/oracle.hpp"
#include "mhp/sampling.hpp"
#include "mhp/utility.hpp"

namespace mhp {
namespace {

// Frozen from tools/oracles/derived_values.py (bounded scalar search).
constexpr double kIncomeValueSteep = 0.568821521705317;   // lambda 5, f = (0, 1)
constexpr double kIncomeValueWide = 1.580830895954234;    // lambda 5, f = (-1, 2)

const OutputSpace kTwo = OutputSpace::indexed(2);

Contract pays(double a, double b) {
  const double x[] = {a, b};
  return Contract::degenerate(kTwo, x);
}
Contract sure(double x) { return Contract::constant(kTwo, Lottery::degenerate(x)); }

PreferenceOracle mh(double alpha, double beta, const UtilityFunction& u = UtilityFunction::linear()) {
  return PreferenceOracle::moral_hazard(kTwo, CostFunction::quadratic1d(alpha, beta), u);
}

TEST(Value, MoralHazardExamples) {
  EXPECT_NEAR(value(mh(1, 0), pays(0, 1)), 0.25, 1e-12);
  EXPECT_NEAR(value(mh(1, 1), pays(0, 1)), 1.0, 1e-12);
  const auto arg = argmax_efforts(mh(1, 1), pays(0, 1));
  ASSERT_EQ(arg.size(), 1u);
  EXPECT_NEAR(arg[0].high_mass(), 1.0, 1e-12);
}

TEST(Value, ConstantContractIsExpectedUtilityForEveryKind) {
  const auto u = UtilityFunction::cara(0.8);
  const auto c = CostFunction::quadratic1d(1.5, 0.4);
  const Lottery x({{-1, 0.3}, {2, 0.7}});
  const auto w = Contract::constant(kTwo, x);
  for (const auto& o : {PreferenceOracle::moral_hazard(kTwo, c, u), PreferenceOracle::malevolent(kTwo, c, u),
                        PreferenceOracle::income_effects(kTwo, c, u, 5.0)})
    EXPECT_NEAR(value(o, w), expected_utility(u, x), 1e-9);
}

TEST(Value, IncomeEffectsMatchesReference) {
  const auto o = PreferenceOracle::income_effects(kTwo, CostFunction::quadratic1d(1, 0.5), UtilityFunction::linear(), 5.0);
  EXPECT_NEAR(value(o, pays(0, 1)), kIncomeValueSteep, 1e-9);
  EXPECT_NEAR(value(o, pays(-1, 2)), kIncomeValueWide, 1e-9);
}

TEST(Value, IncomeEffectsOnThreeStatesUsesGrid) {
  std::vector<CostPoint> pts;
  for (const auto& p : simplex_grid(3, 2)) pts.push_back({p, p[0] == 1.0 ? 0.0 : 1.0});
  const auto o = PreferenceOracle::income_effects(OutputSpace::indexed(3), CostFunction::grid(pts),
                                                  UtilityFunction::linear(), 2.0, 4);
  const double x[] = {0, 0, 0};
  EXPECT_NEAR(value(o, Contract::degenerate(o.space(), x)), 0.0, 1e-12);
  EXPECT_THROW(PreferenceOracle::income_effects(kTwo, CostFunction::quadratic1d(1, 0), UtilityFunction::linear(), 0.0),
               InputError);
}

TEST(Compare, Examples) {
  const auto o = mh(1, 0);
  EXPECT_EQ(compare(o, pays(0, 1), pays(0, 1)), Preference::indifferent);
  EXPECT_EQ(compare(o, sure(1), sure(0)), Preference::strictly_prefers);
  EXPECT_EQ(compare(o, sure(0), sure(1)), Preference::strictly_dispreferred);
  EXPECT_EQ(compare(o, pays(0, 1), sure(0.25)), Preference::indifferent);
}

TEST(Compare, RejectsForeignSpace) {
  const auto w = Contract::constant(OutputSpace::indexed(3), Lottery::degenerate(0));
  EXPECT_THROW(value(mh(1, 0), w), DomainError);
}

TEST(ArgmaxEfforts, Examples) {
  const auto a = argmax_efforts(mh(1, 0), pays(0, 1));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_NEAR(a[0].high_mass(), 0.5, 1e-12);
  const auto b = argmax_efforts(mh(1, 0), pays(1, 0));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_NEAR(b[0].high_mass(), 0.0, 1e-12);
  const auto z = argmax_efforts(mh(1, 0.3), sure(2));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_NEAR(z[0].high_mass(), 0.3, 1e-12);
  const auto g = CostFunction::grid({{SimplexPoint({1, 0}), 0}, {SimplexPoint({0.5, 0.5}), 0}, {SimplexPoint({0, 1}), 1}});
  const auto flat = argmax_efforts(PreferenceOracle::moral_hazard(kTwo, g, UtilityFunction::linear()), sure(0));
  for (const auto& p : flat) EXPECT_NEAR(cost_at(g, p), 0.0, 1e-12);
  EXPECT_GE(flat.size(), 2u);
}

TEST(Conjugate, Examples) {
  const auto q = CostFunction::quadratic1d(1, 0);
  const std::vector<double> k = {0.7, 0.7};
  EXPECT_NEAR(conjugate(q, k), 0.7, 1e-12);
  const std::vector<double> steep = {0, 1};
  EXPECT_NEAR(conjugate(q, steep), 0.25, 1e-12);
  const auto single = CostFunction::grid({{SimplexPoint({1, 0}), 0.0}, {SimplexPoint({0, 1}), kInf}});
  EXPECT_NEAR(conjugate(single, steep), 0.0, 1e-12);
  const auto p = conjugate_argmax(q, steep);
  EXPECT_NEAR(p.high_mass(), 0.5, 1e-12);
}

TEST(CertaintyEquivalent, Examples) {
  EXPECT_NEAR(certainty_equivalent(mh(1, 0.5, UtilityFunction::cara(1)), sure(0.37)), 0.37, 1e-9);
  EXPECT_NEAR(certainty_equivalent(mh(1, 0), pays(0, 1)), 0.25, 1e-12);
  const auto mal = PreferenceOracle::malevolent(kTwo, CostFunction::quadratic1d(1, 0), UtilityFunction::linear());
  EXPECT_NEAR(certainty_equivalent(mal, pays(0, 1)), 0.0, 1e-12);
}

TEST(ContractFromUtilityVector, Examples) {
  const std::vector<double> f = {0, 1};
  EXPECT_EQ(contract_from_utility_vector(UtilityFunction::linear(), kTwo, f), pays(0, 1));
  const std::vector<double> zero = {0, 0};
  EXPECT_EQ(contract_from_utility_vector(UtilityFunction::linear(2, 3), kTwo, zero), sure(2));
  const auto w = contract_from_utility_vector(UtilityFunction::cara(1.3, -1, 4), kTwo, f);
  EXPECT_NEAR(w.at(0).min_prize(), -1.0, 1e-9);
  EXPECT_NEAR(w.at(1).min_prize(), 4.0, 1e-9);
}

// --- properties over sampled contracts --------------------------------------

class OracleProperties : public ::testing::Test {
 protected:
  Rng rng{77};
  SamplerConfig cfg;
  const CostFunction grid3 = [] {
    std::vector<CostPoint> pts;
    for (const auto& p : simplex_grid(3, 4)) {
      const double d = p[2] - 0.4;
      pts.push_back({p, 3 * d * d + 0.5 * p[1] * p[1]});
    }
    double lo = kInf;
    for (const auto& x : pts) lo = std::min(lo, x.value);
    for (auto& x : pts) x.value -= lo;
    return CostFunction::grid(pts);
  }();
};

TEST_F(OracleProperties, MoralHazardConvexMalevolentConcaveInMixtures) {
  const auto u = UtilityFunction::cara(0.5);
  const OutputSpace s3 = OutputSpace::indexed(3);
  const auto a = PreferenceOracle::moral_hazard(s3, grid3, u);
  const auto b = PreferenceOracle::malevolent(s3, grid3, u);
  for (int t = 0; t < 2000; ++t) {
    const auto w = random_contract(rng, s3, cfg), w2 = random_contract(rng, s3, cfg);
    const double al = random_alpha(rng, cfg);
    const auto m = mix_contracts(al, w, w2);
    EXPECT_LE(value(a, m), al * value(a, w) + (1 - al) * value(a, w2) + 1e-9);
    EXPECT_GE(value(b, m), al * value(b, w) + (1 - al) * value(b, w2) - 1e-9);
  }
}

TEST_F(OracleProperties, TranslationShiftsValueExactly) {
  const auto u = UtilityFunction::linear();
  const OutputSpace s3 = OutputSpace::indexed(3);
  const auto o = PreferenceOracle::moral_hazard(s3, grid3, u);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> f(3);
    for (double& x : f) x = rng.uniform(-4, 4);
    const double k = rng.uniform(-3, 3);
    std::vector<double> g = f;
    for (double& x : g) x += k;
    EXPECT_NEAR(o.value_of_utilities(g), o.value_of_utilities(f) + k, 1e-12);
  }
}

TEST_F(OracleProperties, ConjugateConvexMonotoneAndFenchel) {
  for (int t = 0; t < 500; ++t) {
    std::vector<double> f(3), g(3), h(3);
    for (int i = 0; i < 3; ++i) {
      f[i] = rng.uniform(-5, 5);
      g[i] = f[i] + rng.uniform(0, 1);
      h[i] = rng.uniform(-5, 5);
    }
    EXPECT_LE(conjugate(grid3, f), conjugate(grid3, g) + 1e-12);
    std::vector<double> mid(3);
    for (int i = 0; i < 3; ++i) mid[i] = 0.5 * (f[i] + h[i]);
    EXPECT_LE(conjugate(grid3, mid), 0.5 * (conjugate(grid3, f) + conjugate(grid3, h)) + 1e-12);
    for (const auto& p : simplex_grid(3, 6)) {
      const double c = cost_at(grid3, p);
      if (std::isfinite(c)) {
        EXPECT_GE(conjugate(grid3, f), dot(f, p) - c - 1e-12);
      }
    }
  }
}

TEST_F(OracleProperties, CertaintyEquivalentIsIndifferentToContract) {
  const auto o = mh(2, 0.6, UtilityFunction::cara(-0.7));
  for (int t = 0; t < 200; ++t) {
    const auto w = random_contract(rng, kTwo, cfg);
    EXPECT_EQ(compare(o, w, sure(certainty_equivalent(o, w))), Preference::indifferent);
  }
}

}  // namespace
}  // namespace mhp
