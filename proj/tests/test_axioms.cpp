#include <gtest/gtest.h>

#include "mhp/axioms.hpp"
#include "mhp/dataset.hpp"
#include "mhp/errors.hpp"

namespace mhp {
namespace {

const OutputSpace kTwo = OutputSpace::indexed(2);
const CostFunction kQuad = CostFunction::quadratic1d(1.0, 0.5);

SamplerConfig sampler(std::uint64_t seed, std::size_t n = 10'000, unsigned jobs = 1) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  cfg.jobs = jobs;
  return cfg;
}

PreferenceOracle moral_hazard() { return PreferenceOracle::moral_hazard(kTwo, kQuad, UtilityFunction::linear()); }
PreferenceOracle malevolent() { return PreferenceOracle::malevolent(kTwo, kQuad, UtilityFunction::linear()); }
PreferenceOracle income() { return PreferenceOracle::income_effects(kTwo, kQuad, UtilityFunction::linear(), 5.0); }

TEST(CheckAxiom, MoralHazardPassesQuasiconvexity) {
  const auto v = check_axiom(moral_hazard(), Axiom::quasiconvexity, sampler(1));
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.samples, 10'000u);
  EXPECT_GE(v.hypothesis_samples, 100u);
}

TEST(CheckAxiom, MoralHazardCaraPassesEverything) {
  const auto o = PreferenceOracle::moral_hazard(kTwo, kQuad, UtilityFunction::cara(-0.8));
  for (Axiom a : kAllAxioms) {
    const auto v = check_axiom(o, a, sampler(2, 5'000));
    EXPECT_TRUE(v.passed) << axiom_name(a);
    EXPECT_EQ(v.surrogate, a == Axiom::continuity_surrogate);
  }
}

TEST(CheckAxiom, MalevolentViolatesQuasiconvexity) {
  const auto o = malevolent();
  const auto v = check_axiom(o, Axiom::quasiconvexity, sampler(7, 100'000));
  ASSERT_FALSE(v.passed);
  ASSERT_TRUE(v.witness);
  EXPECT_GE(v.witness->margin, 1e-6);
  const auto again = reverify_axiom_witness(o, Axiom::quasiconvexity, *v.witness);
  ASSERT_TRUE(again);
  EXPECT_NEAR(*again, v.witness->margin, 1e-9);
  // The same witness is not a violation for the moral-hazard oracle.
  EXPECT_FALSE(reverify_axiom_witness(moral_hazard(), Axiom::quasiconvexity, *v.witness));
}

TEST(CheckAxiom, IncomeEffectsViolatesMmr) {
  const auto o = income();
  const auto v = check_axiom(o, Axiom::mmr_independence, sampler(3, 100'000));
  ASSERT_FALSE(v.passed);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->contracts.size(), 4u);
  const auto again = reverify_axiom_witness(o, Axiom::mmr_independence, *v.witness);
  ASSERT_TRUE(again);
  EXPECT_NEAR(*again, v.witness->margin, 1e-9);
}

TEST(CheckAxiom, DeterministicAcrossJobCounts) {
  for (Axiom a : {Axiom::quasiconvexity, Axiom::mmr_independence}) {
    const auto o = a == Axiom::quasiconvexity ? malevolent() : income();
    const auto one = check_axiom(o, a, sampler(99, 20'000, 1));
    const auto four = check_axiom(o, a, sampler(99, 20'000, 4));
    EXPECT_EQ(one.samples, four.samples);
    EXPECT_EQ(one.hypothesis_samples, four.hypothesis_samples);
    ASSERT_EQ(one.witness.has_value(), four.witness.has_value());
    if (one.witness) {
      EXPECT_EQ(one.witness->contracts, four.witness->contracts);
      EXPECT_EQ(one.witness->margin, four.witness->margin);
    }
  }
  const auto p1 = check_axiom(moral_hazard(), Axiom::weak_order, sampler(5, 3'000, 1));
  const auto p3 = check_axiom(moral_hazard(), Axiom::weak_order, sampler(5, 3'000, 3));
  EXPECT_EQ(p1.hypothesis_samples, p3.hypothesis_samples);
}

TEST(CheckAxiom, RejectsBadConfig) {
  auto cfg = sampler(1);
  cfg.n_samples = 0;
  EXPECT_THROW(check_axiom(moral_hazard(), Axiom::dominance, cfg), InputError);
}

TEST(AxiomNames, RoundTripAndAliases) {
  for (Axiom a : kAllAxioms) EXPECT_EQ(parse_axiom(axiom_name(a)), a);
  EXPECT_EQ(parse_axiom("continuity"), Axiom::continuity_surrogate);
  EXPECT_EQ(parse_axiom("vnm"), Axiom::vnm_independence);
  EXPECT_EQ(parse_axiom("mmr"), Axiom::mmr_independence);
  EXPECT_FALSE(parse_axiom("transitivity-ish"));
}

// --- datasets ---------------------------------------------------------------

Contract sure(double x) { return Contract::constant(kTwo, Lottery::degenerate(x)); }
Contract pays(double a, double b) {
  const double x[] = {a, b};
  return Contract::degenerate(kTwo, x);
}

TEST(DatasetConsistency, ThreeCycle) {
  const auto a = pays(1, 0), b = pays(0, 1), c = pays(0.5, 0.5);
  const ChoiceDataset d{{{a, b, Recorded::strict}, {b, c, Recorded::strict}, {c, a, Recorded::strict}}};
  const auto r = dataset_consistency(d);
  EXPECT_FALSE(r.consistent);
  ASSERT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.cycles[0].size(), 3u);
}

TEST(DatasetConsistency, MonotoneAndEmpty) {
  EXPECT_TRUE(dataset_consistency({{{sure(1), sure(0), Recorded::strict}}}).consistent);
  EXPECT_TRUE(dataset_consistency({}).consistent);
}

TEST(DatasetConsistency, MonotonicityViolation) {
  const auto r = dataset_consistency({{{sure(0), sure(1), Recorded::strict}, {sure(2), sure(2), Recorded::strict}}});
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.monotonicity_violations, (std::vector<std::size_t>{0, 1}));
}

TEST(DatasetConsistency, DominanceViolation) {
  const auto r = dataset_consistency({{{pays(0, 1), pays(1, 2), Recorded::strict}}});
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.dominance_violations, (std::vector<std::size_t>{0}));
}

TEST(DatasetConsistency, IndifferenceIsSymmetricNotACycle) {
  const auto a = pays(1, 0), b = pays(0, 1);
  EXPECT_TRUE(dataset_consistency({{{a, b, Recorded::indifferent}}}).consistent);
  const auto r = dataset_consistency({{{a, b, Recorded::indifferent}, {a, b, Recorded::strict}}});
  EXPECT_FALSE(r.consistent);
}

TEST(DatasetConsistency, MixedSpacesRejected) {
  const auto other = Contract::constant(OutputSpace::indexed(3), Lottery::degenerate(0));
  EXPECT_THROW(dataset_consistency({{{sure(0), other, Recorded::strict}}}), InputError);
}

}  // namespace
}  // namespace mhp
