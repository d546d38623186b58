#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "gainrank/builders.hpp"
#include "gainrank/classify.hpp"
#include "gainrank/error.hpp"
#include "gainrank/harness.hpp"
#include "gainrank/theorems.hpp"

using namespace gainrank;

TEST(Sampling, RootsOfUnityModes) {
  Rng rng(1);
  for (int k : {2, 4, 12}) {
    for (int i = 0; i < 200; ++i) {
      const UnitGain g = sample_unit_gain(rng, GainMode::roots_of_unity(k));
      const std::complex<double> z = std::pow(g.value(), k);
      EXPECT_NEAR(z.real(), 1.0, 1e-12);
      EXPECT_NEAR(z.imag(), 0.0, 1e-12);
    }
  }
  std::set<std::pair<double, double>> seen;
  for (int i = 0; i < 200; ++i) {
    const UnitGain g = sample_unit_gain(rng, GainMode::roots_of_unity(2));
    EXPECT_EQ(g.im(), 0.0);
    seen.insert({g.re(), g.im()});
  }
  EXPECT_EQ(seen.size(), 2u);
  EXPECT_THROW(GainMode::roots_of_unity(13), Error);
  EXPECT_THROW(GainMode::roots_of_unity(0), Error);
}

TEST(Sampling, DeterministicUnderSeed) {
  Rng a(42), b(42);
  const auto x = sample_gains(a, 5);
  const auto y = sample_gains(b, 5);
  ASSERT_EQ(x.size(), 5u);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i], y[i]);
  for (const UnitGain& g : x) EXPECT_NEAR(std::abs(g.value()), 1.0, 1e-15);
}

TEST(Generators, Shapes) {
  Rng rng(6);
  for (int n = 1; n <= 12; ++n) {
    const GainGraph t = random_tree(rng, n);
    EXPECT_EQ(t.order(), n);
    EXPECT_EQ(t.size(), n - 1);
    EXPECT_TRUE(t.is_connected());
  }
  const GainGraph grown = grow_pendant_trees(rng, build_cycle(4), 5);
  EXPECT_EQ(grown.order(), 9);
  EXPECT_EQ(grown.size(), 9);
  EXPECT_TRUE(grown.is_connected());
  for (int n = 3; n <= 10; ++n) {
    for (CycleType t : {CycleType::A, CycleType::B, CycleType::C, CycleType::D, CycleType::E}) {
      if (is_even_type(t) != (n % 2 == 0)) continue;
      const GainGraph c = forced_type_cycle(rng, n, t);
      std::vector<Vertex> order;
      for (int v = 1; v <= n; ++v) order.push_back(v);
      EXPECT_EQ(cycle_type(cycle_walk(c, order)), t);
    }
  }
}

TEST(Witnesses, AttainTheBounds) {
  for (auto [p, q] : {std::pair{3, 3}, {4, 4}, {3, 4}, {5, 3}, {6, 4}}) {
    const GainGraph w = sharpness_witness_infinity(p, q);
    EXPECT_EQ(w.order(), p + q);
    EXPECT_EQ(rank(w), infinity_rank_lower_bound(p, q).lower) << p << "," << q;
  }
  EXPECT_EQ(rank(sharpness_witness_theta(0, 1, 1)), 4);
  EXPECT_EQ(rank(sharpness_witness_theta(1, 1, 1)), 4);
  EXPECT_EQ(rank(sharpness_witness_theta(2, 1, 1)), 6);
  EXPECT_FALSE(pendant_twins(sharpness_witness_theta(2, 1, 1)).size());
}

TEST(Claims, RegistryAndAliases) {
  const auto ids = claim_ids();
  EXPECT_GE(ids.size(), 36u);
  EXPECT_EQ(canonical_claim("lemma2.3"), "cycle-inertia");
  EXPECT_EQ(canonical_claim("theorem3.4"), "bicyclic-bound");
  EXPECT_EQ(canonical_claim("table1.G9.iff"), "table1.G9.iff");
  try {
    verify_claim({"lemma9.9", 10, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
  }
}

TEST(Claims, ExamplesPass) {
  for (const char* claim : {"lemma2.3", "lemma2.2", "table1.G9.iff"}) {
    const Report r = verify_claim({claim, 300, 7});
    EXPECT_TRUE(r.passed()) << r.to_json();
    EXPECT_EQ(r.trials, 300);
  }
}

TEST(Claims, EveryClaimPassesAShortRun) {
  for (const std::string& id : claim_ids()) {
    const Report r = verify_claim({id, 40, 3, 10});
    EXPECT_TRUE(r.passed()) << r.to_json();
    EXPECT_GT(r.forward_checks + r.backward_checks, 0) << id;
  }
}

TEST(Claims, ReportsAreDeterministic) {
  const TrialSpec spec{"table2.G17.iff", 100, 99};
  EXPECT_EQ(verify_claim(spec).to_json(), verify_claim(spec).to_json());
  const TrialSpec other{"table2.G17.iff", 100, 100};
  EXPECT_NE(verify_claim(spec).to_json(), verify_claim(other).to_json());
}

TEST(Claims, TransformationLemmas) {
  for (auto which : {TransformationLemma::StarToNeighbor, TransformationLemma::StarMerge,
                     TransformationLemma::PathContraction}) {
    const Report r = verify_transformation_lemma(which, {"", 200, 5});
    EXPECT_TRUE(r.passed()) << r.to_json();
    EXPECT_EQ(r.backward_checks + r.forward_checks > 0, true);
  }
}

TEST(Claims, G4RankStaysBetweenFiveAndSix) {
  const Report r = iff_fuzz_table(CatalogId::G4, {"", 500, 11});
  EXPECT_TRUE(r.passed()) << r.to_json();
  EXPECT_EQ(r.backward_checks, 500);
}

TEST(Claims, RejectsNonPositiveTrialCounts) {
  EXPECT_THROW(verify_claim({"lemma2.3", 0, 1}), Error);
}
