#include "rcubic/oracle.hpp"

#include <gtest/gtest.h>

using namespace rcubic;

TEST(RandomSource, ReproducibleAndBounded) {
  RandomSource a(99), b(99);
  for (int k = 0; k < 500; ++k) {
    Rational x = a.rational(5);
    EXPECT_EQ(x, b.rational(5));
    EXPECT_LE(abs(x.get_num()), 5);
    EXPECT_LE(x.get_den(), 5);
  }
  RandomSource c(1);
  for (int k = 0; k < 500; ++k) {
    long v = c.integer(-2, 3);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 3);
  }
}

TEST(RandomSource, GeneratedObjectsMeetContracts) {
  GeneratorConfig cfg{5, 5, 100};
  for (const auto& f : random_cubic_maps(cfg)) EXPECT_TRUE(f.is_cubic());
  for (const auto& phi : random_invertible_changes(cfg)) EXPECT_TRUE(phi.invertible());
  for (const auto& phi : random_invertible_changes(cfg, false)) EXPECT_EQ(phi.a, (std::array<Rational, 2>{0, 0}));
  RandomSource rng(6);
  for (int k = 0; k < 100; ++k) EXPECT_FALSE(rng.singular_change(5).invertible());
  EXPECT_EQ(random_cubic_maps(cfg), random_cubic_maps(cfg));
}

TEST(SignProfile, SamplePointsAndSigns) {
  auto pts = projective_sample_points(6);
  std::vector<ProjectivePoint> want{{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}};
  EXPECT_EQ(pts, want);
  // z1^2 z2^2 - z2^4 vanishes at (1,1) and (-1,1), negative at (0,1).
  BinaryQuartic q = BinaryQuartic::of(0, 0, 1, 0, -1);
  SignProfile s = sign_profile(q, 6);
  EXPECT_TRUE(s.saw_positive);
  EXPECT_TRUE(s.saw_negative);
  EXPECT_EQ(s.zero_points.size(), 3u);  // (1,0) too
  EXPECT_THROW(sign_profile(q, 0), std::invalid_argument);
}

TEST(Conformance, PrintedTableDiffersAtTwoSites) {
  ConformanceReport r = symbolic_expansion_check({3, 5, 200});
  EXPECT_EQ(r.cases, 200u);
  ASSERT_EQ(r.sites.size(), 2u);
  EXPECT_EQ(r.sites[0].form, 2);
  EXPECT_EQ(r.sites[0].monomial, (Monomial4{0, 3, 1, 0}));
  EXPECT_EQ(combination_to_string(r.sites[0].printed), "G2222");
  EXPECT_EQ(combination_to_string(r.sites[0].derived), "G1222");
  EXPECT_EQ(r.sites[1].form, 4);
  EXPECT_EQ(r.sites[1].monomial, (Monomial4{0, 2, 0, 2}));
  EXPECT_EQ(combination_to_string(r.sites[1].printed), "G1222");
  EXPECT_EQ(combination_to_string(r.sites[1].derived), "G2222");
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(r.derived_mismatches[k], 0u);
    EXPECT_EQ(r.patched_mismatches[k], 0u);
    bool typo_form = k == 1 || k == 3;
    EXPECT_EQ(r.printed_mismatches[k] > 0, typo_form) << "form " << k + 1;
  }
}

TEST(IdentityTrials, ForcedSingularShare) {
  IdentityTrialSummary s = run_identity_trials({8, 5, 100});
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.right_cases, 100u);
  EXPECT_EQ(s.left_cases, 100u);
  EXPECT_EQ(s.right_singular_cases, 10u);
}
