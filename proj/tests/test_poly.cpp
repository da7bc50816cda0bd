#include "rcubic/errors.hpp"
#include "rcubic/oracle.hpp"
#include "rcubic/poly.hpp"
#include "rcubic/roots.hpp"

#include <gtest/gtest.h>

using namespace rcubic;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly p = UniPoly::constant(Rational(1));
  for (const auto& r : roots) p = p * UniPoly::linear_root(r);
  return p;
}

}  // namespace

TEST(UniPoly, TrimsAndEvaluates) {
  UniPoly p = UniPoly::descending({0, 0, 2, -3, 1});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(2)), Rational(3));
  EXPECT_EQ(p.derivative(), UniPoly::descending({4, -3}));
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ(p.to_string(), "2*t^2 - 3*t + 1");
}

TEST(UniPoly, DivmodReconstructs) {
  UniPoly a = UniPoly::descending({3, 0, -2, 5, 1});
  UniPoly b = UniPoly::descending({2, 1, -1});
  auto [q, r] = divmod(a, b);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(q * b + r, a);
  EXPECT_THROW(divmod(a, UniPoly()), std::domain_error);
}

TEST(UniPoly, GcdOfSharedFactors) {
  UniPoly common = from_roots({Rational(2), make_rational(-1, 3)});
  UniPoly a = common * from_roots({Rational(5)});
  UniPoly b = common * from_roots({Rational(7), Rational(7)});
  EXPECT_EQ(poly_gcd(a, b), common);
  EXPECT_EQ(poly_gcd(UniPoly(), UniPoly()), UniPoly());
}

TEST(UniPoly, PrimitiveIntegerCoefficients) {
  UniPoly p(std::vector<Rational>{make_rational(-1, 2), Rational(0), make_rational(-3, 4)});
  std::vector<Integer> want{Integer(2), Integer(0), Integer(3)};
  EXPECT_EQ(p.primitive_integer_coefficients(), want);
}

TEST(SquareFree, YunRecoversMultiplicities) {
  // (t-1)^3 (t+2)^2 (t^2+1)
  UniPoly p = from_roots({1, 1, 1, -2, -2}) * UniPoly::descending({1, 0, 1}) * Rational(6);
  auto parts = square_free_decomposition(p);
  UniPoly rebuilt = UniPoly::constant(p.leading());
  for (const auto& part : parts) {
    for (int k = 0; k < part.multiplicity; ++k) rebuilt = rebuilt * part.factor;
  }
  EXPECT_EQ(rebuilt, p);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].multiplicity, 1);
  EXPECT_EQ(parts[0].factor, UniPoly::descending({1, 0, 1}));
  EXPECT_EQ(parts[1].multiplicity, 2);
  EXPECT_EQ(parts[2].multiplicity, 3);
  EXPECT_EQ(square_free_part(p), from_roots({1, -2}) * UniPoly::descending({1, 0, 1}));
}

TEST(Sturm, CountsRootsInOpenInterval) {
  UniPoly p = from_roots({-3, 0, make_rational(1, 2), 4});
  EXPECT_EQ(sturm_count(p, Rational(-10), Rational(10)), 4);
  EXPECT_EQ(sturm_count(p, Rational(-1), Rational(1)), 2);
  EXPECT_EQ(sturm_count(p, make_rational(1, 4), make_rational(3, 4)), 1);
  EXPECT_THROW(sturm_count(p, Rational(0), Rational(1)), EndpointRootError);
  // t^2 + 1 has no real roots.
  EXPECT_EQ(sturm_count(UniPoly::descending({1, 0, 1}), Rational(-100), Rational(100)), 0);
}

TEST(Sturm, RootBoundEnclosesAllRoots) {
  UniPoly p = from_roots({-37, make_rational(1, 1000), 12}) * UniPoly::descending({5, 0, -7});
  Rational b = root_bound(p);
  EXPECT_EQ(sturm_count(p, -b, b), 5);
}

TEST(Roots, RationalAndQuadraticRootsAreExact) {
  // (2t - 1)(t^2 - 2)
  UniPoly p = UniPoly::descending({2, -1}) * UniPoly::descending({1, 0, -2});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& r : roots) EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(*roots[0].exact_value(), -QuadExt::sqrt_of(Rational(2)));
  EXPECT_EQ(*roots[1].exact_value(), QuadExt(make_rational(1, 2)));
  EXPECT_EQ(*roots[2].exact_value(), QuadExt::sqrt_of(Rational(2)));
}

TEST(Roots, IrreducibleQuarticGivesIntervals) {
  // t^4 - 10 t^2 + 1 has roots +-sqrt2 +- sqrt3, irreducible over Q.
  UniPoly p = UniPoly::descending({1, 0, -10, 0, 1});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 4u);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    ASSERT_FALSE(roots[i].is_exact());
    const RootInterval* iv = roots[i].as_interval();
    EXPECT_LT(iv->poly.sign_at(iv->lo) * iv->poly.sign_at(iv->hi), 0);
    if (i > 0) EXPECT_LT(compare_roots(roots[i - 1], roots[i]), 0);
  }
  // Known value: sqrt2 + sqrt3 is the largest root; check it lies in the
  // refined interval using exact squared comparisons.
  IsolatedRoot top = refine_root(roots[3], pow2_inverse(60));
  const RootInterval* iv = top.as_interval();
  ASSERT_NE(iv, nullptr);
  EXPECT_LE(iv->width(), pow2_inverse(60));
  // r = sqrt2 + sqrt3 satisfies r^2 = 5 + 2 sqrt6.
  QuadExt r2 = QuadExt(5) + QuadExt(Rational(0), Rational(2), Integer(6));
  EXPECT_LT(QuadExt(iv->lo * iv->lo), r2);
  EXPECT_GT(QuadExt(iv->hi * iv->hi), r2);
}

TEST(Roots, RepeatedRootsCountOnce) {
  UniPoly p = from_roots({1, 1, 1, -4});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(*roots[0].exact_value(), QuadExt(-4));
  EXPECT_EQ(*roots[1].exact_value(), QuadExt(1));
}

TEST(Roots, IntervalConstructorValidatesBracket) {
  UniPoly p = UniPoly::descending({1, 0, -2});
  EXPECT_NO_THROW(IsolatedRoot::interval(p, Rational(1), Rational(2)));
  EXPECT_THROW(IsolatedRoot::interval(p, Rational(2), Rational(3)), std::invalid_argument);
}

TEST(Roots, CompareMixedRepresentations) {
  UniPoly cubic = UniPoly::descending({1, 0, 0, -3});  // cube root of 3 ~ 1.442
  auto rs = isolate_real_roots(cubic);
  ASSERT_EQ(rs.size(), 1u);
  IsolatedRoot sqrt2 = IsolatedRoot::exact(QuadExt::sqrt_of(Rational(2)));  // ~1.414
  EXPECT_EQ(compare_roots(sqrt2, rs[0]), -1);
  EXPECT_EQ(compare_roots(rs[0], sqrt2), 1);
  EXPECT_EQ(compare_roots(sqrt2, sqrt2), 0);
}

// Property: for random products of distinct rational linear factors and an
// irreducible quadratic, isolation returns every root exactly once, in order.
TEST(Roots, RandomProductsProperty) {
  RandomSource rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    while (roots.size() < 3) {
      Rational r = rng.rational(6);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    UniPoly p = from_roots(roots) * UniPoly::descending({1, 0, 1}) * rng.rational(4);
    if (p.is_zero()) continue;
    std::sort(roots.begin(), roots.end());
    auto got = isolate_real_roots(p);
    ASSERT_EQ(got.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_EQ(*got[i].exact_value(), QuadExt(roots[i]));
  }
}
