#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.
// Nothing here calls the library routine it is used to check.

#include "rcubic/cubic_map.hpp"
#include "rcubic/quartic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

namespace rcubic::testing {

inline CubicMap map_a() { return map_from_tensor({1, 0, 0, 1}, {0, 1, 1, 0}); }
inline CubicMap map_b() { return map_from_tensor({1, 0, 0, 0}, {0, 0, 0, 1}); }
inline CubicMap map_c() { return map_from_tensor({1, 0, 0, 1}, {2, 0, 0, 2}); }
inline CubicMap map_d() { return map_from_tensor({1, 1, 1, 1}, {0, 0, 0, 1}); }
// omega1 = t^4 + 3, positive definite.
inline CubicMap map_definite() { return map_from_tensor({1, 0, 1, 0}, {0, 1, 0, 3}); }
// omega1 = z1^4, a quadruple root at [0 : 1].
inline CubicMap map_quadruple() { return map_from_tensor({1, 0, 0, 0}, {0, 1, 0, 0}); }
// omega1 = z1^4 + z1^2 z2^2, a single double root.
inline CubicMap map_one_double() { return map_from_tensor({1, 0, 0, 0}, {0, 1, 0, 1}); }
// omega1 = z1^4 - 4 z1^2 z2^2 + 4 z2^4 = (z1^2 - 2 z2^2)^2.
inline CubicMap map_sqrt2_double() { return map_from_tensor({1, 0, 2, 0}, {0, 1, 0, 2}); }

/// Symmetric tensor component F^i_{abc} with a, b, c in {0, 1}.
inline Rational tensor_entry(const CubicMap& f, std::size_t i, std::size_t a, std::size_t b, std::size_t c) {
  return f.F[i][a + b + c];
}

/// Cubic part of f o T by direct contraction
///   F^i_{jkl} = sum_{abc} F~^i_{abc} T^a_j T^b_k T^c_l.
inline std::array<std::array<Rational, 4>, 2> contract_cubic(const CubicMap& f,
                                                             const std::array<std::array<Rational, 2>, 2>& t) {
  // Representative index triples for the four column multisets.
  constexpr std::array<std::array<std::size_t, 3>, 4> reps{{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
  std::array<std::array<Rational, 4>, 2> out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t col = 0; col < 4; ++col) {
      auto [j, k, l] = reps[col];
      Rational acc = 0;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t c = 0; c < 2; ++c) acc += tensor_entry(f, i, a, b, c) * t[a][j] * t[b][k] * t[c][l];
      out[i][col] = acc;
    }
  return out;
}

/// The six 2x2 column determinants, written out longhand.
inline std::array<Rational, 6> sextet_longhand(const std::array<std::array<Rational, 4>, 2>& F) {
  auto det = [&](std::size_t p, std::size_t q) -> Rational { return F[0][p] * F[1][q] - F[0][q] * F[1][p]; };
  return {det(0, 1), det(0, 2), det(0, 3), det(1, 2), det(1, 3), det(2, 3)};
}

/// Product of binary forms given as coefficient lists in z1-descending
/// order (a0 z1^n + a1 z1^(n-1) z2 + ...).
inline std::vector<Rational> form_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline BinaryQuartic quartic_from(const std::vector<Rational>& c) {
  BinaryQuartic q;
  for (std::size_t k = 0; k < 5; ++k) q.a[k] = c.at(k);
  return q;
}

/// Exact rational square root if r is a square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer n = r.get_num();
  Integer d = r.get_den();
  Integer sn = sqrt(n);
  Integer sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

/// A map whose omega1 is q, built from columns (1,0), (x1,y1), (x2,y2),
/// (x3,y3) by solving the determinant relations for the given x1. Needs
/// a0 != 0; returns nothing when the quadratic for x2 has no rational root.
inline std::optional<CubicMap> realize_quartic(const BinaryQuartic& q, const Rational& x1) {
  const auto& a = q.a;
  if (a[0] == 0) return std::nullopt;
  // y1 = a0, y2 = a1/2, y3 = a2 - 3(x1 y2 - x2 a0),
  // x3 = (x1 y3 - a3/2)/a0, a4 = x2 y3 - x3 y2, quadratic in x2.
  Rational y1 = a[0];
  Rational y2 = a[1] / 2;
  Rational y3c = a[2] - 3 * x1 * y2;  // y3 = y3c + 3 a0 x2
  // Expanding a4 = x2 (y3c + 3 a0 x2) - y2 (x1 (y3c + 3 a0 x2) - a3/2) / a0.
  Rational A = 3 * a[0];
  Rational B = y3c - 3 * y2 * x1;
  Rational C = -y2 * (x1 * y3c - a[3] / 2) / a[0] - a[4];
  std::optional<Rational> x2;
  if (A == 0) {
    if (B == 0) return std::nullopt;
    x2 = -C / B;
  } else {
    auto root = rational_sqrt(B * B - 4 * A * C);
    if (!root) return std::nullopt;
    x2 = (-B + *root) / (2 * A);
  }
  Rational y3 = y3c + 3 * a[0] * *x2;
  Rational x3 = (x1 * y3 - a[3] / 2) / a[0];
  CubicMap f;
  f.F[0] = {Rational(1), x1, *x2, x3};
  f.F[1] = {Rational(0), y1, y2, y3};
  return f;
}

}  // namespace rcubic::testing
