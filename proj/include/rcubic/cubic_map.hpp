#pragma once

#include "rcubic/quad_ext.hpp"
#include "rcubic/rational.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace rcubic {

/// Column order of the cubic tensor: lower-index multisets 111, 112, 122, 222.
/// Index j holds the multiset with j twos.
inline constexpr std::array<const char*, 4> kCubicColumnNames{"111", "112", "122", "222"};
inline constexpr std::array<const char*, 3> kQuadraticNames{"11", "12", "22"};

/// Polynomial map R^2 -> R^2 of degree <= 3 with coefficients in K:
///
///   y^i = F^i_111 (x1)^3 + 3 F^i_112 (x1)^2 x2 + 3 F^i_122 x1 (x2)^2 + F^i_222 (x2)^3
///       + Q^i_11 (x1)^2 + 2 Q^i_12 x1 x2 + Q^i_22 (x2)^2
///       + L^i_1 x1 + L^i_2 x2 + c^i
///
/// F and Q hold symmetric-tensor components, so mixed monomials carry the
/// binomial weights 3 and 2.
template <class K>
struct CubicMapT {
  std::array<std::array<K, 4>, 2> F{};  // F[i][j]: output i, column j
  std::array<std::array<K, 3>, 2> Q{};  // Q[i][{11,12,22}]
  std::array<std::array<K, 2>, 2> L{};  // L[i][m]
  std::array<K, 2> c{};

  bool is_cubic() const {
    for (const auto& row : F)
      for (const auto& v : row)
        if (!is_zero(v)) return true;
    return false;
  }

  /// Column j of F as a 2-vector.
  std::array<K, 2> column(std::size_t j) const { return {F[0][j], F[1][j]}; }

  friend bool operator==(const CubicMapT&, const CubicMapT&) = default;
};

/// Affine change x -> T x + a.
template <class K>
struct AffineChangeT {
  std::array<std::array<K, 2>, 2> T{};
  std::array<K, 2> a{};

  static AffineChangeT identity() {
    AffineChangeT r;
    r.T[0][0] = K(1);
    r.T[1][1] = K(1);
    return r;
  }
  static AffineChangeT linear(K t11, K t12, K t21, K t22) {
    AffineChangeT r;
    r.T = {{{t11, t12}, {t21, t22}}};
    return r;
  }

  K det() const { return T[0][0] * T[1][1] - T[0][1] * T[1][0]; }
  bool invertible() const { return !is_zero(det()); }

  friend bool operator==(const AffineChangeT&, const AffineChangeT&) = default;
};

/// Index of each determinant in a sextet.
enum class G : std::size_t { g1111 = 0, g1112, g1122, g1212, g1222, g2222 };

inline constexpr std::array<const char*, 6> kSextetNames{"G1111", "G1112", "G1122",
                                                         "G1212", "G1222", "G2222"};

/// Column pairs (j, k) whose 2x2 determinant gives each sextet entry.
inline constexpr std::array<std::array<std::size_t, 2>, 6> kSextetColumns{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class K>
struct DetSextetT {
  std::array<K, 6> g{};

  const K& operator[](G k) const { return g[static_cast<std::size_t>(k)]; }
  K& operator[](G k) { return g[static_cast<std::size_t>(k)]; }
  const K& operator[](std::size_t k) const { return g[k]; }
  K& operator[](std::size_t k) { return g[k]; }

  friend bool operator==(const DetSextetT&, const DetSextetT&) = default;
};

using CubicMap = CubicMapT<Rational>;
using AffineChange = AffineChangeT<Rational>;
using DetSextet = DetSextetT<Rational>;
using CubicMapQ = CubicMapT<QuadExt>;
using AffineChangeQ = AffineChangeT<QuadExt>;
using DetSextetQ = DetSextetT<QuadExt>;

/// Exact value of both outputs at x.
template <class K>
std::array<K, 2> evaluate(const CubicMapT<K>& f, const std::array<K, 2>& x) {
  const K& x1 = x[0];
  const K& x2 = x[1];
  K x11 = x1 * x1;
  K x12 = x1 * x2;
  K x22 = x2 * x2;
  std::array<K, 2> y{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& F = f.F[i];
    const auto& Q = f.Q[i];
    K v = F[0] * x11 * x1 + K(3) * F[1] * x11 * x2 + K(3) * F[2] * x1 * x22 + F[3] * x22 * x2;
    v = v + Q[0] * x11 + K(2) * Q[1] * x12 + Q[2] * x22;
    v = v + f.L[i][0] * x1 + f.L[i][1] * x2 + f.c[i];
    y[i] = v;
  }
  return y;
}

template <class K>
std::array<K, 2> apply(const AffineChangeT<K>& phi, const std::array<K, 2>& x) {
  return {phi.T[0][0] * x[0] + phi.T[0][1] * x[1] + phi.a[0],
          phi.T[1][0] * x[0] + phi.T[1][1] * x[1] + phi.a[1]};
}

namespace detail {

// Bivariate polynomial of total degree <= 3: c[i][j] multiplies u1^i u2^j.
template <class K>
using Bi3 = std::array<std::array<K, 4>, 4>;

template <class K>
Bi3<K> bi_mul(const Bi3<K>& a, const Bi3<K>& b) {
  Bi3<K> r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; i + j < 4; ++j) {
      if (is_zero(a[i][j])) continue;
      for (std::size_t k = 0; i + k < 4; ++k)
        for (std::size_t l = 0; i + j + k + l < 4 && j + l < 4; ++l) {
          if (is_zero(b[k][l])) continue;
          r[i + k][j + l] = r[i + k][j + l] + a[i][j] * b[k][l];
        }
    }
  return r;
}

template <class K>
Bi3<K> to_monomials(const CubicMapT<K>& f, std::size_t i) {
  Bi3<K> p{};
  p[3][0] = f.F[i][0];
  p[2][1] = K(3) * f.F[i][1];
  p[1][2] = K(3) * f.F[i][2];
  p[0][3] = f.F[i][3];
  p[2][0] = f.Q[i][0];
  p[1][1] = K(2) * f.Q[i][1];
  p[0][2] = f.Q[i][2];
  p[1][0] = f.L[i][0];
  p[0][1] = f.L[i][1];
  p[0][0] = f.c[i];
  return p;
}

template <class K>
void from_monomials(const Bi3<K>& p, CubicMapT<K>& f, std::size_t i) {
  const K third = K(1) / K(3);
  const K half = K(1) / K(2);
  f.F[i] = {p[3][0], p[2][1] * third, p[1][2] * third, p[0][3]};
  f.Q[i] = {p[2][0], p[1][1] * half, p[0][2]};
  f.L[i] = {p[1][0], p[0][1]};
  f.c[i] = p[0][0];
}

}  // namespace detail

/// f o phi, computed by substituting x = T u + a into each output and
/// expanding.
template <class K>
CubicMapT<K> compose_right(const CubicMapT<K>& f, const AffineChangeT<K>& phi) {
  using detail::Bi3;
  // x1, x2 as linear polynomials in u.
  std::array<Bi3<K>, 2> x{};
  for (std::size_t m = 0; m < 2; ++m) {
    x[m][1][0] = phi.T[m][0];
    x[m][0][1] = phi.T[m][1];
    x[m][0][0] = phi.a[m];
  }
  Bi3<K> one{};
  one[0][0] = K(1);
  // pw[e][m] = x_m^e
  std::array<std::array<Bi3<K>, 2>, 4> pw{};
  for (std::size_t m = 0; m < 2; ++m) {
    pw[0][m] = one;
    for (std::size_t e = 1; e < 4; ++e) pw[e][m] = detail::bi_mul(pw[e - 1][m], x[m]);
  }
  CubicMapT<K> out;
  for (std::size_t i = 0; i < 2; ++i) {
    Bi3<K> src = detail::to_monomials(f, i);
    Bi3<K> acc{};
    for (std::size_t e1 = 0; e1 < 4; ++e1)
      for (std::size_t e2 = 0; e1 + e2 < 4; ++e2) {
        if (is_zero(src[e1][e2])) continue;
        Bi3<K> term = detail::bi_mul(pw[e1][0], pw[e2][1]);
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; a + b < 4; ++b) acc[a][b] = acc[a][b] + src[e1][e2] * term[a][b];
      }
    detail::from_monomials(acc, out, i);
  }
  return out;
}

/// s o f: outputs are mixed by S and shifted by the translation.
template <class K>
CubicMapT<K> compose_left(const AffineChangeT<K>& s, const CubicMapT<K>& f) {
  CubicMapT<K> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const K& s0 = s.T[i][0];
    const K& s1 = s.T[i][1];
    for (std::size_t j = 0; j < 4; ++j) out.F[i][j] = s0 * f.F[0][j] + s1 * f.F[1][j];
    for (std::size_t j = 0; j < 3; ++j) out.Q[i][j] = s0 * f.Q[0][j] + s1 * f.Q[1][j];
    for (std::size_t j = 0; j < 2; ++j) out.L[i][j] = s0 * f.L[0][j] + s1 * f.L[1][j];
    out.c[i] = s0 * f.c[0] + s1 * f.c[1] + s.a[i];
  }
  return out;
}

template <class K>
DetSextetT<K> determinants(const CubicMapT<K>& f) {
  DetSextetT<K> g;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [a, b] = kSextetColumns[k];
    g[k] = f.F[0][a] * f.F[1][b] - f.F[0][b] * f.F[1][a];
  }
  return g;
}

CubicMapQ lift(const CubicMap& f);
AffineChangeQ lift(const AffineChange& phi);

/// Builds a map from its F rows only (Q, L, c zero), tensor components.
CubicMap map_from_tensor(const std::array<long, 4>& f1, const std::array<long, 4>& f2);

/// Coefficient input conventions for build_map.
enum class CoefficientMode { tensor, polynomial };

/// Raw coefficient bundle in either convention. In polynomial mode the
/// entries are plain monomial coefficients and are divided by the binomial
/// weights on construction.
struct CoefficientBundle {
  std::array<std::array<Rational, 4>, 2> F{};
  std::array<std::array<Rational, 3>, 2> Q{};
  std::array<std::array<Rational, 2>, 2> L{};
  std::array<Rational, 2> c{};
};

CubicMap build_map(const CoefficientBundle& raw, CoefficientMode mode);
/// Inverse of build_map for the given convention.
CoefficientBundle to_bundle(const CubicMap& f, CoefficientMode mode);

}  // namespace rcubic
