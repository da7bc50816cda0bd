#pragma once

#include "rcubic/poly.hpp"
#include "rcubic/quad_ext.hpp"
#include "rcubic/rational.hpp"

#include <array>
#include <string>

namespace rcubic {

/// a0 (z1)^4 + a1 (z1)^3 z2 + a2 (z1)^2 (z2)^2 + a3 z1 (z2)^3 + a4 (z2)^4
struct BinaryQuartic {
  std::array<Rational, 5> a{};

  static BinaryQuartic of(long a0, long a1, long a2, long a3, long a4) {
    return BinaryQuartic{{Rational(a0), Rational(a1), Rational(a2), Rational(a3), Rational(a4)}};
  }

  bool is_zero() const {
    for (const auto& v : a)
      if (!rcubic::is_zero(v)) return false;
    return true;
  }

  Rational operator()(const Rational& z1, const Rational& z2) const {
    // Horner in z1 with z2 powers folded in.
    Rational acc(0);
    Rational z2p(1);
    std::array<Rational, 5> z2pow;
    for (std::size_t k = 0; k < 5; ++k) {
      z2pow[k] = z2p;
      z2p *= z2;
    }
    for (std::size_t k = 0; k < 5; ++k) {
      acc = acc * z1 + a[k] * z2pow[k];
    }
    return acc;
  }

  QuadExt operator()(const QuadExt& z1, const QuadExt& z2) const {
    QuadExt acc;
    std::array<QuadExt, 5> z2pow;
    QuadExt z2p(1);
    for (std::size_t k = 0; k < 5; ++k) {
      z2pow[k] = z2p;
      z2p *= z2;
    }
    for (std::size_t k = 0; k < 5; ++k) acc = acc * z1 + QuadExt(a[k]) * z2pow[k];
    return acc;
  }

  /// q(t, 1) as a univariate polynomial in t.
  UniPoly dehomogenized() const {
    return UniPoly(std::vector<Rational>{a[4], a[3], a[2], a[1], a[0]});
  }

  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;
};

}  // namespace rcubic
