#pragma once

#include "rcubic/cubic_map.hpp"
#include "rcubic/omega.hpp"

#include <array>

namespace rcubic {

struct IdentityCheck {
  Rational lhs;  // determinant of the composed map
  Rational rhs;  // value predicted from the original map
  bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  std::array<IdentityCheck, 6> checks;
  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
};

/// (z1, z2, z3, z4) = (T^1_1, T^2_1, T^1_2, T^2_2).
std::array<Rational, 4> change_entries(const AffineChange& phi);

/// For f = f_tilde o phi, compares each G_k(f) with det T * omega~[k](z).
/// Singular T is allowed.
IdentityReport verify_right_composition(const CubicMap& f_tilde, const AffineChange& phi);

/// For f = s o f_tilde, compares each G_k(f) with det S * G~_k. Throws
/// std::invalid_argument when s is singular.
IdentityReport verify_left_composition(const AffineChange& s, const CubicMap& f_tilde);

}  // namespace rcubic
