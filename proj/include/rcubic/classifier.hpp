#pragma once

#include "rcubic/cubic_map.hpp"
#include "rcubic/quartic.hpp"
#include "rcubic/roots.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rcubic {

enum class QuarticKind { zero, indefinite, semidefinite, definite };
enum class Sign { none, positive, negative };
enum class SemiDefiniteSubcase { none, two_double_roots, quadruple_root, one_double_root };

std::string to_string(QuarticKind k);
std::string to_string(Sign s);
std::string to_string(SemiDefiniteSubcase s);

/// A point (z1, z2) of the plane standing for its class in RP^1.
struct ProjectivePoint {
  Rational z1;
  Rational z2;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// A real root [t : 1] of a binary form, or the root [1 : 0] at infinity.
struct ProjectiveRoot {
  std::optional<IsolatedRoot> finite;  // empty at infinity
  int multiplicity = 0;

  bool at_infinity() const { return !finite.has_value(); }
  bool is_exact() const { return at_infinity() || finite->is_exact(); }
  /// Canonical representative (t, 1) or (1, 0); empty for interval roots.
  std::optional<std::array<QuadExt, 2>> exact_representative() const;
};

/// True when both denote the same point of RP^1.
bool same_root(const ProjectiveRoot& a, const ProjectiveRoot& b);

struct Classification {
  QuarticKind kind = QuarticKind::zero;
  Sign sign = Sign::none;
  SemiDefiniteSubcase subcase = SemiDefiniteSubcase::none;
  /// Root at infinity first, then finite roots by decreasing t.
  std::vector<ProjectiveRoot> roots;
  /// Point at which the sign was read (semi-definite and definite forms).
  std::optional<ProjectivePoint> sign_point;
  /// Indefinite forms: points with strictly positive and negative values.
  std::optional<ProjectivePoint> positive_witness;
  std::optional<ProjectivePoint> negative_witness;

  std::vector<int> multiplicities() const;  // sorted ascending
};

/// Real projective roots with multiplicities. Throws std::invalid_argument
/// on the zero form.
std::vector<ProjectiveRoot> projective_real_roots(const BinaryQuartic& q);

Classification classify_quartic(const BinaryQuartic& q);

/// Classifies omega[1] of the map. Throws NotCubicError when the cubic
/// part vanishes.
Classification classify_map(const CubicMap& f);

/// (1,0), (0,1), then (b, a) for each a/b of the Calkin-Wilf sequence:
/// (1,1), (2,1), (1,2), (3,1), (2,3), ...
std::vector<ProjectivePoint> sign_test_points(std::size_t n);

}  // namespace rcubic
