#pragma once

#include "rcubic/poly.hpp"
#include "rcubic/quad_ext.hpp"
#include "rcubic/rational.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace rcubic {

/// Open interval (lo, hi) holding exactly one root of a square-free
/// polynomial, with p(lo) and p(hi) nonzero and of opposite sign.
struct RootInterval {
  UniPoly poly;
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// One real root, held exactly (rational or quadratic irrational) or by an
/// isolating interval that can be refined on demand.
class IsolatedRoot {
 public:
  using Repr = std::variant<Rational, QuadExt, RootInterval>;

  static IsolatedRoot exact(const Rational& value);
  /// Stores rational values as Rational.
  static IsolatedRoot exact(const QuadExt& value);
  static IsolatedRoot interval(UniPoly poly, Rational lo, Rational hi);

  const Repr& repr() const { return repr_; }
  bool is_exact() const { return !std::holds_alternative<RootInterval>(repr_); }
  bool is_rational() const { return std::holds_alternative<Rational>(repr_); }
  /// Exact value when available.
  std::optional<QuadExt> exact_value() const;
  const RootInterval* as_interval() const { return std::get_if<RootInterval>(&repr_); }

  /// Rational bounds [lo, hi] on the root with hi - lo <= width.
  std::pair<Rational, Rational> enclosure(const Rational& width) const;

 private:
  explicit IsolatedRoot(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

/// Disjoint isolating intervals for every real root of a square-free
/// polynomial, in ascending order. Pure Sturm bisection, no exact roots.
std::vector<RootInterval> isolating_intervals(const UniPoly& square_free);

/// Roots of a square-free polynomial, ascending. Rational roots are found
/// exactly; if the remaining factor has degree <= 2 its roots are returned
/// as QuadExt, otherwise as intervals.
std::vector<IsolatedRoot> isolate_square_free(const UniPoly& square_free);

/// One entry per distinct real root of p, ascending.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p);

/// Bisects until the interval is at most `width` wide. Exact roots pass
/// through unchanged; a midpoint that hits the root yields an exact root.
IsolatedRoot refine_root(const IsolatedRoot& r, const Rational& width);

/// Orders two roots by value: -1, 0 or 1. Distinct roots are always
/// separated; 0 is returned only for equal exact values.
int compare_roots(const IsolatedRoot& a, const IsolatedRoot& b);

}  // namespace rcubic
