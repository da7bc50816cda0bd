#pragma once

#include "rcubic/quad_ext.hpp"
#include "rcubic/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rcubic {

/// Dense univariate polynomial over Q. Coefficients are stored low to high
/// and trimmed, so the leading coefficient is nonzero unless the polynomial
/// is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> low_to_high);

  /// Convenience for literals: descending({1, 0, -2}) is t^2 - 2.
  static UniPoly descending(std::initializer_list<long> high_to_low);
  static UniPoly constant(const Rational& c);
  /// t - r
  static UniPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  QuadExt operator()(const QuadExt& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  std::vector<Integer> primitive_integer_coefficients() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws InternalInconsistency if the remainder is nonzero.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct SquareFreeFactor {
  UniPoly factor;  // monic, square-free, positive degree
  int multiplicity;
  friend bool operator==(const SquareFreeFactor&, const SquareFreeFactor&) = default;
};

/// Yun's algorithm. p = lc(p) * prod factor^multiplicity, factors pairwise
/// coprime, ordered by increasing multiplicity. Throws on the zero polynomial.
std::vector<SquareFreeFactor> square_free_decomposition(const UniPoly& p);

/// p / gcd(p, p'), monic.
UniPoly square_free_part(const UniPoly& p);

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
int sign_variations(const std::vector<UniPoly>& seq, const Rational& x);

/// Number of distinct real roots in the open interval (lo, hi).
/// Throws EndpointRootError when p(lo) or p(hi) is zero.
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// A power of two strictly larger than the absolute value of every real root.
Rational root_bound(const UniPoly& p);

}  // namespace rcubic
