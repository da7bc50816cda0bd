#pragma once

#include "rcubic/rational.hpp"

#include <string>

namespace rcubic {

/// An element p + q*sqrt(d) of a real quadratic field Q(sqrt d).
///
/// d is a non-negative square-free integer; d == 0 (and equivalently q == 0)
/// denotes a plain rational. Values from different fields may only be
/// combined when at least one of them is rational; otherwise the operation
/// throws std::domain_error.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& p) : p_(p) {}  // NOLINT(google-explicit-constructor)

  /// Builds p + q*sqrt(radicand). The radicand may be any non-negative
  /// integer; square factors are pulled into q.
  QuadExt(const Rational& p, const Rational& q, const Integer& radicand);

  /// sqrt(r) for a rational r >= 0.
  static QuadExt sqrt_of(const Rational& r);

  const Rational& rational_part() const { return p_; }
  const Rational& radical_part() const { return q_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return rcubic::is_zero(p_) && d_ == 0; }
  int sign() const;

  QuadExt conjugate() const;
  /// p^2 - q^2 d, the field norm.
  Rational norm() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
  friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QuadExt& a, const QuadExt& b) { return b < a; }
  friend bool operator<=(const QuadExt& a, const QuadExt& b) { return !(b < a); }
  friend bool operator>=(const QuadExt& a, const QuadExt& b) { return !(a < b); }

  /// Rational enclosure [lo, hi] of the value with hi - lo <= width.
  void enclose(const Rational& width, Rational& lo, Rational& hi) const;

  /// "p", or "p+q*sqrt(d)" for irrational values.
  std::string to_string() const;

 private:
  void normalize();
  void unify_field(const QuadExt& o);

  Rational p_;
  Rational q_;
  Integer d_;  // 0 when rational
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline int sign(const QuadExt& x) { return x.sign(); }
inline std::string to_string(const QuadExt& x) { return x.to_string(); }

/// Writes n = s^2 * d with d square-free (best effort for huge n, see .cpp).
void split_square(const Integer& n, Integer& square_root_part, Integer& square_free_part);

}  // namespace rcubic
