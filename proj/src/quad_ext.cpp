#include "rcubic/quad_ext.hpp"

#include <stdexcept>

namespace rcubic {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1UL << 17;

}  // namespace

// Trial division up to 2^17 followed by a perfect-square test on the
// cofactor. A cofactor below 2^51 that survives both steps has at most two
// prime factors above the limit and is not a square, so it is square-free.
// Larger cofactors may in principle hide a square of a prime > 2^17; in that
// case d is valid but not minimal.
void split_square(const Integer& n, Integer& square_root_part, Integer& square_free_part) {
  if (n < 0) throw std::domain_error("split_square: negative argument");
  square_root_part = 1;
  square_free_part = 1;
  if (n == 0) {
    square_root_part = 0;
    square_free_part = 0;
    return;
  }
  Integer m = n;
  for (unsigned long p = 2; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    Integer pp(p);
    if (pp * pp > m) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) square_root_part *= p;
    if (exponent % 2 == 1) square_free_part *= p;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    square_root_part *= r;
  } else {
    square_free_part *= m;
  }
}

QuadExt::QuadExt(const Rational& p, const Rational& q, const Integer& radicand) : p_(p), q_(q) {
  if (radicand < 0) throw std::domain_error("QuadExt: negative radicand");
  Integer s, d;
  split_square(radicand, s, d);
  q_ *= s;
  d_ = d;
  normalize();
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
  if (r < 0) throw std::domain_error("QuadExt::sqrt_of: negative argument");
  // sqrt(n/m) = sqrt(n*m)/m
  Integer nm = r.get_num() * r.get_den();
  return QuadExt(Rational(0), make_rational(Integer(1), r.get_den()), nm);
}

void QuadExt::normalize() {
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  }
  if (d_ == 0 || rcubic::is_zero(q_)) {
    q_ = 0;
    d_ = 0;
  }
}

void QuadExt::unify_field(const QuadExt& o) {
  if (o.d_ == 0 || o.d_ == d_) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  throw std::domain_error("QuadExt: mixing sqrt(" + d_.get_str() + ") and sqrt(" +
                          o.d_.get_str() + ")");
}

int QuadExt::sign() const {
  int sp = rcubic::sign(p_);
  int sq = rcubic::sign(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // opposite signs: compare p^2 with q^2 d
  Rational lhs = p_ * p_;
  Rational rhs = q_ * q_ * Rational(d_);
  return lhs > rhs ? sp : sq;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.q_ = -r.q_;
  return r;
}

Rational QuadExt::norm() const { return p_ * p_ - q_ * q_ * Rational(d_); }

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  unify_field(o);
  p_ += o.p_;
  q_ += o.q_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  unify_field(o);
  p_ -= o.p_;
  q_ -= o.q_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  unify_field(o);
  Rational d(d_);
  Rational p = p_ * o.p_ + q_ * o.q_ * d;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
  unify_field(o);
  Rational n = o.norm();
  *this *= o.conjugate();
  p_ /= n;
  q_ /= n;
  normalize();
  return *this;
}

void QuadExt::enclose(const Rational& width, Rational& lo, Rational& hi) const {
  if (d_ == 0) {
    lo = p_;
    hi = p_;
    return;
  }
  // sqrt(d) in [s/2^k, (s+1)/2^k] with s = isqrt(d * 4^k); choose k with |q|/2^k <= width.
  unsigned k = 0;
  Rational aq = abs(q_);
  while (aq * pow2_inverse(k) > width) ++k;
  Integer scaled = d_;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Rational root_lo = Rational(s) * pow2_inverse(k);
  Rational root_hi = Rational(s + 1) * pow2_inverse(k);
  if (q_ > 0) {
    lo = p_ + q_ * root_lo;
    hi = p_ + q_ * root_hi;
  } else {
    lo = p_ + q_ * root_hi;
    hi = p_ + q_ * root_lo;
  }
}

std::string QuadExt::to_string() const {
  if (d_ == 0) return rcubic::to_string(p_);
  std::string out;
  if (!rcubic::is_zero(p_)) out = rcubic::to_string(p_) + (q_ > 0 ? "+" : "");
  out += rcubic::to_string(q_) + "*sqrt(" + d_.get_str() + ")";
  return out;
}

}  // namespace rcubic
