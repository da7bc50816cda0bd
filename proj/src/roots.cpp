#include "rcubic/roots.hpp"

#include "rcubic/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcubic {

namespace {

constexpr int kMaxCompareRounds = 4096;

int count_in(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

// A rational strictly inside (lo, hi) at which p does not vanish.
Rational split_point(const UniPoly& p, const Rational& lo, const Rational& hi) {
  Rational m = midpoint(lo, hi);
  if (p.sign_at(m) != 0) return m;
  for (long den = 3;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational c = lo + (hi - lo) * make_rational(num, den);
      if (p.sign_at(c) != 0) return c;
    }
  }
}

void bisect(const UniPoly& p, const std::vector<UniPoly>& seq, const Rational& lo,
            const Rational& hi, std::vector<RootInterval>& out) {
  int n = count_in(seq, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({p, lo, hi});
    return;
  }
  Rational m = split_point(p, lo, hi);
  bisect(p, seq, lo, m, out);
  bisect(p, seq, m, hi, out);
}

}  // namespace

IsolatedRoot IsolatedRoot::exact(const Rational& value) { return IsolatedRoot(Repr(value)); }

IsolatedRoot IsolatedRoot::exact(const QuadExt& value) {
  if (value.is_rational()) return IsolatedRoot(Repr(value.rational_part()));
  return IsolatedRoot(Repr(value));
}

IsolatedRoot IsolatedRoot::interval(UniPoly poly, Rational lo, Rational hi) {
  if (!(lo < hi)) throw std::invalid_argument("root interval must have lo < hi");
  int slo = poly.sign_at(lo);
  int shi = poly.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::invalid_argument("root interval endpoints must have opposite nonzero signs");
  }
  return IsolatedRoot(Repr(RootInterval{std::move(poly), std::move(lo), std::move(hi)}));
}

std::optional<QuadExt> IsolatedRoot::exact_value() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return QuadExt(*r);
  if (const auto* q = std::get_if<QuadExt>(&repr_)) return *q;
  return std::nullopt;
}

std::pair<Rational, Rational> IsolatedRoot::enclosure(const Rational& width) const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return {*r, *r};
  if (const auto* q = std::get_if<QuadExt>(&repr_)) {
    Rational lo, hi;
    q->enclose(width, lo, hi);
    return {lo, hi};
  }
  IsolatedRoot refined = refine_root(*this, width);
  if (const auto* r = std::get_if<Rational>(&refined.repr_)) return {*r, *r};
  const auto& iv = std::get<RootInterval>(refined.repr_);
  return {iv.lo, iv.hi};
}

std::vector<RootInterval> isolating_intervals(const UniPoly& square_free) {
  std::vector<RootInterval> out;
  if (square_free.degree() <= 0) return out;
  auto seq = sturm_sequence(square_free);
  Rational b = root_bound(square_free);
  bisect(square_free, seq, Rational(-b), b, out);
  return out;
}

std::vector<IsolatedRoot> isolate_square_free(const UniPoly& square_free) {
  std::vector<IsolatedRoot> roots;
  if (square_free.degree() <= 0) return roots;

  // A rational root n/d in lowest terms of an integer polynomial has d | lc,
  // so lc * root is an integer. Once an interval is narrower than 1/|lc|
  // it holds at most two such candidates.
  auto ints = square_free.primitive_integer_coefficients();
  Integer lc = abs(ints.back());
  Rational candidate_width = make_rational(Integer(1), lc);
  UniPoly rest = square_free;
  for (const auto& iv : isolating_intervals(square_free)) {
    IsolatedRoot r = refine_root(IsolatedRoot::interval(iv.poly, iv.lo, iv.hi), candidate_width);
    if (r.is_rational()) {
      const Rational& v = std::get<Rational>(r.repr());
      roots.push_back(r);
      rest = exact_quotient(rest, UniPoly::linear_root(v));
      continue;
    }
    const auto& narrowed = *r.as_interval();
    Rational scaled_lo = narrowed.lo * Rational(lc);
    Rational scaled_hi = narrowed.hi * Rational(lc);
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
    for (; Rational(k) <= scaled_hi; ++k) {
      Rational c = make_rational(k, lc);
      if (square_free.sign_at(c) == 0) {
        roots.push_back(IsolatedRoot::exact(c));
        rest = exact_quotient(rest, UniPoly::linear_root(c));
        break;
      }
    }
  }

  if (rest.degree() == 1) {
    roots.push_back(IsolatedRoot::exact(Rational(-rest.coeff(0) / rest.coeff(1))));
  } else if (rest.degree() == 2) {
    const Rational a = rest.coeff(2);
    const Rational b = rest.coeff(1);
    const Rational c = rest.coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc > 0) {
      QuadExt s = QuadExt::sqrt_of(disc);
      QuadExt center(Rational(-b / (2 * a)));
      QuadExt half = s / QuadExt(Rational(2 * a));
      roots.push_back(IsolatedRoot::exact(center - half));
      roots.push_back(IsolatedRoot::exact(center + half));
    }
  } else if (rest.degree() >= 3) {
    for (const auto& iv : isolating_intervals(rest)) {
      roots.push_back(IsolatedRoot::interval(iv.poly, iv.lo, iv.hi));
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return compare_roots(x, y) < 0; });
  return roots;
}

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  std::vector<IsolatedRoot> roots;
  for (const auto& f : square_free_decomposition(p)) {
    auto part = isolate_square_free(f.factor);
    roots.insert(roots.end(), part.begin(), part.end());
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return compare_roots(x, y) < 0; });
  return roots;
}

IsolatedRoot refine_root(const IsolatedRoot& r, const Rational& width) {
  if (!(width > 0)) throw std::invalid_argument("refine_root: width must be positive");
  const RootInterval* iv = r.as_interval();
  if (iv == nullptr) return r;
  Rational lo = iv->lo;
  Rational hi = iv->hi;
  int slo = iv->poly.sign_at(lo);
  while (hi - lo > width) {
    Rational m = midpoint(lo, hi);
    int sm = iv->poly.sign_at(m);
    if (sm == 0) return IsolatedRoot::exact(m);
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return IsolatedRoot::interval(iv->poly, lo, hi);
}

int compare_roots(const IsolatedRoot& a, const IsolatedRoot& b) {
  auto ea = a.exact_value();
  auto eb = b.exact_value();
  if (ea && eb) {
    const Integer& da = ea->radicand();
    const Integer& db = eb->radicand();
    if (da == 0 || db == 0 || da == db) {
      if (*ea == *eb) return 0;
      return *ea < *eb ? -1 : 1;
    }
  }
  Rational width(1);
  for (int round = 0; round < kMaxCompareRounds; ++round) {
    auto [alo, ahi] = a.enclosure(width);
    auto [blo, bhi] = b.enclosure(width);
    if (ahi < blo) return -1;
    if (bhi < alo) return 1;
    width /= 2;
  }
  throw InternalInconsistency("compare_roots: roots could not be separated");
}

}  // namespace rcubic
