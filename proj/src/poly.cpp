#include "rcubic/poly.hpp"

#include "rcubic/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcubic {

UniPoly::UniPoly(std::vector<Rational> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

UniPoly UniPoly::descending(std::initializer_list<long> high_to_low) {
  std::vector<Rational> c;
  c.reserve(high_to_low.size());
  for (long v : high_to_low) c.emplace_back(v);
  std::reverse(c.begin(), c.end());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::linear_root(const Rational& r) {
  return UniPoly(std::vector<Rational>{Rational(-r), Rational(1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && rcubic::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QuadExt UniPoly::operator()(const QuadExt& x) const {
  QuadExt acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += QuadExt(*it);
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

std::vector<Integer> UniPoly::primitive_integer_coefficients() const {
  Integer den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content(0);
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content == 0) return out;
  if (!coeffs_.empty() && coeffs_.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (rcubic::is_zero(c)) continue;
    std::string term;
    Rational mag = abs(c);
    bool unit = mag == 1 && i > 0;
    if (!unit) term = rcubic::to_string(mag);
    if (i > 0) {
      if (!unit) term += "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational& lb = b.leading();
  const auto& bc = b.coefficients();
  for (int k = da - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
    quot[static_cast<std::size_t>(k)] = q;
    if (rcubic::is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalInconsistency("inexact polynomial division");
  return q;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly df = f.derivative();
  UniPoly a = poly_gcd(f, df);
  UniPoly b = exact_quotient(f, a);
  UniPoly c = exact_quotient(df, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  return out;
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  return exact_quotient(p, poly_gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const UniPoly& a = seq[seq.size() - 2];
    const UniPoly& b = seq.back();
    next = -divmod(a, b).second;
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++variations;
    last = sg;
  }
  return variations;
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (p.sign_at(lo) == 0) throw EndpointRootError("sturm_count: lower endpoint " + to_string(lo) + " is a root");
  if (p.sign_at(hi) == 0) throw EndpointRootError("sturm_count: upper endpoint " + to_string(hi) + " is a root");
  if (!(lo < hi)) return 0;
  auto seq = sturm_sequence(p);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / lc)));
  Rational bound = m + 1;
  Rational pow(1);
  while (pow <= bound) pow *= 2;
  return pow;
}

}  // namespace rcubic
