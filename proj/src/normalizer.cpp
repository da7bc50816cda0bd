#include "rcubic/normalizer.hpp"

#include "rcubic/errors.hpp"
#include "rcubic/omega.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rcubic {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::zero: return "zero";
    case Verdict::nonzero: return "nonzero";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

std::string refinement_label(const std::array<Verdict, 4>& pattern) {
  std::string held;
  for (std::size_t i = 0; i < 4; ++i) {
    if (pattern[i] == Verdict::undetermined) return "undetermined";
    if (pattern[i] == Verdict::zero) {
      held += held.empty() ? "R" : ".";
      held += std::to_string(i + 1);
    }
  }
  return held.empty() ? "none" : held;
}

namespace {

struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational& v) { return {v, v}; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
  }
};

Rational abs_rational(const QuadExt& x) {
  if (!x.is_rational()) throw std::logic_error("residual outside Q: mixed quadratic and interval roots");
  return abs(x.rational_part());
}

AffineChangeQ columns_to_change(const std::array<QuadExt, 2>& c1, const std::array<QuadExt, 2>& c2) {
  return AffineChangeQ::linear(c1[0], c2[0], c1[1], c2[1]);
}

void require_pair(const CubicMap& f, const ProjectiveRoot& first, const ProjectiveRoot& second) {
  if (!f.is_cubic()) throw NotCubicError("map has no cubic terms");
  BinaryQuartic q = omega1(determinants(f));
  if (q.is_zero()) throw WrongClassError("omega[1] vanishes identically");
  if (same_root(first, second)) throw std::invalid_argument("root pair must be distinct");
  for (const auto* r : {&first, &second}) {
    if (auto rep = r->exact_representative()) {
      if (!q((*rep)[0], (*rep)[1]).is_zero()) throw std::invalid_argument("column is not a root of omega[1]");
    }
  }
}

// Current representative of one root while refining.
struct RefinableColumn {
  std::optional<std::array<QuadExt, 2>> exact;
  std::optional<IsolatedRoot> root;

  explicit RefinableColumn(const ProjectiveRoot& r) {
    exact = r.exact_representative();
    if (!exact) root = *r.finite;
  }

  std::array<QuadExt, 2> representative() const {
    if (exact) return *exact;
    const RootInterval* iv = root->as_interval();
    return {QuadExt(midpoint(iv->lo, iv->hi)), QuadExt(1)};
  }

  void bisect() {
    if (exact) return;
    const RootInterval* iv = root->as_interval();
    IsolatedRoot next = refine_root(*root, iv->width() / 2);
    if (auto v = next.exact_value()) {
      exact = std::array<QuadExt, 2>{*v, QuadExt(1)};
      root.reset();
    } else {
      root = std::move(next);
    }
  }
};

}  // namespace

NormalizationResult normalize_zero_case(const CubicMap& f) {
  Classification c = classify_map(f);
  if (c.kind != QuarticKind::zero) throw WrongClassError("normalize_zero_case needs omega[1] = 0");

  std::size_t lead = 4;
  for (std::size_t j = 0; j < 4; ++j) {
    if (!is_zero(f.F[0][j]) || !is_zero(f.F[1][j])) {
      lead = j;
      break;
    }
  }
  auto v = f.column(lead);
  for (std::size_t j = 0; j < 4; ++j) {
    Rational cross = v[0] * f.F[1][j] - v[1] * f.F[0][j];
    if (!is_zero(cross)) throw InternalInconsistency("omega[1] = 0 but cubic columns are not proportional");
  }

  NormalizationResult out;
  bool already = std::all_of(f.F[1].begin(), f.F[1].end(), [](const Rational& x) { return is_zero(x); });
  AffineChange s = AffineChange::identity();
  if (!already) s = AffineChange::linear(v[0], v[1], -v[1], v[0]);
  out.left = lift(s);
  out.normalized = lift(compose_left(s, f));
  out.achieved = determinants(out.normalized);
  for (const auto& x : out.normalized.F[1]) {
    if (!x.is_zero()) throw InternalInconsistency("zero-case reduction left a cubic term in the second output");
  }
  return out;
}

NormalizationResult normalize_two_roots(const CubicMap& f, const ProjectiveRoot& first,
                                        const ProjectiveRoot& second, const NormalizeOptions& options) {
  require_pair(f, first, second);
  CubicMapQ lifted = lift(f);
  RefinableColumn c1(first);
  RefinableColumn c2(second);

  NormalizationResult out;
  for (std::size_t step = 0;; ++step) {
    out.right = columns_to_change(c1.representative(), c2.representative());
    out.normalized = compose_right(lifted, out.right);
    out.achieved = determinants(out.normalized);
    out.refinement_steps = step;
    if (c1.exact && c2.exact) {
      if (!out.achieved[G::g1111].is_zero() || !out.achieved[G::g2222].is_zero()) {
        throw InternalInconsistency("exact root columns did not annihilate G1111 and G2222");
      }
      out.exactness = Exactness::exact;
      out.residual.reset();
      return out;
    }
    Rational residual = std::max(abs_rational(out.achieved[G::g1111]), abs_rational(out.achieved[G::g2222]));
    out.exactness = Exactness::approximate;
    out.residual = residual;
    if (residual <= options.residual_bound) return out;
    if (step >= options.max_steps) {
      throw ResidualBudgetExhausted("residual " + to_string(residual) + " above bound " +
                                    to_string(options.residual_bound) + " after " +
                                    std::to_string(step) + " bisection steps");
    }
    c1.bisect();
    c2.bisect();
  }
}

NormalizationResult normalize_semidefinite(const CubicMap& f, const NormalizeOptions& options) {
  Classification c = classify_map(f);
  if (c.kind != QuarticKind::semidefinite) throw WrongClassError("normalize_semidefinite needs a semi-definite omega[1]");
  if (c.subcase == SemiDefiniteSubcase::two_double_roots) {
    return normalize_two_roots(f, c.roots[0], c.roots[1], options);
  }
  // The single root comes from a linear factor, so it is rational or at infinity.
  auto v = c.roots.front().exact_representative();
  if (!v || !(*v)[0].is_rational()) throw InternalInconsistency("single semi-definite root is not rational");
  NormalizationResult out;
  out.right = columns_to_change(*v, {-(*v)[1], (*v)[0]});
  out.normalized = compose_right(lift(f), out.right);
  out.achieved = determinants(out.normalized);
  out.partial = true;
  if (!out.achieved[G::g1111].is_zero()) throw InternalInconsistency("root column did not annihilate G1111");
  return out;
}

std::array<std::size_t, 2> default_root_pair(const Classification& c) {
  if (c.roots.size() < 2) throw WrongClassError("fewer than two distinct roots");
  for (std::size_t i = 0; i < c.roots.size(); ++i)
    for (std::size_t j = i + 1; j < c.roots.size(); ++j)
      if (c.roots[i].is_exact() && c.roots[j].is_exact()) return {i, j};
  return {0, 1};
}

namespace {

constexpr std::array<unsigned, 6> kEnclosurePrecisions{8, 16, 32, 64, 128, 256};

std::array<RationalInterval, 2> enclose_column(const ProjectiveRoot& r, const Rational& scale,
                                               const Rational& width) {
  RationalInterval s = RationalInterval::point(scale);
  if (r.at_infinity()) return {s, RationalInterval::point(Rational(0))};
  auto [lo, hi] = r.finite->enclosure(width);
  return {RationalInterval{lo, hi} * s, s};
}

// Decides G1112..G1222 of the normalized map through the transport identity
// G_k = det T * omega~[k](z), using interval enclosures of the columns.
std::array<Verdict, 4> interval_pattern(const DetSextet& g, const ProjectiveRoot& a, const ProjectiveRoot& b,
                                        const RefinementOptions& opt) {
  std::array<Verdict, 4> pattern;
  pattern.fill(Verdict::undetermined);
  const OmegaTable& table = omega_table();
  for (unsigned prec : kEnclosurePrecisions) {
    Rational width = pow2_inverse(prec);
    auto ca = enclose_column(a, opt.first_scale, width);
    auto cb = enclose_column(b, opt.second_scale, width);
    std::array<RationalInterval, 4> z{ca[0], ca[1], cb[0], cb[1]};
    bool open = false;
    for (std::size_t i = 0; i < 4; ++i) {
      if (pattern[i] != Verdict::undetermined) continue;
      RationalInterval acc = RationalInterval::point(Rational(0));
      for (const auto& [mono, comb] : table.form(static_cast<int>(i) + 2).terms) {
        Rational coeff(0);
        for (std::size_t s = 0; s < 6; ++s) coeff += comb[s] * g[s];
        if (is_zero(coeff)) continue;
        RationalInterval term = RationalInterval::point(coeff);
        for (std::size_t v = 0; v < 4; ++v)
          for (int e = 0; e < mono[v]; ++e) term = term * z[v];
        acc = acc + term;
      }
      if (!acc.contains_zero()) {
        pattern[i] = Verdict::nonzero;
      } else {
        open = true;
      }
    }
    if (!open) break;
  }
  return pattern;
}

}  // namespace

RefinementReport refinement_report(const CubicMap& f, const RefinementOptions& options) {
  if (is_zero(options.first_scale) || is_zero(options.second_scale)) {
    throw std::invalid_argument("representative scales must be nonzero");
  }
  Classification c = classify_map(f);
  bool eligible = c.kind == QuarticKind::indefinite ||
                  (c.kind == QuarticKind::semidefinite && c.roots.size() >= 2);
  if (!eligible) throw WrongClassError("refinement conditions need two distinct roots of omega[1]");

  RefinementReport report;
  report.roots = c.roots;
  DetSextet g = determinants(f);
  CubicMapQ lifted = lift(f);
  std::set<std::string> labels;
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    for (std::size_t j = 0; j < c.roots.size(); ++j) {
      if (i == j) continue;
      RefinementEntry e;
      e.first = i;
      e.second = j;
      auto ra = c.roots[i].exact_representative();
      auto rb = c.roots[j].exact_representative();
      if (ra && rb) {
        QuadExt s1(options.first_scale);
        QuadExt s2(options.second_scale);
        AffineChangeQ t = columns_to_change({(*ra)[0] * s1, (*ra)[1] * s1}, {(*rb)[0] * s2, (*rb)[1] * s2});
        DetSextetQ achieved = determinants(compose_right(lifted, t));
        if (!achieved[G::g1111].is_zero() || !achieved[G::g2222].is_zero()) {
          throw InternalInconsistency("root pair did not annihilate G1111 and G2222");
        }
        for (std::size_t k = 0; k < 4; ++k) {
          e.pattern[k] = achieved[k + 1].is_zero() ? Verdict::zero : Verdict::nonzero;
        }
      } else {
        e.pattern = interval_pattern(g, c.roots[i], c.roots[j], options);
      }
      e.label = refinement_label(e.pattern);
      if (e.label == "undetermined") {
        report.has_undetermined = true;
      } else {
        labels.insert(e.label);
      }
      report.entries.push_back(std::move(e));
    }
  }
  report.achievable.assign(labels.begin(), labels.end());
  return report;
}

}  // namespace rcubic
