#include "rcubic/classifier.hpp"

#include "rcubic/errors.hpp"
#include "rcubic/omega.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcubic {

std::string to_string(QuarticKind k) {
  switch (k) {
    case QuarticKind::zero: return "Zero";
    case QuarticKind::indefinite: return "Indefinite";
    case QuarticKind::semidefinite: return "SemiDefinite";
    case QuarticKind::definite: return "Definite";
  }
  return "?";
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::none: return "none";
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
  }
  return "?";
}

std::string to_string(SemiDefiniteSubcase s) {
  switch (s) {
    case SemiDefiniteSubcase::none: return "none";
    case SemiDefiniteSubcase::two_double_roots: return "TwoDoubleRoots";
    case SemiDefiniteSubcase::quadruple_root: return "QuadrupleRoot";
    case SemiDefiniteSubcase::one_double_root: return "OneDoubleRoot";
  }
  return "?";
}

std::optional<std::array<QuadExt, 2>> ProjectiveRoot::exact_representative() const {
  if (at_infinity()) return std::array<QuadExt, 2>{QuadExt(1), QuadExt(0)};
  auto v = finite->exact_value();
  if (!v) return std::nullopt;
  return std::array<QuadExt, 2>{*v, QuadExt(1)};
}

bool same_root(const ProjectiveRoot& a, const ProjectiveRoot& b) {
  if (a.at_infinity() || b.at_infinity()) return a.at_infinity() && b.at_infinity();
  return compare_roots(*a.finite, *b.finite) == 0;
}

std::vector<int> Classification::multiplicities() const {
  std::vector<int> m;
  for (const auto& r : roots) m.push_back(r.multiplicity);
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<ProjectivePoint> sign_test_points(std::size_t n) {
  std::vector<ProjectivePoint> pts;
  if (n == 0) return pts;
  pts.push_back({Rational(1), Rational(0)});
  if (n == 1) return pts;
  pts.push_back({Rational(0), Rational(1)});
  Rational q(1);
  while (pts.size() < n) {
    pts.push_back({Rational(q.get_den()), Rational(q.get_num())});
    // next Calkin-Wilf term: 1 / (2 floor(q) - q + 1)
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    q = 1 / (2 * Rational(fl) - q + 1);
  }
  return pts;
}

std::vector<ProjectiveRoot> projective_real_roots(const BinaryQuartic& q) {
  if (q.is_zero()) throw std::invalid_argument("projective roots of the zero form");
  UniPoly p = q.dehomogenized();
  std::vector<ProjectiveRoot> roots;
  for (const auto& factor : square_free_decomposition(p)) {
    for (auto& r : isolate_square_free(factor.factor)) {
      roots.push_back(ProjectiveRoot{std::move(r), factor.multiplicity});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const ProjectiveRoot& a, const ProjectiveRoot& b) {
    return compare_roots(*a.finite, *b.finite) > 0;
  });
  int at_infinity = 4 - p.degree();
  if (at_infinity > 0) roots.insert(roots.begin(), ProjectiveRoot{std::nullopt, at_infinity});
  return roots;
}

namespace {

// Witness points for an indefinite form: the endpoints of disjoint isolating
// intervals of q(t,1) cover every gap between consecutive finite roots, and
// (1,0) covers the gap through infinity.
void find_witnesses(const BinaryQuartic& q, Classification& out) {
  std::vector<ProjectivePoint> candidates;
  candidates.push_back({Rational(1), Rational(0)});
  UniPoly s = square_free_part(q.dehomogenized());
  for (const auto& iv : isolating_intervals(s)) {
    candidates.push_back({iv.lo, Rational(1)});
    candidates.push_back({iv.hi, Rational(1)});
  }
  for (const auto& pt : candidates) {
    int sg = sign(q(pt.z1, pt.z2));
    if (sg > 0 && !out.positive_witness) out.positive_witness = pt;
    if (sg < 0 && !out.negative_witness) out.negative_witness = pt;
  }
  if (!out.positive_witness || !out.negative_witness) {
    throw InternalInconsistency("indefinite form without opposite-sign witnesses");
  }
}

}  // namespace

Classification classify_quartic(const BinaryQuartic& q) {
  Classification out;
  if (q.is_zero()) return out;
  out.roots = projective_real_roots(q);
  bool any_odd = false;
  for (const auto& r : out.roots)
    if (r.multiplicity % 2 == 1) any_odd = true;

  if (any_odd) {
    out.kind = QuarticKind::indefinite;
    find_witnesses(q, out);
    return out;
  }
  out.kind = out.roots.empty() ? QuarticKind::definite : QuarticKind::semidefinite;
  // At most four roots, and the test points are pairwise distinct in RP^1.
  for (const auto& pt : sign_test_points(6)) {
    int sg = sign(q(pt.z1, pt.z2));
    if (sg == 0) continue;
    out.sign = sg > 0 ? Sign::positive : Sign::negative;
    out.sign_point = pt;
    break;
  }
  if (out.kind == QuarticKind::semidefinite) {
    auto m = out.multiplicities();
    if (m == std::vector<int>{2, 2}) {
      out.subcase = SemiDefiniteSubcase::two_double_roots;
    } else if (m == std::vector<int>{4}) {
      out.subcase = SemiDefiniteSubcase::quadruple_root;
    } else if (m == std::vector<int>{2}) {
      out.subcase = SemiDefiniteSubcase::one_double_root;
    } else {
      throw InternalInconsistency("unexpected even multiplicity pattern");
    }
  }
  return out;
}

Classification classify_map(const CubicMap& f) {
  if (!f.is_cubic()) throw NotCubicError("map has no cubic terms");
  return classify_quartic(omega1(determinants(f)));
}

}  // namespace rcubic
