#include "rcubic/oracle.hpp"

#include "rcubic/identities.hpp"

#include <set>
#include <stdexcept>

namespace rcubic {

long RandomSource::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("RandomSource::integer: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational RandomSource::rational(long bound) {
  if (bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  long num = integer(-bound, bound);
  long den = integer(1, bound);
  return make_rational(num, den);
}

CubicMap RandomSource::cubic_map(long bound) {
  CubicMap f;
  do {
    for (auto& row : f.F)
      for (auto& v : row) v = rational(bound);
  } while (!f.is_cubic());
  for (auto& row : f.Q)
    for (auto& v : row) v = rational(bound);
  for (auto& row : f.L)
    for (auto& v : row) v = rational(bound);
  for (auto& v : f.c) v = rational(bound);
  return f;
}

AffineChange RandomSource::invertible_change(long bound, bool with_translation) {
  AffineChange phi;
  do {
    for (auto& row : phi.T)
      for (auto& v : row) v = rational(bound);
  } while (!phi.invertible());
  if (with_translation) {
    for (auto& v : phi.a) v = rational(bound);
  }
  return phi;
}

AffineChange RandomSource::singular_change(long bound) {
  AffineChange phi;
  Rational t11 = rational(bound);
  Rational t21 = rational(bound);
  Rational lambda = rational(bound);
  phi.T = {{{t11, lambda * t11}, {t21, lambda * t21}}};
  for (auto& v : phi.a) v = rational(bound);
  return phi;
}

std::vector<CubicMap> random_cubic_maps(const GeneratorConfig& cfg) {
  RandomSource rng(cfg.seed);
  std::vector<CubicMap> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(rng.cubic_map(cfg.bound));
  return out;
}

std::vector<AffineChange> random_invertible_changes(const GeneratorConfig& cfg, bool with_translation) {
  RandomSource rng(cfg.seed);
  std::vector<AffineChange> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(rng.invertible_change(cfg.bound, with_translation));
  return out;
}

std::vector<ProjectivePoint> projective_sample_points(std::size_t n) {
  std::vector<ProjectivePoint> out;
  // sign_test_points yields (1,0), (0,1), then Calkin-Wilf points; mirror
  // each of the latter into the other half-plane.
  std::size_t base = n < 2 ? n : 2 + (n - 2 + 1) / 2;
  for (const auto& p : sign_test_points(base)) {
    if (out.size() >= n) break;
    out.push_back(p);
    if (out.size() >= 3 && out.size() < n) out.push_back({-p.z1, p.z2});
  }
  return out;
}

SignProfile sign_profile(const BinaryQuartic& q, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sign_profile needs at least one point");
  SignProfile out;
  for (const auto& p : projective_sample_points(n)) {
    int s = sign(q(p.z1, p.z2));
    if (s > 0) out.saw_positive = true;
    if (s < 0) out.saw_negative = true;
    if (s == 0) out.zero_points.push_back(p);
  }
  return out;
}

namespace {

constexpr std::size_t k1111 = 0, k1112 = 1, k1122 = 2, k1212 = 3, k1222 = 4, k2222 = 5;

GCombination g(std::size_t s, long c) {
  GCombination r{};
  r[s] = c;
  return r;
}

GCombination mixed(long c1212, long c1122) {
  GCombination r{};
  r[k1212] = c1212;
  r[k1122] = c1122;
  return r;
}

OmegaTable build_printed_table() {
  OmegaTable t;
  auto& w1 = t.forms[0].terms;
  w1[{4, 0, 0, 0}] = g(k1111, 1);
  w1[{3, 1, 0, 0}] = g(k1112, 2);
  w1[{2, 2, 0, 0}] = mixed(3, 1);
  w1[{1, 3, 0, 0}] = g(k1222, 2);
  w1[{0, 4, 0, 0}] = g(k2222, 1);

  auto& w2 = t.forms[1].terms;
  w2[{3, 0, 1, 0}] = g(k1111, 2);
  w2[{3, 0, 0, 1}] = g(k1112, 1);
  w2[{2, 1, 1, 0}] = g(k1112, 3);
  w2[{2, 1, 0, 1}] = mixed(3, 1);
  w2[{1, 2, 1, 0}] = mixed(3, 1);
  w2[{1, 2, 0, 1}] = g(k1222, 3);
  w2[{0, 3, 1, 0}] = g(k2222, 1);
  w2[{0, 3, 0, 1}] = g(k2222, 2);

  auto& w3 = t.forms[2].terms;
  w3[{2, 0, 2, 0}] = g(k1111, 3);
  w3[{2, 0, 1, 1}] = g(k1112, 3);
  w3[{2, 0, 0, 2}] = g(k1122, 1);
  w3[{1, 1, 2, 0}] = g(k1112, 3);
  w3[{1, 1, 1, 1}] = mixed(9, 1);
  w3[{1, 1, 0, 2}] = g(k1222, 3);
  w3[{0, 2, 2, 0}] = g(k1122, 1);
  w3[{0, 2, 1, 1}] = g(k1222, 3);
  w3[{0, 2, 0, 2}] = g(k2222, 3);

  auto& w4 = t.forms[3].terms;
  w4[{2, 0, 2, 0}] = g(k1111, 1);
  w4[{2, 0, 1, 1}] = g(k1112, 1);
  w4[{2, 0, 0, 2}] = g(k1212, 1);
  w4[{1, 1, 2, 0}] = g(k1112, 1);
  w4[{1, 1, 1, 1}] = mixed(1, 1);
  w4[{1, 1, 0, 2}] = g(k1222, 1);
  w4[{0, 2, 2, 0}] = g(k1212, 1);
  w4[{0, 2, 1, 1}] = g(k1222, 1);
  w4[{0, 2, 0, 2}] = g(k1222, 1);

  auto& w5 = t.forms[4].terms;
  w5[{1, 0, 3, 0}] = g(k1111, 2);
  w5[{0, 1, 3, 0}] = g(k1112, 1);
  w5[{1, 0, 2, 1}] = g(k1112, 3);
  w5[{0, 1, 2, 1}] = mixed(3, 1);
  w5[{1, 0, 1, 2}] = mixed(3, 1);
  w5[{0, 1, 1, 2}] = g(k1222, 3);
  w5[{1, 0, 0, 3}] = g(k1222, 1);
  w5[{0, 1, 0, 3}] = g(k2222, 2);

  auto& w6 = t.forms[5].terms;
  w6[{0, 0, 4, 0}] = g(k1111, 1);
  w6[{0, 0, 3, 1}] = g(k1112, 2);
  w6[{0, 0, 2, 2}] = mixed(3, 1);
  w6[{0, 0, 1, 3}] = g(k1222, 2);
  w6[{0, 0, 0, 4}] = g(k2222, 1);
  return t;
}

CubicMap integer_map(RandomSource& rng, long bound) {
  CubicMap f;
  do {
    for (auto& row : f.F)
      for (auto& v : row) v = rng.integer(-bound, bound);
  } while (!f.is_cubic());
  return f;
}

}  // namespace

const OmegaTable& printed_omega_table() {
  static const OmegaTable table = build_printed_table();
  return table;
}

ConformanceReport symbolic_expansion_check(const GeneratorConfig& cfg) {
  const OmegaTable& derived = omega_table();
  const OmegaTable& printed = printed_omega_table();

  ConformanceReport report;
  OmegaTable patched = printed;
  for (int k = 1; k <= 6; ++k) {
    std::set<Monomial4> monomials;
    for (const auto& [m, c] : derived.form(k).terms) monomials.insert(m);
    for (const auto& [m, c] : printed.form(k).terms) monomials.insert(m);
    for (const auto& m : monomials) {
      GCombination p = printed.form(k).coefficient(m);
      GCombination d = derived.form(k).coefficient(m);
      if (p == d) continue;
      report.sites.push_back({k, m, p, d});
      patched.forms[static_cast<std::size_t>(k - 1)].terms[m] = d;
    }
  }

  RandomSource rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    CubicMap f_tilde = integer_map(rng, cfg.bound);
    AffineChange phi;
    for (auto& row : phi.T)
      for (auto& v : row) v = rng.integer(-cfg.bound, cfg.bound);
    DetSextet g_tilde = determinants(f_tilde);
    DetSextet g_direct = determinants(compose_right(f_tilde, phi));
    Rational det = phi.det();
    std::array<Rational, 4> z{phi.T[0][0], phi.T[1][0], phi.T[0][1], phi.T[1][1]};
    for (std::size_t k = 0; k < 6; ++k) {
      int form = static_cast<int>(k) + 1;
      if (g_direct[k] != det * omega_eval(derived, g_tilde, form, z)) ++report.derived_mismatches[k];
      if (g_direct[k] != det * omega_eval(printed, g_tilde, form, z)) ++report.printed_mismatches[k];
      if (g_direct[k] != det * omega_eval(patched, g_tilde, form, z)) ++report.patched_mismatches[k];
    }
    ++report.cases;
  }
  return report;
}

IdentityTrialSummary run_identity_trials(const GeneratorConfig& cfg) {
  RandomSource rng(cfg.seed);
  IdentityTrialSummary out;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    CubicMap f = rng.cubic_map(cfg.bound);
    bool singular = i % 10 == 9;
    AffineChange phi = singular ? rng.singular_change(cfg.bound) : rng.invertible_change(cfg.bound, true);
    IdentityReport right = verify_right_composition(f, phi);
    ++out.right_cases;
    if (!phi.invertible()) ++out.right_singular_cases;
    if (!right.all_hold()) {
      ++out.right_failures;
      out.failure_notes.push_back("right composition, trial " + std::to_string(i));
    }
    AffineChange s = rng.invertible_change(cfg.bound, true);
    IdentityReport left = verify_left_composition(s, f);
    ++out.left_cases;
    if (!left.all_hold()) {
      ++out.left_failures;
      out.failure_notes.push_back("left composition, trial " + std::to_string(i));
    }
  }
  return out;
}

}  // namespace rcubic
