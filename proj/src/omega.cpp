#include "rcubic/omega.hpp"

#include "rcubic/errors.hpp"

#include <string>

namespace rcubic {

namespace {

// Integer polynomial in z1..z4.
using SymPoly = std::map<Monomial4, long>;

void add_term(SymPoly& p, const Monomial4& m, long c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

SymPoly mul(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial4 m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
      add_term(r, m, ca * cb);
    }
  return r;
}

SymPoly sub(const SymPoly& a, const SymPoly& b) {
  SymPoly r = a;
  for (const auto& [m, c] : b) add_term(r, m, -c);
  return r;
}

// Divides p by z1 z4 - z2 z3 in lex order (z1 > z2 > z3 > z4), in which the
// divisor's leading monomial is z1 z4.
SymPoly divide_by_det(SymPoly p) {
  SymPoly q;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    Monomial4 m = lead->first;
    long c = lead->second;
    if (m[0] < 1 || m[3] < 1) {
      throw InternalInconsistency("omega derivation: nonzero remainder at " + monomial_to_string(m));
    }
    Monomial4 t{m[0] - 1, m[1], m[2], m[3] - 1};
    add_term(q, t, c);
    add_term(p, m, -c);
    add_term(p, Monomial4{t[0], t[1] + 1, t[2] + 1, t[3]}, c);
  }
  return q;
}

// Entry T^a_m (a = row, m = column, both 0-based) as a variable index.
int variable_of(int row, int col) { return col * 2 + row; }

// P[X][W]: coefficient polynomial with which the original column W enters
// column X of the composed map. Column X = (m, n, p) sums the original
// tensor over all (a, b, c) with weight T^a_m T^b_n T^c_p.
std::array<std::array<SymPoly, 4>, 4> column_transport() {
  std::array<std::array<SymPoly, 4>, 4> P{};
  for (int x = 0; x < 4; ++x) {
    // representative lower indices of column x: x of them equal to "2"
    std::array<int, 3> cols{};
    for (int s = 0; s < 3; ++s) cols[s] = s >= 3 - x ? 1 : 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          Monomial4 m{0, 0, 0, 0};
          ++m[variable_of(a, cols[0])];
          ++m[variable_of(b, cols[1])];
          ++m[variable_of(c, cols[2])];
          int w = a + b + c;
          add_term(P[x][w], m, 1);
        }
  }
  return P;
}

}  // namespace

GCombination OmegaForm::coefficient(const Monomial4& m) const {
  auto it = terms.find(m);
  if (it == terms.end()) return GCombination{};
  return it->second;
}

OmegaTable derive_omega_table() {
  auto P = column_transport();
  SymPoly det_t;
  add_term(det_t, Monomial4{1, 0, 0, 1}, 1);
  add_term(det_t, Monomial4{0, 1, 1, 0}, -1);

  OmegaTable table;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [x, y] = kSextetColumns[k];
    OmegaForm& form = table.forms[k];
    // det(c_X, c_Y) = sum_{W<V} (P_XW P_YV - P_XV P_YW) det(c~_W, c~_V)
    for (std::size_t s = 0; s < 6; ++s) {
      auto [w, v] = kSextetColumns[s];
      SymPoly coeff = sub(mul(P[x][w], P[y][v]), mul(P[x][v], P[y][w]));
      SymPoly quotient = divide_by_det(coeff);
      for (const auto& [m, c] : quotient) form.terms[m][s] += c;
    }
    std::erase_if(form.terms, [](const auto& kv) {
      for (long c : kv.second)
        if (c != 0) return false;
      return true;
    });
  }
  return table;
}

const OmegaTable& omega_table() {
  static const OmegaTable table = derive_omega_table();
  return table;
}

std::string monomial_to_string(const Monomial4& m) {
  std::string out;
  for (std::size_t v = 0; v < 4; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(v + 1);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string combination_to_string(const GCombination& c) {
  std::string out;
  for (std::size_t s = 0; s < 6; ++s) {
    if (c[s] == 0) continue;
    long mag = c[s] < 0 ? -c[s] : c[s];
    if (out.empty()) {
      if (c[s] < 0) out += "-";
    } else {
      out += c[s] < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += kSextetNames[s];
  }
  return out.empty() ? "0" : out;
}

BinaryQuartic omega1(const DetSextet& g) {
  BinaryQuartic q;
  q.a[0] = g[G::g1111];
  q.a[1] = 2 * g[G::g1112];
  q.a[2] = 3 * g[G::g1212] + g[G::g1122];
  q.a[3] = 2 * g[G::g1222];
  q.a[4] = g[G::g2222];
  return q;
}

}  // namespace rcubic
