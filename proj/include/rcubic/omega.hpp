#pragma once

#include "rcubic/cubic_map.hpp"
#include "rcubic/quartic.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>

namespace rcubic {

/// Exponents of (z1, z2, z3, z4), where z1 = T^1_1, z2 = T^2_1, z3 = T^1_2,
/// z4 = T^2_2 are the entries of the change matrix.
using Monomial4 = std::array<int, 4>;

/// Integer coefficients of the six determinants, indexed as in DetSextet.
using GCombination = std::array<long, 6>;

/// One quartic form omega[k] in (z1..z4): monomial -> combination of G.
struct OmegaForm {
  std::map<Monomial4, GCombination> terms;

  /// Coefficient combination of a monomial (all zeros when absent).
  GCombination coefficient(const Monomial4& m) const;
  friend bool operator==(const OmegaForm&, const OmegaForm&) = default;
};

/// The six forms omega[1..6], stored at indices 0..5.
struct OmegaTable {
  std::array<OmegaForm, 6> forms;
  const OmegaForm& form(int k) const { return forms.at(static_cast<std::size_t>(k - 1)); }
};

/// Derives the table from scratch: expands the determinants of the right
/// composition with a symbolic change matrix, collects coefficients of the
/// six determinants of the original map and divides each coefficient
/// polynomial exactly by det T = z1 z4 - z2 z3. Throws
/// InternalInconsistency if any division leaves a remainder.
OmegaTable derive_omega_table();

/// The derived table, computed once on first use.
const OmegaTable& omega_table();

std::string monomial_to_string(const Monomial4& m);
std::string combination_to_string(const GCombination& c);

/// omega[k](z) with the G symbols bound to g, for k in 1..6.
template <class K>
K omega_eval(const OmegaTable& table, const DetSextetT<K>& g, int k, const std::array<K, 4>& z) {
  K acc{};
  for (const auto& [mono, comb] : table.form(k).terms) {
    K coeff{};
    for (std::size_t s = 0; s < 6; ++s)
      if (comb[s] != 0) coeff = coeff + K(comb[s]) * g[s];
    if (is_zero(coeff)) continue;
    K term = coeff;
    for (std::size_t v = 0; v < 4; ++v)
      for (int e = 0; e < mono[v]; ++e) term = term * z[v];
    acc = acc + term;
  }
  return acc;
}

/// The binary quartic omega[1] built from a sextet:
/// (G1111, 2 G1112, 3 G1212 + G1122, 2 G1222, G2222).
BinaryQuartic omega1(const DetSextet& g);

}  // namespace rcubic
