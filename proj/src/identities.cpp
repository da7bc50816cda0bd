#include "rcubic/identities.hpp"

#include <stdexcept>

namespace rcubic {

std::array<Rational, 4> change_entries(const AffineChange& phi) {
  return {phi.T[0][0], phi.T[1][0], phi.T[0][1], phi.T[1][1]};
}

IdentityReport verify_right_composition(const CubicMap& f_tilde, const AffineChange& phi) {
  const OmegaTable& table = omega_table();
  DetSextet g_tilde = determinants(f_tilde);
  DetSextet g = determinants(compose_right(f_tilde, phi));
  Rational det = phi.det();
  auto z = change_entries(phi);
  IdentityReport report;
  for (std::size_t k = 0; k < 6; ++k) {
    report.checks[k].lhs = g[k];
    report.checks[k].rhs = det * omega_eval(table, g_tilde, static_cast<int>(k) + 1, z);
  }
  return report;
}

IdentityReport verify_left_composition(const AffineChange& s, const CubicMap& f_tilde) {
  if (!s.invertible()) throw std::invalid_argument("left composition check needs an invertible S");
  DetSextet g_tilde = determinants(f_tilde);
  DetSextet g = determinants(compose_left(s, f_tilde));
  Rational det = s.det();
  IdentityReport report;
  for (std::size_t k = 0; k < 6; ++k) {
    report.checks[k].lhs = g[k];
    report.checks[k].rhs = det * g_tilde[k];
  }
  return report;
}

}  // namespace rcubic
