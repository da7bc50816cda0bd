#pragma once

#include "rcubic/classifier.hpp"
#include "rcubic/cubic_map.hpp"
#include "rcubic/omega.hpp"
#include "rcubic/quartic.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rcubic {

struct GeneratorConfig {
  std::uint64_t seed = 1;
  long bound = 5;
  std::size_t count = 1;
};

/// Deterministic source of small random rationals, maps and changes.
/// Uses mt19937_64 with plain modular reduction, so sequences are identical
/// on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long integer(long lo, long hi);
  /// numerator in [-bound, bound], denominator in [1, bound].
  Rational rational(long bound);
  /// All blocks random; F is never identically zero.
  CubicMap cubic_map(long bound);
  /// det T != 0 by rejection; translation zero unless requested.
  AffineChange invertible_change(long bound, bool with_translation);
  /// Second column a rational multiple of the first (det T = 0).
  AffineChange singular_change(long bound);

 private:
  std::mt19937_64 engine_;
};

std::vector<CubicMap> random_cubic_maps(const GeneratorConfig& cfg);
std::vector<AffineChange> random_invertible_changes(const GeneratorConfig& cfg, bool with_translation = true);

/// (1,0), (0,1), then (a, b) and (-a, b) for each Calkin-Wilf point (a, b).
std::vector<ProjectivePoint> projective_sample_points(std::size_t n);

struct SignProfile {
  bool saw_positive = false;
  bool saw_negative = false;
  std::vector<ProjectivePoint> zero_points;
};

SignProfile sign_profile(const BinaryQuartic& q, std::size_t n);

/// The six forms exactly as typeset in the source formulas, kept as data
/// for conformance checking only.
const OmegaTable& printed_omega_table();

struct ConformanceSite {
  int form = 0;
  Monomial4 monomial{};
  GCombination printed{};
  GCombination derived{};
};

struct ConformanceReport {
  std::size_t cases = 0;
  /// Per form: cases where the composed map disagrees with det T * table(z).
  std::array<std::size_t, 6> derived_mismatches{};
  std::array<std::size_t, 6> printed_mismatches{};
  /// Printed table with only the disagreeing sites replaced by derived ones.
  std::array<std::size_t, 6> patched_mismatches{};
  std::vector<ConformanceSite> sites;
};

/// Integer F~ and T from cfg; compares direct composition against the
/// derived and the printed tables and lists printed coefficients that
/// differ from the derivation.
ConformanceReport symbolic_expansion_check(const GeneratorConfig& cfg);

struct IdentityTrialSummary {
  std::size_t right_cases = 0;
  std::size_t right_singular_cases = 0;
  std::size_t right_failures = 0;
  std::size_t left_cases = 0;
  std::size_t left_failures = 0;
  std::vector<std::string> failure_notes;
  bool ok() const { return right_failures == 0 && left_failures == 0; }
};

/// cfg.count trials of both composition identities. Every tenth right
/// change is forced singular.
IdentityTrialSummary run_identity_trials(const GeneratorConfig& cfg);

}  // namespace rcubic
