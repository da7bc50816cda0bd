#pragma once

#include "rcubic/classifier.hpp"
#include "rcubic/cubic_map.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rcubic {

enum class Exactness { exact, approximate };

/// normalized = left o f o right. Entries live in Q(sqrt d) when the
/// columns of `right` are quadratic irrational roots.
struct NormalizationResult {
  AffineChangeQ left = AffineChangeQ::identity();
  AffineChangeQ right = AffineChangeQ::identity();
  CubicMapQ normalized;
  DetSextetQ achieved;
  Exactness exactness = Exactness::exact;
  /// max(|G1111|, |G2222|) of the normalized map for approximate results.
  std::optional<Rational> residual;
  /// Set when the second column of `right` is a free choice.
  bool partial = false;
  /// Bisection steps spent on interval roots.
  std::size_t refinement_steps = 0;
};

struct NormalizeOptions {
  Rational residual_bound = pow10_inverse(30);
  std::size_t max_steps = 1000;
};

/// Left reduction of a map with omega[1] = 0 to one whose second output has
/// no cubic terms. S = [[v1, v2], [-v2, v1]] for the first nonzero column v,
/// or the identity if the second row of F already vanishes.
NormalizationResult normalize_zero_case(const CubicMap& f);

/// Right change whose columns represent the two given distinct roots of
/// omega[1], making G1111 and G2222 vanish. Interval roots are bisected
/// until the residual is within options.residual_bound; throws
/// ResidualBudgetExhausted after options.max_steps bisections.
NormalizationResult normalize_two_roots(const CubicMap& f, const ProjectiveRoot& first,
                                        const ProjectiveRoot& second,
                                        const NormalizeOptions& options = {});

/// Two double roots go through normalize_two_roots. A single (double or
/// quadruple) root v gives T with columns v and (-v2, v1), flagged partial.
NormalizationResult normalize_semidefinite(const CubicMap& f, const NormalizeOptions& options = {});

/// The root pair used by default: the first pair (in root order) whose
/// members are both exact, else the first two roots.
std::array<std::size_t, 2> default_root_pair(const Classification& c);

enum class Verdict { zero, nonzero, undetermined };
std::string to_string(Verdict v);

/// Vanishing of G1112, G1122, G1212, G1222 (conditions R1..R4) after
/// normalizing with one ordered root pair.
struct RefinementEntry {
  std::size_t first = 0;
  std::size_t second = 0;
  std::array<Verdict, 4> pattern{};
  /// "R2.3.4", "none" when no condition holds, "undetermined" if any
  /// component could not be decided.
  std::string label;
};

struct RefinementReport {
  std::vector<ProjectiveRoot> roots;
  std::vector<RefinementEntry> entries;  // ordered pairs (i, j), i != j, lexicographic
  std::vector<std::string> achievable;   // distinct decided labels, sorted
  bool has_undetermined = false;
};

struct RefinementOptions {
  /// Nonzero factors applied to the first and second column representatives.
  Rational first_scale = 1;
  Rational second_scale = 1;
};

/// Enumerates all ordered pairs of distinct roots. Throws WrongClassError
/// unless omega[1] is indefinite or semi-definite with two distinct roots.
RefinementReport refinement_report(const CubicMap& f, const RefinementOptions& options = {});

std::string refinement_label(const std::array<Verdict, 4>& pattern);

}  // namespace rcubic
