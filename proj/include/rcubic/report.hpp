#pragma once

#include "rcubic/classifier.hpp"
#include "rcubic/map_document.hpp"
#include "rcubic/normalizer.hpp"
#include "rcubic/oracle.hpp"

#include <json.hpp>

#include <string>

namespace rcubic {

using Json = nlohmann::ordered_json;

/// Output of one CLI command. Numbers appear only as rational strings;
/// integers such as counts and multiplicities are strings too.
struct Report {
  Json body;
  int exit_code = 0;
};

/// Rational string, or {"p", "q", "d"} for p + q*sqrt(d).
Json quad_json(const QuadExt& x);
Json root_json(const ProjectiveRoot& r);
Json sextet_json(const DetSextetQ& g);
Json map_json(const CubicMapQ& f);
Json change_json(const AffineChangeQ& phi);

Json forms_block(const CubicMap& f);
Json classification_block(const Classification& c);
Json normalization_block(const NormalizationResult& r);
Json refinement_block(const RefinementReport& report, const std::array<std::size_t, 2>& chosen);
Json verify_block(const IdentityTrialSummary& identities, const ConformanceReport& conformance);

/// Recomputes every claim the classification makes (exact roots are roots,
/// witnesses have the stated signs) and throws InternalInconsistency if one
/// does not hold.
void certify_classification(const BinaryQuartic& q, const Classification& c);

/// Recomputes left o f o right and its sextet and re-checks the vanishing
/// or residual claims; throws InternalInconsistency on any disagreement.
void certify_normalization(const CubicMap& f, const NormalizationResult& r, const NormalizeOptions& options);

Report forms_report(const MapDocument& doc);
Report classify_report(const MapDocument& doc);
Report normalize_report(const MapDocument& doc, const NormalizeOptions& options = {});
/// exit_code 2 when an identity fails or the derived table mismatches.
Report verify_report(const GeneratorConfig& cfg);

/// Indented plain-text rendering of a report body.
std::string render_text(const Json& body);

}  // namespace rcubic
