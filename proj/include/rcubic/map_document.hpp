#pragma once

#include "rcubic/cubic_map.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcubic {

/// Input or validation failure in a map document. what() starts with
/// "line N:" whenever the offending location is known.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// JSON text form of a cubic map:
///
///   {
///     "format_version": 1,
///     "mode": "tensor",
///     "F": {"F1_111": "1", "F1_112": "0", ..., "F2_222": "0"},
///     "Q": {"Q1_11": "0", "Q1_12": "0", ..., "Q2_22": "0"},
///     "L": {"L1_1": "0", "L1_2": "0", "L2_1": "0", "L2_2": "0"},
///     "c": {"c1": "0", "c2": "0"}
///   }
///
/// Values are rational strings. Any missing component is zero, and the Q, L
/// and c blocks may be left out. Unknown keys are rejected. In "poly" mode
/// the numbers are plain monomial coefficients.
struct MapDocument {
  int format_version = 1;
  CoefficientMode mode = CoefficientMode::tensor;
  CoefficientBundle coefficients;

  CubicMap map() const { return build_map(coefficients, mode); }
};

MapDocument parse_map_document(std::string_view text);

/// Canonical text: every key present, fixed key order, two-space indent,
/// trailing newline.
std::string serialize_map_document(const MapDocument& doc);

MapDocument make_document(const CubicMap& f, CoefficientMode mode = CoefficientMode::tensor);

std::string to_string(CoefficientMode mode);

}  // namespace rcubic
