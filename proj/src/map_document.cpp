#include "rcubic/map_document.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <vector>

namespace rcubic {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

// Field names of one block and the coefficient slot each one fills.
struct Field {
  std::string name;
  std::function<Rational&(CoefficientBundle&)> slot;
};

std::vector<Field> f_fields() {
  std::vector<Field> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out.push_back({"F" + std::to_string(i + 1) + "_" + kCubicColumnNames[j],
                     [i, j](CoefficientBundle& b) -> Rational& { return b.F[i][j]; }});
  return out;
}

std::vector<Field> q_fields() {
  std::vector<Field> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.push_back({"Q" + std::to_string(i + 1) + "_" + kQuadraticNames[j],
                     [i, j](CoefficientBundle& b) -> Rational& { return b.Q[i][j]; }});
  return out;
}

std::vector<Field> l_fields() {
  std::vector<Field> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out.push_back({"L" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                     [i, j](CoefficientBundle& b) -> Rational& { return b.L[i][j]; }});
  return out;
}

std::vector<Field> c_fields() {
  std::vector<Field> out;
  for (std::size_t i = 0; i < 2; ++i)
    out.push_back({"c" + std::to_string(i + 1), [i](CoefficientBundle& b) -> Rational& { return b.c[i]; }});
  return out;
}

struct Block {
  std::string name;
  std::vector<Field> fields;
};

const std::vector<Block>& blocks() {
  static const std::vector<Block> all{{"F", f_fields()}, {"Q", q_fields()}, {"L", l_fields()}, {"c", c_fields()}};
  return all;
}

// Line of the first occurrence of "key" (quoted) at or after `from`.
// Returns 0 when the key text cannot be found.
std::size_t line_of_key(std::string_view text, const std::string& key, std::size_t from = 0) {
  std::string quoted = "\"" + key + "\"";
  std::size_t pos = text.find(quoted, from);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

[[noreturn]] void fail_at(std::string_view text, const std::string& key, const std::string& message,
                          std::size_t from = 0) {
  std::size_t line = line_of_key(text, key, from);
  std::string prefix = line ? "line " + std::to_string(line) + ": " : "";
  throw DocumentError(prefix + "field '" + key + "': " + message);
}

std::size_t key_offset(std::string_view text, const std::string& key) {
  std::size_t pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 0 : pos;
}

}  // namespace

std::string to_string(CoefficientMode mode) {
  return mode == CoefficientMode::tensor ? "tensor" : "poly";
}

MapDocument parse_map_document(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    // byte is 1-based and points just past the failure.
    std::size_t byte = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
    throw DocumentError("line " + std::to_string(line) + ": malformed JSON");
  }
  if (!root.is_object()) throw DocumentError("line 1: document must be a JSON object");

  MapDocument doc;
  bool have_version = false;
  bool have_f = false;
  for (const auto& [key, value] : root.items()) {
    if (key == "format_version") {
      if (!value.is_number_integer() || value.get<long>() != kFormatVersion) {
        fail_at(text, key, "unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
      }
      have_version = true;
      continue;
    }
    if (key == "mode") {
      if (value == "tensor") {
        doc.mode = CoefficientMode::tensor;
      } else if (value == "poly") {
        doc.mode = CoefficientMode::polynomial;
      } else {
        fail_at(text, key, "expected \"tensor\" or \"poly\"");
      }
      continue;
    }
    auto block = std::find_if(blocks().begin(), blocks().end(), [&](const Block& b) { return b.name == key; });
    if (block == blocks().end()) fail_at(text, key, "unknown field");
    if (!value.is_object()) fail_at(text, key, "expected an object of rational strings");
    if (key == "F") have_f = true;
    std::size_t block_start = key_offset(text, key);
    for (const auto& [name, entry] : value.items()) {
      auto field = std::find_if(block->fields.begin(), block->fields.end(),
                                [&](const Field& f) { return f.name == name; });
      if (field == block->fields.end()) fail_at(text, name, "unknown field in block '" + key + "'", block_start);
      if (!entry.is_string()) fail_at(text, name, "expected a rational string such as \"3/4\"", block_start);
      try {
        field->slot(doc.coefficients) = parse_rational(entry.get<std::string>());
      } catch (const std::invalid_argument& e) {
        fail_at(text, name, e.what(), block_start);
      }
    }
  }
  if (!have_version) throw DocumentError("line 1: missing field 'format_version'");
  if (!have_f) throw DocumentError("line 1: missing block 'F'");
  return doc;
}

std::string serialize_map_document(const MapDocument& doc) {
  ordered_json root;
  root["format_version"] = doc.format_version;
  root["mode"] = to_string(doc.mode);
  CoefficientBundle values = doc.coefficients;
  for (const auto& block : blocks()) {
    ordered_json obj = ordered_json::object();
    for (const auto& field : block.fields) obj[field.name] = to_string(field.slot(values));
    root[block.name] = std::move(obj);
  }
  return root.dump(2) + "\n";
}

MapDocument make_document(const CubicMap& f, CoefficientMode mode) {
  MapDocument doc;
  doc.mode = mode;
  doc.coefficients = to_bundle(f, mode);
  return doc;
}

}  // namespace rcubic
