#include "rcubic/report.hpp"

#include "rcubic/errors.hpp"
#include "rcubic/omega.hpp"

#include <algorithm>
#include <sstream>

namespace rcubic {

namespace {

Json str(std::size_t n) { return std::to_string(n); }

Json point_json(const ProjectivePoint& p) { return Json::array({to_string(p.z1), to_string(p.z2)}); }

template <class Range>
Json rational_array(const Range& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json quartic_json(const BinaryQuartic& q) { return rational_array(q.a); }

}  // namespace

Json quad_json(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  Json out;
  out["p"] = to_string(x.rational_part());
  out["q"] = to_string(x.radical_part());
  out["d"] = x.radicand().get_str();
  return out;
}

Json root_json(const ProjectiveRoot& r) {
  Json out;
  if (r.at_infinity()) {
    out["type"] = "infinity";
    out["point"] = Json::array({"1", "0"});
  } else if (const RootInterval* iv = r.finite->as_interval()) {
    out["type"] = "interval";
    Json poly = Json::array();
    const auto& c = iv->poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) poly.push_back(to_string(*it));
    out["polynomial_descending"] = std::move(poly);
    out["interval"] = Json::array({to_string(iv->lo), to_string(iv->hi)});
  } else {
    QuadExt t = *r.finite->exact_value();
    out["type"] = t.is_rational() ? "rational" : "quadratic";
    out["point"] = Json::array({quad_json(t), "1"});
  }
  out["multiplicity"] = str(static_cast<std::size_t>(r.multiplicity));
  return out;
}

Json sextet_json(const DetSextetQ& g) {
  Json out = Json::array();
  for (const auto& v : g.g) out.push_back(quad_json(v));
  return out;
}

Json map_json(const CubicMapQ& f) {
  Json out;
  for (std::size_t i = 0; i < 2; ++i) {
    std::string row = std::to_string(i + 1);
    for (std::size_t j = 0; j < 4; ++j) out["F" + row + "_" + kCubicColumnNames[j]] = quad_json(f.F[i][j]);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    std::string row = std::to_string(i + 1);
    for (std::size_t j = 0; j < 3; ++j) out["Q" + row + "_" + kQuadraticNames[j]] = quad_json(f.Q[i][j]);
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out["L" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = quad_json(f.L[i][j]);
  for (std::size_t i = 0; i < 2; ++i) out["c" + std::to_string(i + 1)] = quad_json(f.c[i]);
  return out;
}

Json change_json(const AffineChangeQ& phi) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : phi.T) rows.push_back(Json::array({quad_json(row[0]), quad_json(row[1])}));
  out["matrix"] = std::move(rows);
  out["translation"] = Json::array({quad_json(phi.a[0]), quad_json(phi.a[1])});
  return out;
}

Json forms_block(const CubicMap& f) {
  DetSextet g = determinants(f);
  Json out;
  out["determinants"] = rational_array(g.g);
  out["omega1"] = quartic_json(omega1(g));
  return out;
}

Json classification_block(const Classification& c) {
  Json out;
  out["kind"] = to_string(c.kind);
  if (c.sign != Sign::none) out["sign"] = to_string(c.sign);
  if (c.subcase != SemiDefiniteSubcase::none) out["subcase"] = to_string(c.subcase);
  Json roots = Json::array();
  for (const auto& r : c.roots) roots.push_back(root_json(r));
  out["roots"] = std::move(roots);
  if (c.sign_point) out["sign_point"] = point_json(*c.sign_point);
  if (c.positive_witness) out["positive_witness"] = point_json(*c.positive_witness);
  if (c.negative_witness) out["negative_witness"] = point_json(*c.negative_witness);
  return out;
}

Json normalization_block(const NormalizationResult& r) {
  Json out;
  out["S"] = change_json(r.left);
  out["T"] = change_json(r.right);
  out["normalized"] = map_json(r.normalized);
  out["achieved"] = sextet_json(r.achieved);
  out["exactness"] = r.exactness == Exactness::exact ? "exact" : "approximate";
  if (r.residual) out["residual"] = to_string(*r.residual);
  if (r.refinement_steps > 0) out["refinement_steps"] = str(r.refinement_steps);
  out["partial"] = r.partial;
  return out;
}

Json refinement_block(const RefinementReport& report, const std::array<std::size_t, 2>& chosen) {
  Json out;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json item;
    item["pair"] = Json::array({str(e.first), str(e.second)});
    for (std::size_t k = 0; k < 4; ++k) item["R" + std::to_string(k + 1)] = to_string(e.pattern[k]);
    item["label"] = e.label;
    if (e.first == chosen[0] && e.second == chosen[1]) out["chosen"] = item;
    entries.push_back(std::move(item));
  }
  out["pairs"] = std::move(entries);
  out["achievable"] = report.achievable;
  out["has_undetermined"] = report.has_undetermined;
  return out;
}

Json verify_block(const IdentityTrialSummary& identities, const ConformanceReport& conformance) {
  Json out;
  Json right;
  right["cases"] = str(identities.right_cases);
  right["singular_cases"] = str(identities.right_singular_cases);
  right["failures"] = str(identities.right_failures);
  Json left;
  left["cases"] = str(identities.left_cases);
  left["failures"] = str(identities.left_failures);
  out["right_composition"] = std::move(right);
  out["left_composition"] = std::move(left);
  if (!identities.failure_notes.empty()) out["failure_notes"] = identities.failure_notes;

  Json conf;
  conf["cases"] = str(conformance.cases);
  auto counts = [](const std::array<std::size_t, 6>& a) {
    Json arr = Json::array();
    for (auto v : a) arr.push_back(str(v));
    return arr;
  };
  conf["derived_mismatches"] = counts(conformance.derived_mismatches);
  conf["printed_mismatches"] = counts(conformance.printed_mismatches);
  conf["patched_printed_mismatches"] = counts(conformance.patched_mismatches);
  Json sites = Json::array();
  for (const auto& s : conformance.sites) {
    Json site;
    site["form"] = "omega[" + std::to_string(s.form) + "]";
    site["monomial"] = monomial_to_string(s.monomial);
    site["printed"] = combination_to_string(s.printed);
    site["derived"] = combination_to_string(s.derived);
    sites.push_back(std::move(site));
  }
  conf["printed_disagreements"] = std::move(sites);
  out["conformance"] = std::move(conf);
  return out;
}

void certify_classification(const BinaryQuartic& q, const Classification& c) {
  for (const auto& r : c.roots) {
    if (auto rep = r.exact_representative()) {
      if (!q((*rep)[0], (*rep)[1]).is_zero()) throw InternalInconsistency("reported exact root is not a root");
    } else {
      const RootInterval* iv = r.finite->as_interval();
      if (!divmod(q.dehomogenized(), iv->poly).second.is_zero()) {
        throw InternalInconsistency("reported interval polynomial does not divide omega[1]");
      }
      if (iv->poly.sign_at(iv->lo) * iv->poly.sign_at(iv->hi) >= 0) {
        throw InternalInconsistency("reported isolating interval does not bracket a sign change");
      }
    }
  }
  auto check_sign = [&](const std::optional<ProjectivePoint>& p, int expected) {
    if (p && sign(q(p->z1, p->z2)) != expected) throw InternalInconsistency("reported witness has the wrong sign");
  };
  check_sign(c.positive_witness, 1);
  check_sign(c.negative_witness, -1);
  if (c.sign_point) check_sign(c.sign_point, c.sign == Sign::positive ? 1 : -1);
}

void certify_normalization(const CubicMap& f, const NormalizationResult& r, const NormalizeOptions& options) {
  CubicMapQ recomputed = compose_left(r.left, compose_right(lift(f), r.right));
  if (!(recomputed == r.normalized)) throw InternalInconsistency("normalized map does not equal S o f o T");
  if (!(determinants(recomputed) == r.achieved)) throw InternalInconsistency("achieved sextet does not match");
  if (r.left.det().is_zero() || r.right.det().is_zero()) throw InternalInconsistency("singular change in result");
  if (r.exactness == Exactness::approximate) {
    if (!r.residual) throw InternalInconsistency("approximate result without residual");
    QuadExt a = r.achieved[G::g1111];
    QuadExt b = r.achieved[G::g2222];
    if (!a.is_rational() || !b.is_rational()) throw InternalInconsistency("residual outside Q");
    Rational res = std::max(abs(a.rational_part()), abs(b.rational_part()));
    if (res != *r.residual || res > options.residual_bound) {
      throw InternalInconsistency("reported residual does not match recomputation");
    }
  }
}

Report forms_report(const MapDocument& doc) {
  Report out;
  out.body["command"] = "forms";
  out.body["input"] = Json::parse(serialize_map_document(doc));
  CubicMap f = doc.map();
  out.body["forms"] = forms_block(f);
  return out;
}

Report classify_report(const MapDocument& doc) {
  Report out;
  CubicMap f = doc.map();
  Classification c = classify_map(f);
  BinaryQuartic q = omega1(determinants(f));
  certify_classification(q, c);
  out.body["command"] = "classify";
  out.body["input"] = Json::parse(serialize_map_document(doc));
  out.body["forms"] = forms_block(f);
  out.body["classification"] = classification_block(c);
  return out;
}

Report normalize_report(const MapDocument& doc, const NormalizeOptions& options) {
  Report out;
  CubicMap f = doc.map();
  Classification c = classify_map(f);
  BinaryQuartic q = omega1(determinants(f));
  certify_classification(q, c);
  out.body["command"] = "normalize";
  out.body["input"] = Json::parse(serialize_map_document(doc));
  out.body["forms"] = forms_block(f);
  out.body["classification"] = classification_block(c);
  out.body["residual_bound"] = to_string(options.residual_bound);

  if (c.kind == QuarticKind::definite) {
    out.body["partial"] = "definite case";
    out.body["normalization"] = "no normalization defined";
    return out;
  }

  NormalizationResult result;
  std::string method;
  std::optional<std::array<std::size_t, 2>> pair;
  if (c.kind == QuarticKind::zero) {
    method = "zero-case reduction";
    result = normalize_zero_case(f);
  } else if (c.roots.size() >= 2) {
    method = "root pair";
    pair = default_root_pair(c);
    result = normalize_two_roots(f, c.roots[(*pair)[0]], c.roots[(*pair)[1]], options);
  } else {
    method = "single root";
    result = normalize_semidefinite(f, options);
  }
  certify_normalization(f, result, options);

  Json block;
  block["method"] = method;
  if (pair) block["root_pair"] = Json::array({str((*pair)[0]), str((*pair)[1])});
  Json details = normalization_block(result);
  for (const auto& [k, v] : details.items()) block[k] = v;
  out.body["normalization"] = std::move(block);
  if (pair) out.body["refinement"] = refinement_block(refinement_report(f), *pair);
  return out;
}

Report verify_report(const GeneratorConfig& cfg) {
  Report out;
  IdentityTrialSummary identities = run_identity_trials(cfg);
  ConformanceReport conformance = symbolic_expansion_check(cfg);
  bool derived_ok = std::all_of(conformance.derived_mismatches.begin(), conformance.derived_mismatches.end(),
                                [](std::size_t n) { return n == 0; });
  out.body["command"] = "verify";
  out.body["trials"] = str(cfg.count);
  out.body["seed"] = std::to_string(cfg.seed);
  out.body["bound"] = std::to_string(cfg.bound);
  out.body["identities"] = verify_block(identities, conformance);
  bool ok = identities.ok() && derived_ok;
  out.body["status"] = ok ? "ok" : "failed";
  out.exit_code = ok ? 0 : 2;
  return out;
}

namespace {

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); });
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("d")) {
    return v["p"].get<std::string>() + "+" + v["q"].get<std::string>() + "*sqrt(" + v["d"].get<std::string>() + ")";
  }
  return v.dump();
}

void render(std::ostringstream& os, const Json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : v.items()) {
    // The input echo is only useful in machine-readable output.
    if (indent == 0 && key == "input") continue;
    os << pad << key << ":";
    if (value.is_object() && !value.contains("d")) {
      os << "\n";
      render(os, value, indent + 2);
    } else if (value.is_array() && !is_flat(value) &&
               std::any_of(value.begin(), value.end(), [](const Json& x) { return x.is_object() && !x.contains("d"); })) {
      os << "\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render(os, item, indent + 4);
      }
    } else if (value.is_array()) {
      os << " ";
      bool first = true;
      for (const auto& item : value) {
        if (!first) os << ", ";
        first = false;
        if (item.is_array()) {
          os << "[";
          bool inner_first = true;
          for (const auto& x : item) {
            if (!inner_first) os << ", ";
            inner_first = false;
            os << scalar_text(x);
          }
          os << "]";
        } else {
          os << scalar_text(item);
        }
      }
      os << "\n";
    } else {
      os << " " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& body) {
  std::ostringstream os;
  render(os, body, 0);
  return os.str();
}

}  // namespace rcubic
