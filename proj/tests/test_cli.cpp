#include "rcubic/map_document.hpp"
#include "rcubic/report.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace rcubic;
using namespace rcubic::testing;

namespace {

const char* kMapA = R"({
  "format_version": 1,
  "mode": "tensor",
  "F": {"F1_111": "1", "F1_222": "1", "F2_112": "1", "F2_122": "1"}
})";

struct RunResult {
  int code = -1;
  std::string out;
};

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(RCUBIC_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RCUBIC_CLI) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool only_exact_scalars(const Json& v) {
  if (v.is_number_float()) return false;
  if (v.is_structured()) {
    for (const auto& x : v) {
      if (!only_exact_scalars(x)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(MapDocument, ParsesAndDefaultsToZero) {
  MapDocument doc = parse_map_document(kMapA);
  EXPECT_EQ(doc.map(), map_a());
}

TEST(MapDocument, CanonicalRoundTripIsByteIdentical) {
  RandomSource rng(51);
  for (int k = 0; k < 20; ++k) {
    for (CoefficientMode mode : {CoefficientMode::tensor, CoefficientMode::polynomial}) {
      std::string text = serialize_map_document(make_document(rng.cubic_map(7), mode));
      EXPECT_EQ(serialize_map_document(parse_map_document(text)), text);
    }
  }
}

TEST(MapDocument, PolyModeUsesMonomialCoefficients) {
  MapDocument doc = parse_map_document(R"({"format_version": 1, "mode": "poly",
    "F": {"F1_112": "3", "F2_122": "-3/2"}, "Q": {"Q1_12": "4"}})");
  CubicMap f = doc.map();
  EXPECT_EQ(f.F[0][1], Rational(1));
  EXPECT_EQ(f.F[1][2], make_rational(-1, 2));
  EXPECT_EQ(f.Q[0][1], Rational(2));
}

TEST(MapDocument, ErrorsNameFieldAndLine) {
  auto message = [](const std::string& text) {
    try {
      parse_map_document(text);
    } catch (const DocumentError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("{\"format_version\": 1,\n\"F\": {\n\"F1_111\": \"1/0\"}}"),
            "line 3: field 'F1_111': zero denominator in '1/0'");
  EXPECT_EQ(message("{\"format_version\": 1,\n\"F\": {\"F1_121\": \"1\"}}"),
            "line 2: field 'F1_121': unknown field in block 'F'");
  EXPECT_EQ(message("{\"format_version\": 1, \"F\": {}, \"G\": {}}"), "line 1: field 'G': unknown field");
  EXPECT_EQ(message("{\"format_version\": 1,\n \"F\": {\"F1_111\": 0.5}}"),
            "line 2: field 'F1_111': expected a rational string such as \"3/4\"");
  EXPECT_EQ(message("{\"format_version\": 2, \"F\": {}}"),
            "line 1: field 'format_version': unsupported format version (expected 1)");
  EXPECT_EQ(message("{\"F\": {}}"), "line 1: missing field 'format_version'");
  EXPECT_EQ(message("{\"format_version\": 1}"), "line 1: missing block 'F'");
  EXPECT_EQ(message("{\"format_version\": 1,\n\n \"F\": {,}}"), "line 3: malformed JSON");
}

TEST(Report, FormsBlockForMapA) {
  Report r = forms_report(parse_map_document(kMapA));
  EXPECT_EQ(r.body["forms"]["determinants"], Json({"1", "1", "0", "0", "-1", "-1"}));
  EXPECT_EQ(r.body["forms"]["omega1"], Json({"1", "2", "0", "-2", "-1"}));
}

TEST(Report, NormalizeMapAAndDefinite) {
  Report a = normalize_report(parse_map_document(kMapA));
  EXPECT_EQ(a.body["normalization"]["T"]["matrix"], Json::parse(R"([["1","-1"],["1","1"]])"));
  EXPECT_EQ(a.body["normalization"]["achieved"], Json({"0", "-16", "0", "0", "0", "0"}));
  EXPECT_EQ(a.body["refinement"]["chosen"]["label"], "R2.3.4");
  Report d = normalize_report(make_document(map_definite()));
  EXPECT_EQ(d.body["partial"], "definite case");
  EXPECT_FALSE(d.body.contains("refinement"));
}

TEST(Report, QuadraticValuesAreStructured) {
  Report r = normalize_report(make_document(map_sqrt2_double()));
  Json t00 = r.body["normalization"]["T"]["matrix"][0][0];
  EXPECT_EQ(t00, Json::parse(R"({"p":"0","q":"1","d":"2"})"));
  EXPECT_TRUE(only_exact_scalars(r.body));
}

TEST(Report, Deterministic) {
  MapDocument doc = parse_map_document(kMapA);
  EXPECT_EQ(normalize_report(doc).body.dump(), normalize_report(doc).body.dump());
  EXPECT_EQ(verify_report({42, 5, 20}).body.dump(), verify_report({42, 5, 20}).body.dump());
}

TEST(Cli, FormsMapA) {
  RunResult r = run_cli("forms " + write_temp("a.json", kMapA));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("determinants: 1, 1, 0, 0, -1, -1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("omega1: 1, 2, 0, -2, -1"), std::string::npos) << r.out;
}

TEST(Cli, MalformedRationalExitsOne) {
  std::string doc = "{\"format_version\": 1,\n\"F\": {\"F1_111\": \"1/0\"}}";
  RunResult r = run_cli("forms " + write_temp("bad.json", doc));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("F1_111"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyExitCodes) {
  std::string path = write_temp("c.json", serialize_map_document(make_document(map_c())));
  RunResult c = run_cli("classify " + path);
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("kind: Zero"), std::string::npos);
  RunResult none = run_cli("classify " + write_temp("q.json", R"({"format_version":1,"F":{},"Q":{"Q1_11":"1"}})"));
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(run_cli("classify " + std::string(RCUBIC_TEST_TMP) + "/missing.json").code, 1);
}

TEST(Cli, NormalizeResidualFlag) {
  std::string path = write_temp("a2.json", kMapA);
  EXPECT_EQ(run_cli("normalize " + path + " --residual 1/1000").code, 0);
  EXPECT_EQ(run_cli("normalize " + path + " --residual 0").code, 1);
  EXPECT_EQ(run_cli("normalize " + path + " --residual 0.001").code, 1);
}

TEST(Cli, NormalizeBudgetExhaustionExitsThree) {
  // The default pair is two interval roots; a residual of 1/10^4000 needs
  // far more bisections than the budget allows.
  CubicMap f;
  RandomSource rng(41);
  for (;;) {
    f = rng.cubic_map(4);
    Classification c = classify_map(f);
    if (c.kind == QuarticKind::indefinite && !c.roots[0].is_exact() && !c.roots[1].is_exact()) break;
  }
  std::string path = write_temp("irr.json", serialize_map_document(make_document(f)));
  RunResult r = run_cli("normalize " + path + " --residual 1/1" + std::string(4000, '0'));
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST(Cli, JsonOutputParsesAndHasNoFloats) {
  RunResult r = run_cli("normalize --json " + write_temp("a3.json", kMapA));
  ASSERT_EQ(r.code, 0);
  Json body = Json::parse(r.out);
  EXPECT_TRUE(only_exact_scalars(body));
  EXPECT_EQ(body["input"], Json::parse(serialize_map_document(parse_map_document(kMapA))));
}

TEST(Cli, VerifyExitCodes) {
  RunResult ok = run_cli("verify --trials 50 --seed 42 --bound 5");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("status: ok"), std::string::npos);
  EXPECT_NE(ok.out.find("z2^3*z3"), std::string::npos);
  EXPECT_EQ(run_cli("verify --trials 0").code, 1);
  EXPECT_EQ(run_cli("bogus").code, 1);
  EXPECT_EQ(run_cli("").code, 1);
}
