// rcubic: invariants, classification and normal forms of cubic maps of the
// plane, in exact rational arithmetic.
//
// Exit codes: 0 success, 1 input or usage error, 2 internal identity
// failure, 3 residual budget exhausted.

#include "rcubic/errors.hpp"
#include "rcubic/map_document.hpp"
#include "rcubic/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kInput = 1, kInternal = 2, kBudget = 3 };

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rcubic::DocumentError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

int emit(const rcubic::Report& report, bool json) {
  if (json) {
    std::cout << report.body.dump(2) << "\n";
  } else {
    std::cout << rcubic::render_text(report.body);
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and normal forms of cubic maps of the plane"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the full report as JSON");

  std::string path;
  auto* forms = app.add_subcommand("forms", "Determinants and omega[1] coefficients");
  forms->add_option("file", path, "Map document ('-' for stdin)")->required();

  auto* classify = app.add_subcommand("classify", "Sign type and projective roots of omega[1]");
  classify->add_option("file", path, "Map document ('-' for stdin)")->required();

  std::string residual;
  auto* normalize = app.add_subcommand("normalize", "Normal form under two-sided equivalence");
  normalize->add_option("file", path, "Map document ('-' for stdin)")->required();
  normalize->add_option("--residual", residual, "Residual bound p/q for irrational roots (default 1/10^30)");

  long trials = 1000;
  std::uint64_t seed = 42;
  long bound = 5;
  auto* verify = app.add_subcommand("verify", "Random checks of the composition identities");
  verify->add_option("--trials", trials, "Number of random cases");
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_option("--bound", bound, "Coefficient bound");

  for (auto* sub : {forms, classify, normalize, verify}) sub->add_flag("--json", json, "Print the full report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (verify->parsed()) {
      if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
      if (bound < 1) throw std::invalid_argument("--bound must be at least 1");
      rcubic::GeneratorConfig cfg{seed, bound, static_cast<std::size_t>(trials)};
      return emit(rcubic::verify_report(cfg), json);
    }

    rcubic::MapDocument doc = rcubic::parse_map_document(read_input(path));
    if (forms->parsed()) return emit(rcubic::forms_report(doc), json);
    if (classify->parsed()) return emit(rcubic::classify_report(doc), json);

    rcubic::NormalizeOptions options;
    if (!residual.empty()) {
      options.residual_bound = rcubic::parse_rational(residual);
      if (rcubic::sign(options.residual_bound) <= 0) throw std::invalid_argument("--residual must be positive");
    }
    return emit(rcubic::normalize_report(doc, options), json);
  } catch (const rcubic::ResidualBudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const rcubic::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
