// pmv: analyze pseudo MV-algebras and their square roots.
//
// Exit codes: 0 clean, 2 axiom failure, 3 parse error, 4 other analysis error
// (ceilings, unsupported backends, or a search row contradicting the finite trichotomy).

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "pmv/report.hpp"

namespace {

constexpr int kAxiomFailure = 2;
constexpr int kParseError = 3;
constexpr int kAnalysisError = 4;

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo MV-algebra square root toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  pmv::RunOptions opts;
  app.add_option("--seed", opts.seed, "PRNG seed (PMV_SEED overrides)");
  app.add_option("--samples", opts.samples, "sample budget for infinite algebras")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", opts.tolerance, "float comparison tolerance")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", pmv::kToolVersion);

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "full report for one algebra (JSON or .pmv text)");
  analyze->add_option("file", path)->required();

  std::size_t max_size = 6;
  bool table = false;
  auto* search = app.add_subcommand("search", "weak square roots across the finite catalogue");
  search->add_option("--max-size", max_size, "largest carrier")->check(CLI::Range(1, 6));
  search->add_flag("--table", table, "plain table instead of JSON");

  app.add_subcommand("counterexamples", "the two float-backed semidirect examples");

  unsigned depth = 10;
  auto* ladder = app.add_subcommand("ladder", "u/2^k ladder of a strict gamma algebra");
  ladder->add_option("file", path)->required();
  ladder->add_option("--depth", depth)->check(CLI::Range(1, 20));

  std::string ideal;
  auto* quot = app.add_subcommand("quotient", "quotient of a finite algebra by an ideal");
  quot->add_option("file", path)->required();
  quot->add_option("--ideal", ideal, "comma-separated element labels")->required();

  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("PMV_SEED"); env != nullptr && *env != '\0') {
    try {
      opts.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "pmv: PMV_SEED is not an unsigned integer: " << env << "\n";
      return kParseError;
    }
  }

  try {
    if (*analyze) {
      std::cout << pmv::render_json(pmv::analyze_report(pmv::load_algebra(path, opts), opts));
    } else if (*search) {
      bool consistent = true;
      auto report = pmv::search_report(max_size, &consistent);
      if (table) {
        std::cout << "spec\tsize\tweak_root\tboolean\tconsistent\n";
        for (const auto& row : report["rows"]) {
          std::cout << row["spec"].get<std::string>() << '\t' << row["size"] << '\t' << row["weak_root_exists"] << '\t'
                    << row["is_boolean"] << '\t' << row["consistent"] << '\n';
        }
      } else {
        std::cout << pmv::render_json(report);
      }
      if (!consistent) {
        std::cerr << "pmv: a non-Boolean finite algebra has a weak square root\n";
        return kAnalysisError;
      }
    } else if (app.got_subcommand("counterexamples")) {
      std::cout << pmv::render_json(pmv::counterexamples_report(opts));
    } else if (*ladder) {
      std::cout << pmv::render_json(pmv::ladder_report(pmv::load_algebra(path, opts), depth, opts));
    } else if (*quot) {
      std::cout << pmv::render_json(pmv::quotient_report(pmv::load_algebra(path, opts), split_labels(ideal), opts));
    }
  } catch (const pmv::AxiomFailure& e) {
    std::cerr << "pmv: axiom failure: " << e.what() << "\n";
    return kAxiomFailure;
  } catch (const pmv::ParseError& e) {
    std::cerr << "pmv: parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const pmv::Error& e) {
    std::cerr << "pmv: " << e.what() << "\n";
    return kAnalysisError;
  }
  return 0;
}
