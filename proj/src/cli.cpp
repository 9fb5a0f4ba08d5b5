#include "epos/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epos/certify.hpp"
#include "epos/decomposition.hpp"
#include "epos/errors.hpp"
#include "epos/expansions.hpp"
#include "epos/graph_oracle.hpp"
#include "epos/injections.hpp"
#include "epos/parallel.hpp"
#include "epos/serialize.hpp"

namespace epos {

namespace {

// Largest degree the expansion commands accept; beyond it the enumeration
// runs for hours.
constexpr int kMaxDegree = 40;
constexpr int kMaxM = 6;

enum class Format { kJson, kCsv, kPretty };

struct RunConfig {
  Format format = Format::kJson;
  std::string output;
  unsigned workers = 0;
  int budget = kDefaultEdgeBudget;
  int n = 0;
  std::vector<int> legs;
  int m = 0;
  std::string graph;
  std::string lemma;
  std::string s2_variant = "strict";
};

std::string render(const EFunction& f, Format format) {
  switch (format) {
    case Format::kJson: return to_json(f).dump(2) + "\n";
    case Format::kCsv: return to_csv(f);
    case Format::kPretty: return to_pretty(f) + "\n";
  }
  return {};
}

std::string render(const Json& report, Format format) {
  switch (format) {
    case Format::kJson: return report.dump(2) + "\n";
    case Format::kCsv: return report_to_csv(report);
    case Format::kPretty: return report_to_text(report);
  }
  return {};
}

void emit(const std::string& text, const RunConfig& config, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw DomainError("cannot open '" + config.output + "' for writing");
  file << text;
  if (!file) throw DomainError("failed writing '" + config.output + "'");
}

Json verify_one(const std::string& lemma, int m, S2Variant variant) {
  if (lemma == "x0") return to_json(check_lemma_x0(m));
  if (lemma == "y") return to_json(check_lemma_y(m));
  if (lemma == "t1234") return to_json(check_lemma_t1234(m));
  if (lemma == "injections") return to_json(verify_injections(m));
  if (lemma == "disjointness") return to_json(verify_disjointness(m, variant));
  throw DomainError("unknown lemma '" + lemma + "'");
}

Json verify(const RunConfig& config) {
  const S2Variant variant = config.s2_variant == "relaxed" ? S2Variant::kRelaxed : S2Variant::kStrict;
  if (config.lemma != "all") return verify_one(config.lemma, config.m, variant);
  Json out;
  out["check"] = "all";
  out["m"] = config.m;
  Json results = Json::array();
  bool verdict = true;
  for (const char* lemma : {"x0", "y", "t1234", "injections", "disjointness"}) {
    Json result = verify_one(lemma, config.m, variant);
    verdict = verdict && result["verdict"].get<bool>();
    results.push_back(std::move(result));
  }
  out["results"] = std::move(results);
  out["verdict"] = verdict;
  return out;
}

// Exit code for a report: 0 when its verdict holds, 1 otherwise.
int finish(const Json& report, const RunConfig& config, std::ostream& out) {
  emit(render(report, config.format), config, out);
  return report["verdict"].get<bool>() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Chromatic symmetric functions in the elementary basis, and positivity certificates for "
               "the spiders S(4m+2, 2m, 1)."};
  app.name("epos");
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"pretty", Format::kPretty}};
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  app.add_option("--output,-o", config.output, "Write to this file instead of standard output");
  app.add_option("--workers", config.workers, "Worker threads (0: EPOS_WORKERS or all cores)")
      ->check(CLI::Range(0U, 1024U));
  app.add_option("--budget", config.budget, "Maximum edge count for the oracle")
      ->check(CLI::Range(0, kDefaultEdgeBudget))
      ->default_val(kDefaultEdgeBudget);

  auto* path = app.add_subcommand("path", "Expansion of the path P_n");
  path->add_option("--n", config.n, "Number of vertices")->required()->check(CLI::Range(1, kMaxDegree));

  auto* spider = app.add_subcommand("spider", "Expansion of the spider S(a, b, c) with a >= b >= c >= 1");
  spider->add_option("--legs", config.legs, "Leg lengths a,b,c")
      ->required()
      ->delimiter(',')
      ->expected(3)
      ->check(CLI::PositiveNumber);

  auto* spider4m = app.add_subcommand("spider4m", "Expansion of S(4m+2, 2m, 1)");
  spider4m->add_option("--m", config.m, "Parameter m")->required()->check(CLI::Range(1, kMaxM));

  auto* oracle = app.add_subcommand("oracle", "Brute-force expansion of a graph read from a file");
  oracle->add_option("--graph", config.graph, "Graph file: vertex count, then one 'u v' edge per line")
      ->required()
      ->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "Check one step of the positivity argument");
  verify_cmd->add_option("--lemma", config.lemma, "Which check to run")
      ->required()
      ->check(CLI::IsMember({"x0", "y", "t1234", "injections", "disjointness", "all"}));
  verify_cmd->add_option("--m", config.m, "Parameter m")->required()->check(CLI::Range(1, kMaxM));
  verify_cmd->add_option("--s2-variant", config.s2_variant, "S2 with last part of Q >= 4 (strict) or any even")
      ->check(CLI::IsMember({"strict", "relaxed"}))
      ->default_val("strict");

  auto* certify_cmd = app.add_subcommand("certify", "Build and check the positivity certificate");
  certify_cmd->add_option("--m", config.m, "Parameter m")->required()->check(CLI::Range(1, kMaxM));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "epos: " << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return 2;
  }

  try {
    set_worker_count(config.workers);
    if (*path) {
      emit(render(path_csf_e(config.n), config.format), config, out);
    } else if (*spider) {
      if (config.legs[0] + config.legs[1] + config.legs[2] + 1 > kMaxDegree) {
        throw DomainError("spider order exceeds " + std::to_string(kMaxDegree));
      }
      emit(render(spider_csf_e(config.legs[0], config.legs[1], config.legs[2]), config.format), config, out);
    } else if (*spider4m) {
      emit(render(spider4m_csf(config.m), config.format), config, out);
    } else if (*oracle) {
      std::ifstream file(config.graph);
      if (!file) throw DomainError("cannot read '" + config.graph + "'");
      emit(render(csf_subset_expansion(parse_graph(file), config.budget), config.format), config, out);
    } else if (*verify_cmd) {
      return finish(verify(config), config, out);
    } else if (*certify_cmd) {
      return finish(to_json(certify(config.m)), config, out);
    }
    return 0;
  } catch (const InvariantViolation& e) {
    err << "epos: verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "epos: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace epos
