#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "arrsym/aut_search.hpp"
#include "arrsym/config.hpp"
#include "arrsym/error.hpp"
#include "arrsym/families.hpp"
#include "arrsym/graph_io.hpp"
#include "arrsym/indsets.hpp"
#include "arrsym/suite.hpp"

namespace {

using namespace arrsym;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitClaimFailed = 4;

// Writes next to the destination and renames, so a failed run leaves no partial file.
void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(temp);
      throw ValidationError("cannot write '" + path + "'");
    }
  }
  std::filesystem::rename(temp, target);
}

ConnectionSet parse_connection(std::size_t n, const std::string& name) {
  if (name == "transpositions") return ConnectionSet::make(n, ConnectionKind::transpositions);
  if (name == "derangements") return ConnectionSet::make(n, ConnectionKind::derangements);
  if (name.rfind("fixed:", 0) == 0) {
    const std::string count = name.substr(6);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("malformed connection set '" + name + "'");
    }
    return ConnectionSet::make(n, ConnectionKind::fixed_points, std::stoul(count));
  }
  throw ValidationError("unknown connection set '" + name + "' (transpositions, derangements or fixed:K)");
}

std::string set_string(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + g.label_string(s[i]);
  return out + "}";
}

int claims_exit(const std::vector<ClaimReport>& claims) {
  bool inconclusive = false;
  for (const ClaimReport& c : claims) {
    if (c.exploratory || c.pass) continue;
    if (c.status != "inconclusive") return kExitClaimFailed;
    inconclusive = true;
  }
  return inconclusive ? kExitBudget : kExitOk;
}

struct GenArgs {
  std::size_t n = 0, k = 0, r = 0;
  std::string set;
  std::string format = "edgelist";
  std::string out;
};

int emit_graph(const Graph& g, const GenArgs& args, const Config&) {
  const std::string text = write_graph(g, parse_graph_format(args.format));
  const std::string counts = std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
  if (args.out.empty() || args.out == "-") {
    std::cout << text;
    std::cerr << counts << '\n';
  } else {
    write_atomically(args.out, text);
    std::cout << counts << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry computations for arrangement graphs and Cayley graphs of symmetric groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<unsigned> workers;
  std::optional<std::uint64_t> node_budget;
  app.add_option("--workers", workers, "Worker threads (overrides ARRSYM_WORKERS)")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", node_budget, "Search node budget (overrides ARRSYM_NODE_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Build a graph and write it out");
  gen->require_subcommand(1);
  GenArgs gen_args;
  auto* gen_arr = gen->add_subcommand("arrangement", "Arrangement graph A(n,k,r)");
  gen_arr->add_option("--n", gen_args.n, "Symbols")->required();
  gen_arr->add_option("--k", gen_args.k, "Tuple length")->required();
  gen_arr->add_option("--r", gen_args.r, "Adjacent when differing in at least r coordinates")->required();
  auto* gen_cay = gen->add_subcommand("cayley", "Cayley graph Cay(S_n, S)");
  gen_cay->add_option("--n", gen_args.n, "Degree of the symmetric group")->required();
  gen_cay->add_option("--set", gen_args.set, "transpositions, derangements or fixed:K")->required();
  for (auto* sub : {gen_arr, gen_cay}) {
    sub->add_option("--format", gen_args.format, "edgelist, dot or graphdoc")
        ->check(CLI::IsMember({"edgelist", "dot", "graphdoc"}));
    sub->add_option("--out,-o", gen_args.out, "Output path (stdout when omitted)");
  }

  std::string graph_path;
  bool show_generators = false;
  auto* aut = app.add_subcommand("aut", "Automorphism group order of a graph file");
  aut->add_option("graph", graph_path, "Graph file (edge list or graph document)")->required();
  aut->add_flag("--generators", show_generators, "Also print a generating set");
  bool certificate = false;
  aut->add_flag("--certificate", certificate, "Also print the canonical certificate");

  bool mis_all = false;
  auto* mis = app.add_subcommand("mis", "Maximum independent sets of a graph file");
  mis->add_option("graph", graph_path, "Graph file")->required();
  mis->add_flag("--all", mis_all, "Enumerate every maximum independent set");

  std::size_t n = 0, k = 0;
  auto* blocks = app.add_subcommand("blocks", "Row and column block systems of the Delta family");
  blocks->add_option("--n", n)->required();
  blocks->add_option("--k", k)->required();

  SuiteOptions suite_options;
  std::string report_path, summary_path;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--n-max", suite_options.n_max, "Largest n (3..5)")->capture_default_str();
  verify->add_flag("--include-n6", suite_options.include_n6, "Add the n = 6, k <= 2 automorphism orders");
  verify->add_option("--seed", suite_options.seed, "Seed for shuffled copies")->capture_default_str();
  verify->add_option("--report", report_path, "Write the JSON report here");
  verify->add_option("--summary", summary_path, "Write the summary table here");
  verify->add_flag("--no-timing", no_timing, "Omit wall-time fields from the report");

  auto* conjecture = app.add_subcommand("conjecture", "Probe Aut(Cay(S_n,F_k)) against the candidate group");
  conjecture->add_option("--n", n)->required();
  conjecture->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    Config config = Config::from_environment();
    if (workers) config.workers = *workers;
    if (node_budget) config.node_budget = *node_budget;
    config.validate();
    const SearchOptions search{config.node_budget};

    if (gen_arr->parsed()) {
      return emit_graph(build_arrangement_graph(gen_args.n, gen_args.k, gen_args.r, config.vertex_guard), gen_args,
                        config);
    }
    if (gen_cay->parsed()) {
      return emit_graph(build_cayley_graph(parse_connection(gen_args.n, gen_args.set), config.vertex_guard), gen_args,
                        config);
    }
    if (aut->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const AutResult result = automorphism_group(g, search);
      std::cout << "order " << to_string(result.order) << '\n';
      if (show_generators) {
        for (const Permutation& p : result.generators) std::cout << p.to_string() << '\n';
      }
      if (certificate) std::cout << "certificate " << result.certificate_hex() << '\n';
      return kExitOk;
    }
    if (mis->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const MisResult result = max_independent_sets(g, mis_all ? MisMode::enumerate_all : MisMode::size_only, config);
      std::cout << "size " << result.size << '\n';
      if (result.sets) {
        std::cout << "sets " << result.sets->size() << '\n';
        for (const VertexSet& s : *result.sets) std::cout << set_string(g, s) << '\n';
      } else {
        std::cout << "witness " << set_string(g, result.witness) << '\n';
      }
      return kExitOk;
    }
    if (blocks->parsed()) {
      const std::vector<ClaimReport> claims = verify_block_claims(n, k, config);
      for (const ClaimReport& c : claims) {
        std::cout << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.computed << ")\n";
        if (c.details.contains("blocks")) {
          std::cout << "  " << c.details["blocks"].size() << " blocks: " << c.details["blocks"].dump() << '\n';
        }
      }
      return claims_exit(claims);
    }
    if (verify->parsed()) {
      const SuiteReport report = run_full_suite(suite_options, config);
      const std::string json = report.to_json(!no_timing).dump(2) + "\n";
      const std::string table = report.summary_table();
      if (!report_path.empty()) write_atomically(report_path, json);
      if (!summary_path.empty()) write_atomically(summary_path, table);
      std::cout << table;
      return claims_exit(report.claims);
    }
    if (conjecture->parsed()) {
      const std::vector<ClaimReport> claims = probe_conjecture(n, k, config);
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const ClaimReport& c : claims) out.push_back(c.to_json(false));
      std::cout << out.dump(2) << '\n';
      return claims_exit(claims);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
