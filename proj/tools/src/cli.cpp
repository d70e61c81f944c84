#include "relalg/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "relalg/connector.hpp"
#include "relalg/error.hpp"
#include "relalg/matrix_io.hpp"
#include "relalg/partition.hpp"
#include "relalg/planner.hpp"
#include "relalg/poset.hpp"
#include "relalg/query.hpp"
#include "relalg/relation.hpp"
#include "relalg/render.hpp"
#include "relalg/scenario.hpp"

namespace relalg::cli {

namespace {

using nlohmann::json;

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// Writes to `path` when given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

struct ClosureOptions {
  std::string input, out, algorithm = "floyd-warshall";
  bool reflexive = false;
  bool no_heatmap = false;
};

template <ClosedSemiring S>
RelationMatrix<S> closure_of(const RelationMatrix<S>& r, const std::string& algorithm,
                             bool reflexive) {
  const Reflexivity refl = reflexive ? Reflexivity::kReflexive : Reflexivity::kNonReflexive;
  if (algorithm == "floyd-warshall") return closure_floyd_warshall(r, refl);
  if (algorithm == "lehmann") return closure_lehmann(r, refl);
  auto acc = transitive_closure_powers(r);
  return reflexive ? unite(RelationMatrix<S>::identity(r.nodes()), acc) : acc;
}

int cmd_closure(const ClosureOptions& o, std::ostream& out) {
  const AnyMatrix input = read_matrix_file(o.input);
  const AnyMatrix result = std::visit(
      [&](const auto& m) -> AnyMatrix { return closure_of(m, o.algorithm, o.reflexive); }, input);
  emit(json_text(any_matrix_to_json(result)), o.out, out);
  if (!o.no_heatmap) {
    if (const auto* b = std::get_if<BoolMatrix>(&result)) out << render_heatmap(*b);
  }
  return 0;
}

struct BlocksOptions {
  std::string input, out, dot;
  bool heatmap = false;
};

int cmd_blocks(const BlocksOptions& o, std::ostream& out) {
  const BoolMatrix r = read_bool_matrix_file(o.input);
  const auto ranks = rank_sequence(r);
  const JordanPartition p = chain_decomposition(r, jordan_block_sizes(r));
  json report = partition_to_json(p);
  report["nodes"] = nodes_to_json(r.nodes());
  report["rank_sequence"] = ranks;
  emit(json_text(report), o.out, out);
  if (!o.dot.empty()) write_text_file(o.dot, partition_to_dot(r, p));
  if (o.heatmap) out << render_heatmap(r, &p);
  return 0;
}

struct AntichainOptions {
  std::string input, out, zeta_csv, mobius_csv;
};

int cmd_antichain(const AntichainOptions& o, std::ostream& out) {
  const BoolMatrix r = read_bool_matrix_file(o.input);
  const Poset poset = poset_from_dag(r);
  emit(json_text(antichain_to_json(r.nodes(), maximum_antichain(poset))), o.out, out);
  if (!o.zeta_csv.empty()) {
    write_text_file(o.zeta_csv, int_rows_to_csv(r.nodes(), zeta_matrix(poset).entries));
  }
  if (!o.mobius_csv.empty()) {
    write_text_file(o.mobius_csv, int_rows_to_csv(r.nodes(), mobius_matrix(poset).entries));
  }
  return 0;
}

struct QueryOptions {
  std::string input, out, forward, backward, filter;
};

int cmd_query(const QueryOptions& o, std::ostream& out) {
  const BoolMatrix r = read_bool_matrix_file(o.input);
  const BoolMatrix closure = closure_floyd_warshall(r, Reflexivity::kReflexive);
  QueryResult q = o.forward.empty() ? backward_query(closure, r.nodes().resolve(o.backward))
                                    : forward_query(closure, r.nodes().resolve(o.forward));
  if (!o.filter.empty()) q.hits = choice(r.nodes(), q.hits, NodePredicate::parse(o.filter));
  emit(json_text(query_to_json(r.nodes(), q)), o.out, out);
  return 0;
}

struct ConnectorOptions {
  std::string input, out, disable;
};

std::vector<std::size_t> parse_id_list(const std::string& text) {
  std::vector<std::size_t> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        })) {
      throw Error(ErrorCode::kInvalidArgument, "connector id '" + item + "' is not a number");
    }
    ids.push_back(std::stoul(item));
  }
  return ids;
}

int cmd_connectors(const ConnectorOptions& o, std::ostream& out) {
  const BoolMatrix r = read_bool_matrix_file(o.input);
  const JordanPartition p = partition_dag(r);
  emit(json_text(connectors_to_json(r.nodes(), find_connectors(r, p))), o.out, out);
  return 0;
}

int cmd_what_if(const ConnectorOptions& o, std::ostream& out) {
  const BoolMatrix r = read_bool_matrix_file(o.input);
  const JordanPartition p = partition_dag(r);
  const auto connectors = find_connectors(r, p);
  ConnectorToggles toggles;
  const auto ids = parse_id_list(o.disable);
  for (const auto id : ids) toggles[id] = false;
  const BoolMatrix full = closure_floyd_warshall(r, Reflexivity::kReflexive);
  const BoolMatrix reduced = what_if(r, connectors, toggles);
  json removed = json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (full(i, j) && !reduced(i, j)) removed.push_back({i, j});
    }
  }
  const json report = {{"format_version", kFormatVersion},
                       {"disabled", ids},
                       {"closure", matrix_to_json(reduced)},
                       {"removed_pairs", std::move(removed)}};
  emit(json_text(report), o.out, out);
  return 0;
}

struct ScenarioOptions {
  std::string spec, out, dot;
  bool heatmap = false;
};

int cmd_scenario_analyze(const ScenarioOptions& o, std::ostream& out) {
  const AnalysisReport report = analyze(read_maze_spec_file(o.spec));
  emit(json_text(analysis_to_json(report)), o.out, out);
  if (!o.dot.empty()) write_text_file(o.dot, partition_to_dot(report.feasible, report.partition));
  if (o.heatmap) out << render_heatmap(report.closure, &report.partition);
  return 0;
}

struct BenchOptions {
  BenchmarkConfig cfg;
  std::size_t seeds = 1;
  std::string csv;
};

int cmd_bench_mdp(const BenchOptions& o, std::ostream& out) {
  std::string text = std::string(kBenchmarkCsvHeader) + "\n";
  for (std::size_t k = 0; k < o.seeds; ++k) {
    BenchmarkConfig cfg = o.cfg;
    cfg.seed = o.cfg.seed + k;
    text += benchmark_csv_row(run_benchmark(cfg)) + "\n";
  }
  if (!o.csv.empty()) write_text_file(o.csv, text);
  out << text;
  return 0;
}

int cmd_check(const std::string& input, std::ostream& out) {
  const BoolMatrix r = read_bool_matrix_file(input);
  const auto cycle = find_cycle(r);
  if (!cycle.empty()) {
    throw Error(ErrorCode::kNotADag, "cycle " + describe_cycle(r.nodes(), cycle));
  }
  out << "OK: " << r.size() << " nodes, " << r.nonzero_count() << " edges, acyclic\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relational algebra toolkit: closures, posets, Jordan partitions, connectors"};
  app.name("relalg");
  app.require_subcommand(1);
  app.set_version_flag("--version", "relalg 0.1.0");

  ClosureOptions closure_o;
  auto* closure = app.add_subcommand("closure", "Transitive closure of a relation matrix");
  closure->add_option("--input", closure_o.input, "Matrix file (.json or .csv)")->required();
  closure->add_option("--algorithm", closure_o.algorithm, "Closure algorithm")
      ->check(CLI::IsMember({"floyd-warshall", "lehmann", "powers"}));
  closure->add_flag("--reflexive", closure_o.reflexive, "Include the identity");
  closure->add_option("--out", closure_o.out, "Write closure JSON here instead of stdout");
  closure->add_flag("--no-heatmap", closure_o.no_heatmap, "Skip the ASCII heatmap");

  BlocksOptions blocks_o;
  auto* blocks = app.add_subcommand("blocks", "Jordan block partition of a DAG");
  blocks->add_option("--input", blocks_o.input, "Matrix file")->required();
  blocks->add_option("--out", blocks_o.out, "Partition JSON path");
  blocks->add_option("--dot", blocks_o.dot, "Clustered DOT path");
  blocks->add_flag("--heatmap", blocks_o.heatmap, "Print the block-ordered heatmap");

  AntichainOptions antichain_o;
  auto* antichain = app.add_subcommand("antichain", "Maximum antichain of the DAG order");
  antichain->add_option("--input", antichain_o.input, "Matrix file")->required();
  antichain->add_option("--out", antichain_o.out, "Antichain JSON path");
  antichain->add_option("--zeta-csv", antichain_o.zeta_csv, "Zeta matrix CSV path");
  antichain->add_option("--mobius-csv", antichain_o.mobius_csv, "Mobius matrix CSV path");

  QueryOptions query_o;
  auto* query = app.add_subcommand("query", "Forward or backward reachability from one node");
  query->add_option("--input", query_o.input, "Matrix file")->required();
  auto* fwd = query->add_option("--forward", query_o.forward, "Origin node (index or type:attr)");
  auto* bwd = query->add_option("--backward", query_o.backward, "Target node (index or type:attr)");
  fwd->excludes(bwd);
  query->add_option("--filter", query_o.filter, "type=<t>[,attr=<a>]");
  query->add_option("--out", query_o.out, "Query JSON path");

  ConnectorOptions connectors_o;
  auto* connectors = app.add_subcommand("connectors", "Cross-block connector edges");
  connectors->add_option("--input", connectors_o.input, "Matrix file")->required();
  connectors->add_option("--out", connectors_o.out, "Connector JSON path");

  ConnectorOptions what_if_o;
  auto* what_if_cmd = app.add_subcommand("what-if", "Closure with connectors disabled");
  what_if_cmd->add_option("--input", what_if_o.input, "Matrix file")->required();
  what_if_cmd->add_option("--disable", what_if_o.disable, "Connector ids, comma separated")
      ->required();
  what_if_cmd->add_option("--out", what_if_o.out, "Report JSON path");

  ScenarioOptions scenario_o;
  auto* scenario = app.add_subcommand("scenario", "Maze feasible-relation scenarios");
  scenario->require_subcommand(1);
  auto* analyze_cmd = scenario->add_subcommand("analyze", "Run the full analysis on a maze spec");
  analyze_cmd->add_option("--spec", scenario_o.spec, "Maze spec JSON")->required();
  analyze_cmd->add_option("--out", scenario_o.out, "Report JSON path");
  analyze_cmd->add_option("--dot", scenario_o.dot, "Clustered DOT path");
  analyze_cmd->add_flag("--heatmap", scenario_o.heatmap, "Print the closure heatmap");

  BenchOptions bench_o;
  auto* bench = app.add_subcommand("bench", "Planner benchmarks");
  bench->require_subcommand(1);
  auto* mdp = bench->add_subcommand("mdp", "Flat vs partitioned forward planning");
  mdp->add_option("--n", bench_o.cfg.n, "States")->check(CLI::PositiveNumber);
  mdp->add_option("--m", bench_o.cfg.m, "Actions")->check(CLI::PositiveNumber);
  mdp->add_option("--p", bench_o.cfg.p, "Blocks")->check(CLI::PositiveNumber);
  mdp->add_option("--mbar", bench_o.cfg.mbar, "Inter-block actions");
  mdp->add_option("--c", bench_o.cfg.c, "Connectors");
  mdp->add_option("--epsilon", bench_o.cfg.epsilon, "Recompute fraction")
      ->check(CLI::Range(0.0, 1.0));
  mdp->add_option("--horizon", bench_o.cfg.horizon, "Planning steps");
  mdp->add_option("--seed", bench_o.cfg.seed, "First seed")->required();
  mdp->add_option("--seeds", bench_o.seeds, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber);
  mdp->add_option("--csv", bench_o.csv, "CSV output path");

  std::string check_input;
  auto* check = app.add_subcommand("check", "Parse a matrix and verify it is acyclic");
  check->add_option("--input", check_input, "Matrix file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() + std::string("\n")
                                                           : app.help());
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (*query && query_o.forward.empty() && query_o.backward.empty()) {
    err << "usage error: query needs --forward or --backward\n";
    return 2;
  }

  try {
    if (*closure) return cmd_closure(closure_o, out);
    if (*blocks) return cmd_blocks(blocks_o, out);
    if (*antichain) return cmd_antichain(antichain_o, out);
    if (*query) return cmd_query(query_o, out);
    if (*connectors) return cmd_connectors(connectors_o, out);
    if (*what_if_cmd) return cmd_what_if(what_if_o, out);
    if (*analyze_cmd) return cmd_scenario_analyze(scenario_o, out);
    if (*mdp) return cmd_bench_mdp(bench_o, out);
    if (*check) return cmd_check(check_input, out);
  } catch (const Error& e) {
    err << "ERROR:" << error_code_name(e.code()) << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "ERROR:INTERNAL:" << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace relalg::cli
