#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcolor/bench.hpp"
#include "qcolor/coloring.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/graph.hpp"

namespace {

using namespace qcolor;
using nlohmann::json;

struct CliError : std::runtime_error {
  CliError(std::string kind, const std::string& what) : std::runtime_error(what), kind(std::move(kind)) {}
  std::string kind;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("io", "cannot open '" + path + "' for reading");
  return in;
}

// Writes to `path`, or to stdout when the path is empty or "-".
template <typename Fn>
void write_out(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError("io", "cannot open '" + path + "' for writing");
  fn(out);
  if (!out) throw CliError("io", "write to '" + path + "' failed");
}

struct GraphSource {
  std::string in;
  std::string family;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<double> degree;
  std::string order = "random";
  std::uint64_t seed = 1;
};

void add_graph_flags(CLI::App* cmd, GraphSource& src, bool allow_file) {
  if (allow_file) cmd->add_option("--in", src.in, "edge-list file to load");
  cmd->add_option("--family", src.family, "generated family")
      ->check(CLI::IsMember({"edgeless", "clique", "cycle", "gnp", "near_regular"}));
  cmd->add_option("--n", src.n, "vertex count")->check(CLI::PositiveNumber);
  cmd->add_option("--p", src.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--degree", src.degree, "target degree (gnp: p = degree/n)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--order", src.order, "neighbor order of generated graphs")
      ->check(CLI::IsMember({"random", "ascending"}));
}

Graph build_graph(const GraphSource& src, bool force_ascending) {
  if (!src.in.empty()) {
    if (!src.family.empty()) throw CliError("usage", "--in and --family are mutually exclusive");
    auto in = open_in(src.in);
    return load_edge_list(in);
  }
  if (src.family.empty()) throw CliError("usage", "one of --in or --family is required");
  if (src.n == 0) throw CliError("usage", "--n is required with --family");
  GraphOptions options;
  if (force_ascending || src.order == "ascending") options.order = NeighborOrder::ascending;
  const std::size_t n = src.n;
  if (src.family == "edgeless") return gen_edgeless(n);
  if (src.family == "clique") return gen_clique(n, options, src.seed);
  if (src.family == "cycle") return gen_cycle(n, options, src.seed);
  if (src.family == "gnp") {
    if (src.p.has_value() == src.degree.has_value()) throw CliError("usage", "gnp needs exactly one of --p or --degree");
    const double p = src.p ? *src.p : std::min(1.0, *src.degree / static_cast<double>(n));
    return gen_gnp(n, p, src.seed, options);
  }
  if (!src.degree) throw CliError("usage", "near_regular needs --degree");
  return gen_near_regular(n, static_cast<std::size_t>(*src.degree), src.seed, options);
}

int cmd_gen(const GraphSource& src, const std::string& out_path) {
  const Graph g = build_graph(src, false);
  write_out(out_path, [&](std::ostream& out) { save_edge_list(g, out); });
  return 0;
}

struct ColorArgs {
  GraphSource src;
  std::string algo;
  std::string mode = "cost-model";
  double eps = 0.5;
  double c0 = grover::kDefaultCostConstant;
  std::size_t rounds = 10;
  std::uint64_t budget = 0;
  bool early_exit = false;
  std::string out;
  std::string report;
};

int cmd_color(const ColorArgs& a) {
  bench::ExperimentConfig config;
  config.algorithm = bench::parse_algorithm(a.algo);
  config.mode = bench::parse_mode(a.mode);
  config.eps = a.eps;
  config.c0 = a.c0;
  config.seed = a.src.seed;
  config.rounds = a.rounds;
  config.budget = a.budget;
  config.early_exit = a.early_exit;
  if (!(a.eps > 0.0)) throw CliError("usage", "--eps must be positive");
  if (!(a.c0 > 0.0)) throw CliError("usage", "--c0 must be positive");
  if (config.algorithm == bench::Algorithm::ordered_gnp) {
    if (!a.src.p) throw CliError("usage", "ordered-gnp needs --p");
    config.family.p = a.src.p;
  }
  const Graph g = build_graph(a.src, config.algorithm == bench::Algorithm::ordered_gnp);
  const bench::AlgorithmRun run = bench::run_algorithm(config, g, a.src.seed);
  if (!run.coloring) throw CliError("failure", "every boosting round exceeded the query budget");

  const VerifyReport check = verify_coloring(g, *run.coloring, run.colors_bound);
  write_out(a.out, [&](std::ostream& out) { save_coloring(*run.coloring, out); });

  json summary{{"algo", a.algo},
               {"n", g.n()},
               {"m", g.edge_count()},
               {"max_degree", g.max_degree()},
               {"colors_bound", run.colors_bound},
               {"colors_used", check.colors_used},
               {"proper", check.proper},
               {"within_bound", check.within_bound},
               {"queries", to_json(run.ledger)}};
  if (!run.branch.empty()) summary["branch"] = run.branch;
  if (run.neighborhood_report) summary["neighborhood"] = to_json(*run.neighborhood_report);
  if (!a.report.empty()) {
    write_out(a.report, [&](std::ostream& out) { out << summary.dump(2) << '\n'; });
  } else if (!a.out.empty() && a.out != "-") {
    std::cout << summary.dump() << '\n';
  }
  return 0;
}

int cmd_bench(const std::string& config_path, const std::string& out_override, std::size_t threads) {
  auto in = open_in(config_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  bench::ExperimentConfig config = bench::parse_config(j);
  if (threads > 0) config.threads = threads;
  if (!out_override.empty()) config.output = out_override;
  const auto records = bench::run_experiment(config);
  write_out(config.output, [&](std::ostream& out) { bench::write_csv(out, records); });
  return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& metric) {
  auto in = open_in(csv_path);
  const auto records = bench::read_csv(in);
  json result = json::object();
  for (const auto& [key, fit] : bench::fit_loglog_grouped(records, metric)) {
    result[key] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared},
                   {"points", fit.points}, {"metric", metric}};
  }
  std::cout << result.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, std::optional<std::size_t> bound) {
  auto gin = open_in(graph_path);
  const Graph g = load_edge_list(gin);
  auto cin = open_in(coloring_path);
  const Coloring c = load_coloring(cin);
  if (c.n() != g.n())
    throw CliError("mismatch", "coloring has " + std::to_string(c.n()) + " vertices, graph has " +
                                   std::to_string(g.n()));
  const std::size_t b = bound.value_or(c.palette_bound());
  const VerifyReport r = verify_coloring(g, c, b);
  if (!r.proper)
    throw CliError("improper", "edge (" + std::to_string(r.violation->first) + "," +
                                   std::to_string(r.violation->second) + ") is monochromatic");
  if (!r.within_bound)
    throw CliError("bound", "coloring uses " + std::to_string(r.colors_used) + " colors, bound is " +
                                std::to_string(b));
  std::cout << json{{"proper", true}, {"colors_used", r.colors_used}, {"bound", b}}.dump() << '\n';
  return 0;
}

int fail(const std::string& kind, const std::string& msg) {
  std::string line = msg;
  for (char& ch : line)
    if (ch == '\n') ch = ' ';
  std::cerr << "error: " << kind << ": " << line << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-model graph coloring: generators, algorithms, sweeps and scaling fits"};
  app.require_subcommand(1);

  GraphSource gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
  add_graph_flags(gen, gen_src, false);
  gen->add_option("--seed", gen_src.seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  ColorArgs color_args;
  auto* color = app.add_subcommand("color", "run one coloring algorithm and write the coloring file");
  add_graph_flags(color, color_args.src, true);
  color->add_option("--algo", color_args.algo, "algorithm id")
      ->required()
      ->check(CLI::IsMember({"greedy", "alg1", "boosted", "morris-song", "ordered-gnp", "qadj", "qnbr",
                             "combined-classical", "combined-qdp1", "combined-qeps"}));
  color->add_option("--mode", color_args.mode, "Grover simulation mode")
      ->check(CLI::IsMember({"cost-model", "dynamics"}));
  color->add_option("--eps", color_args.eps, "palette slack");
  color->add_option("--seed", color_args.src.seed, "seed for the graph generator and the algorithm");
  color->add_option("--c0", color_args.c0, "cost-model constant");
  color->add_option("--rounds", color_args.rounds, "boosting rounds");
  color->add_option("--budget", color_args.budget, "boosting per-round query budget (0: default)");
  color->add_flag("--early-exit", color_args.early_exit, "stop neighbor collection once all are found");
  color->add_option("--out", color_args.out, "coloring output path (default stdout)");
  color->add_option("--report", color_args.report, "JSON run summary path");

  std::string bench_config, bench_out;
  std::size_t bench_threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "run a sweep from a JSON config and write CSV");
  bench_cmd->add_option("--config", bench_config, "JSON experiment config")->required();
  bench_cmd->add_option("--out", bench_out, "CSV output path (overrides the config)");
  bench_cmd->add_option("--threads", bench_threads, "worker threads (overrides the config)");

  std::string fit_csv, fit_metric = "total_queries";
  auto* fit = app.add_subcommand("fit", "log-log slope of a metric against n, per algo/mode/eps group");
  fit->add_option("--csv", fit_csv, "CSV produced by bench")->required();
  fit->add_option("--metric", fit_metric, "record column to fit");

  std::string verify_graph, verify_coloring_path;
  std::optional<std::size_t> verify_bound;
  auto* verify = app.add_subcommand("verify", "check a coloring file against an edge list");
  verify->add_option("--graph", verify_graph, "edge-list file")->required();
  verify->add_option("--coloring", verify_coloring_path, "coloring file")->required();
  verify->add_option("--bound", verify_bound, "color bound (default: the file's palette bound)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << '\n';
    return fail("usage", e.what());
  }

  try {
    if (*gen) return cmd_gen(gen_src, gen_out);
    if (*color) return cmd_color(color_args);
    if (*bench_cmd) return cmd_bench(bench_config, bench_out, bench_threads);
    if (*fit) return cmd_fit(fit_csv, fit_metric);
    if (*verify) return cmd_verify(verify_graph, verify_coloring_path, verify_bound);
  } catch (const CliError& e) {
    return fail(e.kind, e.what());
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const ConfigError& e) {
    return fail("config", e.what());
  } catch (const ParameterError& e) {
    return fail("parameter", e.what());
  } catch (const IncompleteColoringError& e) {
    return fail("incomplete", e.what());
  } catch (const InvariantViolation& e) {
    return fail("invariant", e.what());
  } catch (const UsageError& e) {
    return fail("usage", e.what());
  } catch (const std::exception& e) {
    return fail("runtime", e.what());
  }
  return fail("usage", "no subcommand");
}
