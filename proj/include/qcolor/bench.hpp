#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qcolor/coloring.hpp"
#include "qcolor/graph.hpp"
#include "qcolor/grover.hpp"
#include "qcolor/oracle.hpp"
#include "qcolor/quantum.hpp"

namespace qcolor::bench {

enum class Algorithm {
  greedy,
  alg1,
  boosted,
  morris_song,
  ordered_gnp,
  qadj,
  qnbr,
  combined_classical,
  combined_qdp1,
  combined_qeps,
};

/// CLI spelling: greedy, alg1, boosted, morris-song, ordered-gnp, qadj, qnbr,
/// combined-classical, combined-qdp1, combined-qeps.
std::string_view to_string(Algorithm algo) noexcept;
Algorithm parse_algorithm(std::string_view id);

std::string_view to_string(grover::SearchMode mode) noexcept;
grover::SearchMode parse_mode(std::string_view id);

/// Algorithms that must never emit an improper coloring.
bool is_las_vegas(Algorithm algo, grover::SearchMode mode) noexcept;

enum class FamilyKind { edgeless, clique, cycle, gnp, near_regular };

/// Graph family. For gnp give either `p` or a degree (fixed `degree` or a
/// `degree_law`), in which case p = degree / n. near_regular needs a degree.
/// Degree laws: "sqrt_n_ln_n" (sqrt(n ln n)) and "crossover" (Δ* of the
/// configured combined algorithm's cost model).
struct FamilySpec {
  FamilyKind kind = FamilyKind::gnp;
  std::optional<double> p;
  std::optional<double> degree;
  std::string degree_law;
};

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::greedy;
  FamilySpec family;
  std::vector<std::size_t> n_values;
  double eps = 0.5;
  grover::SearchMode mode = grover::SearchMode::cost_model;
  double c0 = grover::kDefaultCostConstant;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t rounds = 10;   ///< boosted only
  std::uint64_t budget = 0;  ///< boosted only; 0 means 2 n^2 H_n / (Δ+1)
  bool early_exit = false;   ///< qnbr / combined-qeps
  std::size_t threads = 1;
  bool timing = false;       ///< when false wall_ms is written as 0
  std::string output;

  /// Throws ConfigError on trials < 1, an empty or non-increasing n list,
  /// or an incomplete family.
  void validate() const;
};

/// Parses the JSON form, e.g.
/// {"algorithm":"alg1","family":{"kind":"gnp","p":0.5},"n":[256,512],"trials":20,"seed":7}
ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& config);

struct ExperimentRecord {
  std::string algo;
  std::string mode;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::size_t colors_bound = 0;
  std::size_t colors_used = 0;
  bool proper = false;  ///< proper and within colors_bound
  std::uint64_t q_adj = 0;
  std::uint64_t q_deg = 0;
  std::uint64_t q_nbr = 0;
  std::uint64_t qq_adj = 0;
  std::uint64_t qq_nbr = 0;
  std::uint64_t total_queries = 0;
  double wall_ms = 0.0;

  bool operator==(const ExperimentRecord&) const = default;
};

/// Expected degree (gnp) or target degree (near_regular) at size n, if any.
std::optional<double> family_degree(const ExperimentConfig& config, std::size_t n);
Graph make_graph(const ExperimentConfig& config, std::size_t n, std::uint64_t seed);

std::uint64_t graph_seed(const ExperimentConfig& config, std::size_t n, std::size_t trial) noexcept;
std::uint64_t run_seed(const ExperimentConfig& config, std::size_t n, std::size_t trial) noexcept;

struct AlgorithmRun {
  std::optional<Coloring> coloring;  ///< empty when boosting exhausted its rounds
  std::size_t colors_bound = 0;
  QueryLedger ledger;
  std::optional<QNReport> neighborhood_report;
  std::string branch;  ///< "dense" or "sparse" for combined algorithms
};

/// Runs the configured algorithm once on `graph` through a fresh oracle.
AlgorithmRun run_algorithm(const ExperimentConfig& config, const Graph& graph, std::uint64_t seed);

/// One (n, trial) point: generate, color through a fresh oracle, verify.
ExperimentRecord run_trial(const ExperimentConfig& config, std::size_t n, std::size_t trial);

/// All points, sorted by (n, trial). Throws InvariantViolation if a Las Vegas
/// algorithm produced an improper record.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

std::string_view csv_header() noexcept;
void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
std::vector<ExperimentRecord> read_csv(std::istream& in);

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = intercept + slope * x.
ScalingFit least_squares(std::span<const double> x, std::span<const double> y);

/// Numeric value of a record column ("total_queries", "q_adj", "qq_nbr", ...).
double metric_value(const ExperimentRecord& record, std::string_view metric);

/// Least squares on (ln n, ln mean metric) over the per-n means. Needs at
/// least three distinct n values.
ScalingFit fit_loglog(std::span<const ExperimentRecord> records, std::string_view metric = "total_queries");

/// fit_loglog per "algo/mode/eps" group.
std::map<std::string, ScalingFit> fit_loglog_grouped(std::span<const ExperimentRecord> records,
                                                     std::string_view metric = "total_queries");

}  // namespace qcolor::bench
