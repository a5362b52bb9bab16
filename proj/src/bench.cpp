#include "qcolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "qcolor/classical.hpp"
#include "qcolor/coloring.hpp"
#include "qcolor/combiner.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/oracle.hpp"
#include "qcolor/quantum.hpp"
#include "qcolor/rng.hpp"

namespace qcolor::bench {

namespace {

struct AlgorithmName {
  Algorithm algo;
  std::string_view id;
};

constexpr AlgorithmName kAlgorithms[] = {
    {Algorithm::greedy, "greedy"},
    {Algorithm::alg1, "alg1"},
    {Algorithm::boosted, "boosted"},
    {Algorithm::morris_song, "morris-song"},
    {Algorithm::ordered_gnp, "ordered-gnp"},
    {Algorithm::qadj, "qadj"},
    {Algorithm::qnbr, "qnbr"},
    {Algorithm::combined_classical, "combined-classical"},
    {Algorithm::combined_qdp1, "combined-qdp1"},
    {Algorithm::combined_qeps, "combined-qeps"},
};

bool is_quantum(Algorithm algo) {
  return algo == Algorithm::qadj || algo == Algorithm::qnbr || algo == Algorithm::combined_qdp1 ||
         algo == Algorithm::combined_qeps;
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

FamilyKind parse_family_kind(std::string_view id) {
  if (id == "edgeless") return FamilyKind::edgeless;
  if (id == "clique") return FamilyKind::clique;
  if (id == "cycle") return FamilyKind::cycle;
  if (id == "gnp") return FamilyKind::gnp;
  if (id == "near_regular") return FamilyKind::near_regular;
  throw ConfigError("unknown graph family '" + std::string(id) + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::edgeless: return "edgeless";
    case FamilyKind::clique: return "clique";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::gnp: return "gnp";
    case FamilyKind::near_regular: return "near_regular";
  }
  return "gnp";
}

double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace

std::string_view to_string(Algorithm algo) noexcept {
  for (const auto& entry : kAlgorithms)
    if (entry.algo == algo) return entry.id;
  return "greedy";
}

Algorithm parse_algorithm(std::string_view id) {
  for (const auto& entry : kAlgorithms)
    if (entry.id == id) return entry.algo;
  throw ConfigError("unknown algorithm id '" + std::string(id) + "'");
}

std::string_view to_string(grover::SearchMode mode) noexcept {
  return mode == grover::SearchMode::dynamics ? "dynamics" : "cost-model";
}

grover::SearchMode parse_mode(std::string_view id) {
  if (id == "dynamics") return grover::SearchMode::dynamics;
  if (id == "cost-model") return grover::SearchMode::cost_model;
  throw ConfigError("unknown mode '" + std::string(id) + "', expected dynamics or cost-model");
}

bool is_las_vegas(Algorithm algo, grover::SearchMode mode) noexcept {
  switch (algo) {
    case Algorithm::greedy:
    case Algorithm::alg1:
    case Algorithm::morris_song:
    case Algorithm::combined_classical:
      return true;
    case Algorithm::qadj:
    case Algorithm::combined_qdp1:
      return mode == grover::SearchMode::cost_model;
    default:
      return false;
  }
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (n_values.empty()) throw ConfigError("n list is empty");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1) throw ConfigError("n values must be positive");
    if (i > 0 && n_values[i] <= n_values[i - 1]) throw ConfigError("n list must be strictly increasing");
  }
  if (!(eps > 0.0)) throw ConfigError("eps must be positive");
  if (!(c0 > 0.0)) throw ConfigError("c0 must be positive");
  if (threads < 1) throw ConfigError("threads must be at least 1");
  if (!family.degree_law.empty() && family.degree_law != "sqrt_n_ln_n" && family.degree_law != "crossover")
    throw ConfigError("unknown degree law '" + family.degree_law + "'");
  if (family.degree_law == "crossover" && algorithm != Algorithm::combined_classical &&
      algorithm != Algorithm::combined_qdp1 && algorithm != Algorithm::combined_qeps)
    throw ConfigError("degree law 'crossover' needs a combined algorithm");
  const bool has_degree = family.degree.has_value() || !family.degree_law.empty();
  if (family.kind == FamilyKind::gnp) {
    if (family.p.has_value() == has_degree) throw ConfigError("gnp family needs exactly one of p or a degree");
    if (family.p && !(*family.p >= 0.0 && *family.p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
  }
  if (family.kind == FamilyKind::near_regular && !has_degree)
    throw ConfigError("near_regular family needs a degree");
  if (algorithm == Algorithm::ordered_gnp && family.kind != FamilyKind::gnp)
    throw ConfigError("ordered-gnp runs on the gnp family only");
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  try {
    ExperimentConfig c;
    c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    const auto& fam = j.at("family");
    c.family.kind = parse_family_kind(fam.at("kind").get<std::string>());
    if (fam.contains("p")) c.family.p = fam.at("p").get<double>();
    if (fam.contains("degree")) {
      const auto& d = fam.at("degree");
      if (d.is_string())
        c.family.degree_law = d.get<std::string>();
      else
        c.family.degree = d.get<double>();
    }
    c.n_values = j.at("n").get<std::vector<std::size_t>>();
    c.eps = j.value("eps", c.eps);
    c.mode = parse_mode(j.value("mode", std::string(to_string(c.mode))));
    c.c0 = j.value("c0", c.c0);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.rounds = j.value("rounds", c.rounds);
    c.budget = j.value("budget", c.budget);
    c.early_exit = j.value("early_exit", c.early_exit);
    c.threads = j.value("threads", c.threads);
    c.timing = j.value("timing", c.timing);
    c.output = j.value("output", c.output);
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json fam{{"kind", std::string(to_string(c.family.kind))}};
  if (c.family.p) fam["p"] = *c.family.p;
  if (c.family.degree) fam["degree"] = *c.family.degree;
  if (!c.family.degree_law.empty()) fam["degree"] = c.family.degree_law;
  return nlohmann::json{{"algorithm", std::string(to_string(c.algorithm))},
                        {"family", fam},
                        {"n", c.n_values},
                        {"eps", c.eps},
                        {"mode", std::string(to_string(c.mode))},
                        {"c0", c.c0},
                        {"trials", c.trials},
                        {"seed", c.seed},
                        {"rounds", c.rounds},
                        {"budget", c.budget},
                        {"early_exit", c.early_exit},
                        {"threads", c.threads},
                        {"timing", c.timing},
                        {"output", c.output}};
}

std::optional<double> family_degree(const ExperimentConfig& config, std::size_t n) {
  const auto& fam = config.family;
  if (fam.degree) return *fam.degree;
  const double nd = static_cast<double>(n);
  if (fam.degree_law == "sqrt_n_ln_n") return std::sqrt(nd * std::log(nd));
  if (fam.degree_law == "crossover") {
    CostModel model = config.algorithm == Algorithm::combined_classical ? CostModel::classical()
                      : config.algorithm == Algorithm::combined_qdp1    ? CostModel::quantum_dp1()
                                                                        : CostModel::quantum_eps();
    return static_cast<double>(crossover(model, n, config.eps));
  }
  return std::nullopt;
}

Graph make_graph(const ExperimentConfig& config, std::size_t n, std::uint64_t seed) {
  GraphOptions options;
  if (config.algorithm == Algorithm::ordered_gnp) options.order = NeighborOrder::ascending;
  switch (config.family.kind) {
    case FamilyKind::edgeless: return gen_edgeless(n);
    case FamilyKind::clique: return gen_clique(n, options, seed);
    case FamilyKind::cycle: return gen_cycle(n, options, seed);
    case FamilyKind::gnp: {
      double p = config.family.p ? *config.family.p : *family_degree(config, n) / static_cast<double>(n);
      return gen_gnp(n, std::clamp(p, 0.0, 1.0), seed, options);
    }
    case FamilyKind::near_regular: {
      const double d = std::max(0.0, std::round(*family_degree(config, n)));
      return gen_near_regular(n, std::min(static_cast<std::size_t>(d), n - 1), seed, options);
    }
  }
  throw ConfigError("unknown graph family");
}

std::uint64_t graph_seed(const ExperimentConfig& config, std::size_t n, std::size_t trial) noexcept {
  return mix_seed({config.seed, n, trial});
}

std::uint64_t run_seed(const ExperimentConfig& config, std::size_t n, std::size_t trial) noexcept {
  return mix_seed({config.seed, n, trial, hash_id(to_string(config.algorithm))});
}

AlgorithmRun run_algorithm(const ExperimentConfig& config, const Graph& graph, std::uint64_t seed) {
  const std::size_t n = graph.n();
  const QuantumSettings settings{config.mode, config.c0};
  OracleHandle oracle(graph);
  AlgorithmRun out;
  auto take_combined = [&](CombinedRun run) {
    out.colors_bound = run.palette_bound;
    out.branch = to_string(run.branch);
    out.neighborhood_report = std::move(run.neighborhood_report);
    out.coloring = std::move(run.coloring);
  };
  switch (config.algorithm) {
    case Algorithm::greedy: {
      out.coloring = greedy_color(oracle);
      out.colors_bound = out.coloring->palette_bound();
      break;
    }
    case Algorithm::alg1: {
      const std::size_t d = oracle.estimate_max_degree();
      out.coloring = delta_plus_one_color(oracle, d, seed).coloring;
      out.colors_bound = d + 1;
      break;
    }
    case Algorithm::boosted: {
      const std::size_t d = oracle.estimate_max_degree();
      const double nd = static_cast<double>(n);
      const std::uint64_t budget =
          config.budget > 0 ? config.budget
                            : static_cast<std::uint64_t>(std::ceil(2.0 * nd * nd * harmonic(n) / static_cast<double>(d + 1)));
      auto report = boosted_color(oracle, d, seed, config.rounds, budget);
      out.colors_bound = d + 1;
      out.coloring = std::move(report.coloring);
      break;
    }
    case Algorithm::morris_song: {
      const std::size_t d = oracle.estimate_max_degree();
      out.coloring = morris_song_color(oracle, d, config.eps, seed).coloring;
      out.colors_bound = morris_song_palette(d, config.eps);
      break;
    }
    case Algorithm::ordered_gnp: {
      const double p = config.family.p ? *config.family.p
                                       : family_degree(config, n).value_or(0.0) / static_cast<double>(n);
      auto result = ordered_gnp_color(oracle, std::clamp(p, 0.0, 1.0), config.eps);
      out.colors_bound = result.coloring.palette_bound();
      out.coloring = std::move(result.coloring);
      break;
    }
    case Algorithm::qadj: {
      const std::size_t d = oracle.estimate_max_degree();
      out.coloring = quantum_adjacency_color(oracle, d, seed, settings).coloring;
      out.colors_bound = d + 1;
      break;
    }
    case Algorithm::qnbr: {
      const std::size_t d = oracle.estimate_max_degree();
      auto run = quantum_neighborhood_color(oracle, d, config.eps, seed, settings, config.early_exit);
      out.colors_bound = run.config.total_colors();
      out.neighborhood_report = std::move(run.report);
      out.coloring = std::move(run.coloring);
      break;
    }
    case Algorithm::combined_classical:
      take_combined(combined_classical(oracle, seed));
      break;
    case Algorithm::combined_qdp1:
      take_combined(combined_quantum_dp1(oracle, seed, settings));
      break;
    case Algorithm::combined_qeps:
      take_combined(combined_quantum_eps(oracle, config.eps, seed, settings, CostModel::quantum_eps(),
                                         config.early_exit));
      break;
  }
  out.ledger = oracle.ledger();
  return out;
}

ExperimentRecord run_trial(const ExperimentConfig& config, std::size_t n, std::size_t trial) {
  const Graph graph = make_graph(config, n, graph_seed(config, n, trial));
  const std::uint64_t seed = run_seed(config, n, trial);
  const auto start = std::chrono::steady_clock::now();
  AlgorithmRun run = run_algorithm(config, graph, seed);
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRecord rec;
  rec.algo = std::string(to_string(config.algorithm));
  rec.mode = is_quantum(config.algorithm) ? std::string(to_string(config.mode)) : "classical";
  rec.n = n;
  rec.m = graph.edge_count();
  rec.max_degree = graph.max_degree();
  rec.eps = config.eps;
  rec.seed = seed;
  rec.trial = trial;
  rec.colors_bound = run.colors_bound;
  if (run.coloring) {
    const auto report = verify_coloring(graph, *run.coloring, run.colors_bound);
    rec.colors_used = report.colors_used;
    rec.proper = report.ok();
  }
  const QueryLedger& ledger = run.ledger;
  rec.q_adj = ledger.adj_classical;
  rec.q_deg = ledger.deg_classical;
  rec.q_nbr = ledger.nbr_classical;
  rec.qq_adj = ledger.adj_quantum;
  rec.qq_nbr = ledger.nbr_quantum;
  rec.total_queries = ledger.total();
  if (config.timing) rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  struct Point {
    std::size_t n, trial;
  };
  std::vector<Point> points;
  for (std::size_t n : config.n_values)
    for (std::size_t trial = 0; trial < config.trials; ++trial) points.push_back({n, trial});

  std::vector<ExperimentRecord> records(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        records[i] = run_trial(config, points[i].n, points[i].trial);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = points.size();
      }
    }
  };
  const std::size_t workers = std::min(config.threads, points.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  const grover::SearchMode mode = config.mode;
  for (const auto& rec : records)
    if (!rec.proper && is_las_vegas(config.algorithm, mode))
      throw InvariantViolation(rec.algo + " produced an improper coloring at n=" + std::to_string(rec.n) +
                               " trial=" + std::to_string(rec.trial));
  return records;
}

std::string_view csv_header() noexcept {
  return "algo,mode,n,m,delta,eps,seed,trial,colors_bound,colors_used,proper,q_adj,q_deg,q_nbr,qq_adj,qq_nbr,"
         "total_queries,wall_ms";
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << csv_header() << '\n';
  for (const auto& r : records) {
    out << r.algo << ',' << r.mode << ',' << r.n << ',' << r.m << ',' << r.max_degree << ',' << format_double(r.eps)
        << ',' << r.seed << ',' << r.trial << ',' << r.colors_bound << ',' << r.colors_used << ','
        << (r.proper ? 1 : 0) << ',' << r.q_adj << ',' << r.q_deg << ',' << r.q_nbr << ',' << r.qq_adj << ','
        << r.qq_nbr << ',' << r.total_queries << ',' << format_double(r.wall_ms) << '\n';
  }
}

namespace {

template <typename T>
T parse_field(const std::string& field, std::size_t line_no) {
  T value{};
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw ParseError(line_no, "bad CSV field '" + field + "'");
  return value;
}

}  // namespace

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header()) throw ParseError(1, "unexpected CSV header");
  std::vector<ExperimentRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 18) throw ParseError(line_no, "expected 18 CSV fields");
    ExperimentRecord r;
    r.algo = f[0];
    r.mode = f[1];
    r.n = parse_field<std::size_t>(f[2], line_no);
    r.m = parse_field<std::size_t>(f[3], line_no);
    r.max_degree = parse_field<std::size_t>(f[4], line_no);
    r.eps = parse_field<double>(f[5], line_no);
    r.seed = parse_field<std::uint64_t>(f[6], line_no);
    r.trial = parse_field<std::size_t>(f[7], line_no);
    r.colors_bound = parse_field<std::size_t>(f[8], line_no);
    r.colors_used = parse_field<std::size_t>(f[9], line_no);
    r.proper = parse_field<int>(f[10], line_no) != 0;
    r.q_adj = parse_field<std::uint64_t>(f[11], line_no);
    r.q_deg = parse_field<std::uint64_t>(f[12], line_no);
    r.q_nbr = parse_field<std::uint64_t>(f[13], line_no);
    r.qq_adj = parse_field<std::uint64_t>(f[14], line_no);
    r.qq_nbr = parse_field<std::uint64_t>(f[15], line_no);
    r.total_queries = parse_field<std::uint64_t>(f[16], line_no);
    r.wall_ms = parse_field<double>(f[17], line_no);
    records.push_back(std::move(r));
  }
  return records;
}

ScalingFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("least_squares: need two or more points");
  const double count = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ParameterError("least_squares: x values are all equal");
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  fit.points = x.size();
  return fit;
}

double metric_value(const ExperimentRecord& r, std::string_view metric) {
  if (metric == "total_queries") return static_cast<double>(r.total_queries);
  if (metric == "q_adj") return static_cast<double>(r.q_adj);
  if (metric == "q_deg") return static_cast<double>(r.q_deg);
  if (metric == "q_nbr") return static_cast<double>(r.q_nbr);
  if (metric == "qq_adj") return static_cast<double>(r.qq_adj);
  if (metric == "qq_nbr") return static_cast<double>(r.qq_nbr);
  if (metric == "colors_used") return static_cast<double>(r.colors_used);
  if (metric == "wall_ms") return r.wall_ms;
  throw ConfigError("unknown metric '" + std::string(metric) + "'");
}

ScalingFit fit_loglog(std::span<const ExperimentRecord> records, std::string_view metric) {
  std::map<std::size_t, std::pair<double, std::size_t>> sums;
  for (const auto& r : records) {
    auto& [sum, count] = sums[r.n];
    sum += metric_value(r, metric);
    ++count;
  }
  if (sums.size() < 3) throw ParameterError("fit_loglog: need at least 3 distinct n values");
  std::vector<double> x, y;
  for (const auto& [n, acc] : sums) {
    const double mean = acc.first / static_cast<double>(acc.second);
    if (!(mean > 0.0)) throw ParameterError("fit_loglog: mean metric must be positive at n=" + std::to_string(n));
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(std::log(mean));
  }
  return least_squares(x, y);
}

std::map<std::string, ScalingFit> fit_loglog_grouped(std::span<const ExperimentRecord> records,
                                                     std::string_view metric) {
  std::map<std::string, std::vector<ExperimentRecord>> groups;
  for (const auto& r : records) groups[r.algo + "/" + r.mode + "/" + format_double(r.eps)].push_back(r);
  std::map<std::string, ScalingFit> fits;
  for (const auto& [key, group] : groups) fits[key] = fit_loglog(group, metric);
  return fits;
}

}  // namespace qcolor::bench
