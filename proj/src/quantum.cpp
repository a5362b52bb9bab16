#include "qcolor/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcolor/errors.hpp"

namespace qcolor {

ColoringRun quantum_adjacency_color(OracleHandle& oracle, std::size_t max_degree, std::uint64_t seed,
                                    QuantumSettings settings, RandomColorOptions options) {
  const std::size_t n = oracle.n();
  const std::size_t palette = max_degree + 1;
  Rng rng(seed);
  ColoringRun run{Coloring(n, static_cast<Color>(palette)), {}};
  run.trace.order.resize(n);
  std::iota(run.trace.order.begin(), run.trace.order.end(), Vertex{0});
  rng.shuffle(std::span<Vertex>(run.trace.order));
  run.trace.queries.assign(n, 0);
  run.trace.retries.assign(n, 0);
  const std::uint64_t cap = static_cast<std::uint64_t>(options.attempt_cap_factor) * palette;

  for (std::size_t t = 0; t < n; ++t) {
    const Vertex v = run.trace.order[t];
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt >= cap)
        throw AttemptCapExceeded("vertex " + std::to_string(v) + " rejected " + std::to_string(cap) +
                                 " candidate colors; the degree bound is likely below the true maximum degree");
      const Color c = static_cast<Color>(rng.below(palette) + 1);
      auto members = run.coloring.color_class(c);
      if (members.empty() || max_degree == 0) {
        run.coloring.assign(v, c);
        break;
      }
      auto inst = grover::adjacency_instance(oracle, v, members, settings.mode, settings.c0);
      auto verify = [&](std::size_t index) { return oracle.adjacency_query(members[index], v); };
      auto outcome = grover::search(inst, verify, rng, oracle);
      run.trace.queries[t] += outcome.quantum_queries_charged + outcome.classical_verifications;
      if (!outcome.found) {
        run.coloring.assign(v, c);
        break;
      }
      ++run.trace.retries[t];
    }
  }
  return run;
}

EquitablePartition make_equitable_partition(std::size_t n, std::size_t t, std::uint64_t seed) {
  if (t < 1 || t > n) throw ParameterError("make_equitable_partition: t must lie in [1, n]");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(std::span<Vertex>(perm));

  EquitablePartition partition;
  partition.t = t;
  partition.part_of.assign(n, 0);
  partition.parts.resize(t);
  const std::size_t base = n / t;
  const std::size_t larger = n % t;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t size = base + (i < larger ? 1 : 0);
    auto& part = partition.parts[i];
    part.assign(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                perm.begin() + static_cast<std::ptrdiff_t>(pos + size));
    std::sort(part.begin(), part.end());
    for (Vertex v : part) partition.part_of[v] = static_cast<std::uint32_t>(i);
    pos += size;
  }
  return partition;
}

QNConfig QNConfig::make(std::size_t n, std::size_t max_degree, double eps, QuantumSettings settings) {
  if (!(eps > 0.0)) throw ParameterError("QNConfig: eps must be positive");
  if (n < 1) throw ParameterError("QNConfig: n must be at least 1");
  QNConfig config;
  config.eps = eps;
  config.max_degree = max_degree;
  config.settings = settings;
  config.ln_n = std::max(std::log(static_cast<double>(n)), 1.0);
  const double raw_t = eps * eps * static_cast<double>(max_degree) / (6.0 * config.ln_n);
  config.t = std::clamp<std::size_t>(static_cast<std::size_t>(std::floor(raw_t)), 1, n);
  config.degree_bound = (1.0 + eps) * static_cast<double>(max_degree) / static_cast<double>(config.t);
  config.palette_size = static_cast<std::size_t>(std::floor(config.degree_bound)) + 1;
  return config;
}

std::size_t QNConfig::k_cap(std::size_t degree) const {
  return std::min(static_cast<std::size_t>(std::ceil(degree_bound)), degree);
}

std::uint64_t QNConfig::repetitions(std::size_t k) const {
  const double kd = static_cast<double>(k);
  const double log_k = k > 0 ? std::max(std::log(kd), 1.0) : 1.0;
  const double loglog_n = std::max(std::log(ln_n), 1.0);
  return static_cast<std::uint64_t>(std::ceil(8.0 * kd * log_k * ln_n / loglog_n));
}

std::vector<Vertex> grover_neighbors(OracleHandle& oracle, Vertex v, const QNConfig& config,
                                     const EquitablePartition& partition, Rng& rng, GroverNeighborsStats* stats) {
  std::vector<Vertex> found;
  const std::size_t d = oracle.degree_query(v);
  if (d == 0) return found;
  const std::uint32_t part = partition.part_of[v];
  auto same_part = [&](Vertex u) { return partition.part_of[u] == part; };

  const std::size_t k = config.k_cap(d);
  const std::uint64_t reps = config.repetitions(k);
  auto inst = grover::neighborhood_instance(oracle, v, d, same_part, config.settings.mode, config.settings.c0);

  std::vector<char> have(d, 0);
  Vertex last = 0;
  auto verify = [&](std::size_t index) {
    last = *oracle.neighbor_query(v, index + 1);
    return same_part(last);
  };
  // The listing's inner loop is a single pass of the m-schedule; failures are
  // absorbed by the outer repetitions.
  const grover::BbhtOptions one_pass{1};
  std::uint64_t rep = 0;
  for (; rep < reps; ++rep) {
    auto outcome = grover::search(inst, verify, rng, oracle, one_pass);
    if (outcome.found) {
      if (stats) ++stats->searches_found;
      if (!have[*outcome.found]) {
        have[*outcome.found] = 1;
        found.push_back(last);
      }
    }
    if (config.early_exit && found.size() == d) {
      ++rep;
      break;
    }
  }
  if (stats) stats->repetitions += rep;
  return found;
}

nlohmann::json to_json(const QNReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) failures.push_back({{"vertex", f.vertex}, {"part", f.part}});
  return nlohmann::json{{"t", report.t},
                        {"palette_size", report.palette_size},
                        {"colors_used", report.colors_used},
                        {"failures", failures},
                        {"per_part_max_indegree", report.per_part_max_indegree}};
}

QNRun quantum_neighborhood_color(OracleHandle& oracle, std::size_t max_degree, double eps, std::uint64_t seed,
                                 QuantumSettings settings, bool early_exit) {
  const std::size_t n = oracle.n();
  QNConfig config = QNConfig::make(n, max_degree, eps, settings);
  config.early_exit = early_exit;
  auto partition = make_equitable_partition(n, config.t, mix_seed({seed, hash_id("partition")}));
  Rng rng(mix_seed({seed, hash_id("grover-neighbors")}));

  const std::size_t s = config.palette_size;
  const auto overflow_color = static_cast<Color>(config.total_colors() + 1);
  QNRun run{Coloring(n, overflow_color), {}, config};
  run.report.t = config.t;
  run.report.palette_size = s;
  run.report.per_part_max_indegree.assign(config.t, 0);

  std::vector<std::size_t> stamp(s + 1, n);
  for (std::size_t i = 0; i < config.t; ++i) {
    const auto base = static_cast<Color>(i * s);
    for (Vertex v : partition.parts[i]) {
      auto in_part = grover_neighbors(oracle, v, config, partition, rng);
      auto& max_in = run.report.per_part_max_indegree[i];
      max_in = std::max(max_in, in_part.size());
      for (Vertex u : in_part) {
        const Color c = run.coloring.color(u);
        if (c > base && c <= base + s) stamp[c - base] = v;
      }
      std::size_t local = 1;
      while (local <= s && stamp[local] == v) ++local;
      if (local > s) {
        run.report.failures.push_back({v, i});
        run.coloring.assign(v, overflow_color);
      } else {
        run.coloring.assign(v, base + static_cast<Color>(local));
      }
    }
  }
  run.report.colors_used = run.coloring.colors_used();
  return run;
}

}  // namespace qcolor
