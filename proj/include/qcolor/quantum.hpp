#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qcolor/classical.hpp"
#include "qcolor/coloring.hpp"
#include "qcolor/grover.hpp"
#include "qcolor/oracle.hpp"
#include "qcolor/rng.hpp"

namespace qcolor {

struct QuantumSettings {
  grover::SearchMode mode = grover::SearchMode::cost_model;
  double c0 = grover::kDefaultCostConstant;
};

/// (Δ+1)-coloring with the same control flow as delta_plus_one_color, where
/// each color-class check is one Grover search with the adjacency oracle.
/// Always proper in cost-model mode; in dynamics mode a missed neighbor can
/// leave a monochromatic edge.
ColoringRun quantum_adjacency_color(OracleHandle& oracle, std::size_t max_degree, std::uint64_t seed,
                                    QuantumSettings settings = {}, RandomColorOptions options = {});

/// Partition of 0..n-1 into parts whose sizes differ by at most one.
/// Part ids are 0-based; each part lists its vertices in ascending order.
struct EquitablePartition {
  std::size_t t = 0;
  std::vector<std::uint32_t> part_of;
  std::vector<std::vector<Vertex>> parts;
};

/// Uniformly random equitable partition (shuffle, then slice).
EquitablePartition make_equitable_partition(std::size_t n, std::size_t t, std::uint64_t seed);

/// Parameters of the partition-based (1+ε)Δ-coloring.
struct QNConfig {
  double eps = 0.5;
  std::size_t max_degree = 0;
  std::size_t t = 1;             ///< max(1, floor(eps^2 Δ / (6 ln n)))
  double degree_bound = 0.0;     ///< (1+eps) Δ / t, the in-part degree bound
  std::size_t palette_size = 1;  ///< floor(degree_bound) + 1 colors per part
  double ln_n = 1.0;             ///< max(ln n, 1)
  QuantumSettings settings;
  /// Stop collecting once every neighbor of v has been found. Off by default:
  /// the repetition count is then fixed, as in the query bound.
  bool early_exit = false;

  static QNConfig make(std::size_t n, std::size_t max_degree, double eps, QuantumSettings settings = {});

  /// min(ceil(degree_bound), degree)
  std::size_t k_cap(std::size_t degree) const;
  /// ceil(8 k max(ln k, 1) ln n / max(ln ln n, 1))
  std::uint64_t repetitions(std::size_t k) const;
  std::size_t total_colors() const noexcept { return t * palette_size; }
};

struct GroverNeighborsStats {
  std::uint64_t repetitions = 0;
  std::uint64_t searches_found = 0;
};

/// Collects the neighbors of v that share its part: one degree query, then
/// config.repetitions(k_cap) BBHT searches over v's neighbor indices with
/// the partition reflection as the marking, each hit confirmed by one
/// classical neighbor query. The result only contains true in-part neighbors.
std::vector<Vertex> grover_neighbors(OracleHandle& oracle, Vertex v, const QNConfig& config,
                                     const EquitablePartition& partition, Rng& rng,
                                     GroverNeighborsStats* stats = nullptr);

struct QNFailure {
  Vertex vertex;
  std::size_t part;
};

struct QNReport {
  std::size_t t = 0;
  std::size_t palette_size = 0;
  std::size_t colors_used = 0;
  std::vector<QNFailure> failures;
  std::vector<std::size_t> per_part_max_indegree;
};

/// {"t":..,"palette_size":..,"colors_used":..,"failures":[{"vertex":..,"part":..}],"per_part_max_indegree":[..]}
nlohmann::json to_json(const QNReport& report);

struct QNRun {
  Coloring coloring;
  QNReport report;
  QNConfig config;
};

/// (1+ε)Δ-coloring by random equitable partition: each part gets a disjoint
/// palette and is colored greedily from the in-part neighborhoods found by
/// grover_neighbors. A vertex with no free palette color gets the overflow
/// color t*s+1, recorded in report.failures. The palette bound of the
/// returned coloring includes the overflow color; verify against t*s.
QNRun quantum_neighborhood_color(OracleHandle& oracle, std::size_t max_degree, double eps, std::uint64_t seed,
                                 QuantumSettings settings = {}, bool early_exit = false);

}  // namespace qcolor
