#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace qcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class NeighborOrder {
  seeded_random,  ///< each list is a seed-derived permutation of the neighbors
  ascending,      ///< each list sorted by vertex id
};

inline constexpr std::size_t kDefaultMatrixThreshold = 16384;

struct GraphOptions {
  NeighborOrder order = NeighborOrder::seeded_random;
  /// Graphs with n at or below this use a bit-packed adjacency matrix for
  /// membership tests; larger graphs binary-search sorted adjacency lists.
  std::size_t matrix_threshold = kDefaultMatrixThreshold;
};

/// Simple undirected graph on vertices 0..n-1 with a fixed neighbor order per
/// vertex. Immutable after construction.
class Graph {
 public:
  /// Builds a graph whose neighbor lists follow the order in which edges
  /// appear in `edges`. Throws ParameterError on self-loops, duplicates or
  /// out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::size_t matrix_threshold = kDefaultMatrixThreshold);

  /// Builds a graph from explicit neighbor lists (validated for symmetry).
  static Graph from_neighbor_lists(std::vector<std::vector<Vertex>> lists,
                                   std::size_t matrix_threshold = kDefaultMatrixThreshold);

  std::size_t n() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// The fixed neighbor sequence of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }

  bool adjacent(Vertex u, Vertex v) const;
  bool uses_matrix() const noexcept { return !matrix_.empty() || n() <= 1; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> canonical_edges() const;

 private:
  Graph() = default;
  void build_index(std::size_t matrix_threshold);

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::size_t max_degree_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> matrix_;
  std::vector<Vertex> sorted_targets_;
};

/// Erdos-Renyi G(n, p): every pair is an edge independently with probability p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed, GraphOptions options = {});
Graph gen_clique(std::size_t n, GraphOptions options = {}, std::uint64_t order_seed = 0);
Graph gen_cycle(std::size_t n, GraphOptions options = {}, std::uint64_t order_seed = 0);
Graph gen_edgeless(std::size_t n);
/// Union of `degree` uniformly random perfect matchings (duplicates dropped),
/// so every vertex has degree at most `degree` and most have exactly that.
Graph gen_near_regular(std::size_t n, std::size_t degree, std::uint64_t seed,
                       GraphOptions options = {});

/// Edge-list text format: header "n m", then m lines "u v" with u < v.
/// Neighbor order of the loaded graph is the order of appearance in the file.
Graph load_edge_list(std::istream& in, std::size_t matrix_threshold = kDefaultMatrixThreshold);
void save_edge_list(const Graph& graph, std::ostream& out);

}  // namespace qcolor
