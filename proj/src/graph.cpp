#include "qcolor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "qcolor/errors.hpp"
#include "qcolor/rng.hpp"

namespace qcolor {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void order_lists(std::vector<std::vector<Vertex>>& lists, NeighborOrder order, std::uint64_t seed) {
  if (order == NeighborOrder::ascending) {
    for (auto& list : lists) std::sort(list.begin(), list.end());
    return;
  }
  Rng rng(mix_seed({seed, hash_id("neighbor-order")}));
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    rng.shuffle(std::span<Vertex>(list));
  }
}

}  // namespace

Graph Graph::from_neighbor_lists(std::vector<std::vector<Vertex>> lists, std::size_t matrix_threshold) {
  Graph g;
  const std::size_t n = lists.size();
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + lists[v].size();
  if (g.offsets_[n] % 2 != 0) throw ParameterError("neighbor lists are not symmetric");
  g.targets_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : lists[v]) {
      if (u >= n) throw ParameterError("neighbor " + std::to_string(u) + " out of range");
      if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(v));
      g.targets_.push_back(u);
    }
    g.max_degree_ = std::max(g.max_degree_, lists[v].size());
  }
  g.build_index(matrix_threshold);

  // Duplicate and symmetry checks against the sorted index.
  for (std::size_t v = 0; v < n; ++v) {
    auto sorted = std::span<const Vertex>(g.sorted_targets_).subspan(g.offsets_[v], g.degree(v));
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParameterError("duplicate edge at vertex " + std::to_string(v));
  }
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
      if (!g.adjacent(u, static_cast<Vertex>(v)))
        throw ParameterError("neighbor lists are not symmetric");
  if (g.matrix_.empty()) return g;
  // The sorted index is only needed when there is no matrix.
  std::vector<Vertex>().swap(g.sorted_targets_);
  return g;
}

void Graph::build_index(std::size_t matrix_threshold) {
  const std::size_t count = n();
  sorted_targets_ = targets_;
  for (std::size_t v = 0; v < count; ++v)
    std::sort(sorted_targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              sorted_targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  if (count <= matrix_threshold && count > 0) {
    words_per_row_ = (count + 63) / 64;
    matrix_.assign(words_per_row_ * count, 0);
    for (std::size_t v = 0; v < count; ++v)
      for (Vertex u : neighbors(static_cast<Vertex>(v)))
        matrix_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!matrix_.empty()) return (matrix_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  if (n() <= 1) return false;
  auto first = sorted_targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
  auto last = sorted_targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
  return std::binary_search(first, last, v);
}

std::vector<Edge> Graph::canonical_edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (std::size_t v = 0; v < n(); ++v)
    for (Vertex u : neighbors(static_cast<Vertex>(v)))
      if (v < u) edges.emplace_back(static_cast<Vertex>(v), u);
  std::sort(edges.begin(), edges.end());
  return edges;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t matrix_threshold) {
  std::vector<std::vector<Vertex>> lists(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(pair_key(u, v)).second)
      throw ParameterError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  return from_neighbor_lists(std::move(lists), matrix_threshold);
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed, GraphOptions options) {
  if (n < 1) throw ParameterError("gen_gnp: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("gen_gnp: p must lie in [0, 1]");
  std::vector<std::vector<Vertex>> lists(n);
  Rng rng(mix_seed({seed, hash_id("gnp")}));
  if (p >= 1.0) {
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        if (u != v) lists[v].push_back(static_cast<Vertex>(u));
  } else if (p > 0.0) {
    // Geometric skipping over the pairs (w, v), w < v, in row-major order.
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto count = static_cast<std::int64_t>(n);
    while (v < count) {
      const double r = 1.0 - rng.uniform01();  // (0, 1]
      w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
      while (w >= v && v < count) {
        w -= v;
        ++v;
      }
      if (v < count) {
        lists[v].push_back(static_cast<Vertex>(w));
        lists[w].push_back(static_cast<Vertex>(v));
      }
    }
  }
  order_lists(lists, options.order, seed);
  return Graph::from_neighbor_lists(std::move(lists), options.matrix_threshold);
}

Graph gen_clique(std::size_t n, GraphOptions options, std::uint64_t order_seed) {
  if (n < 1) throw ParameterError("gen_clique: n must be at least 1");
  return gen_gnp(n, 1.0, order_seed, options);
}

Graph gen_cycle(std::size_t n, GraphOptions options, std::uint64_t order_seed) {
  if (n < 3) throw ParameterError("gen_cycle: n must be at least 3");
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t v = 0; v < n; ++v) {
    lists[v].push_back(static_cast<Vertex>((v + n - 1) % n));
    lists[v].push_back(static_cast<Vertex>((v + 1) % n));
  }
  order_lists(lists, options.order, order_seed);
  return Graph::from_neighbor_lists(std::move(lists), options.matrix_threshold);
}

Graph gen_edgeless(std::size_t n) {
  if (n < 1) throw ParameterError("gen_edgeless: n must be at least 1");
  return Graph::from_neighbor_lists(std::vector<std::vector<Vertex>>(n));
}

Graph gen_near_regular(std::size_t n, std::size_t degree, std::uint64_t seed, GraphOptions options) {
  if (n < 1) throw ParameterError("gen_near_regular: n must be at least 1");
  if (degree >= n && n > 1) throw ParameterError("gen_near_regular: degree must be below n");
  std::vector<std::vector<Vertex>> lists(n);
  std::unordered_set<std::uint64_t> seen;
  Rng rng(mix_seed({seed, hash_id("near-regular")}));
  std::vector<Vertex> perm(n);
  for (std::size_t round = 0; round < degree; ++round) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    rng.shuffle(std::span<Vertex>(perm));
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      Vertex u = perm[i];
      Vertex v = perm[i + 1];
      if (!seen.insert(pair_key(u, v)).second) continue;
      lists[u].push_back(v);
      lists[v].push_back(u);
    }
  }
  order_lists(lists, options.order, seed);
  return Graph::from_neighbor_lists(std::move(lists), options.matrix_threshold);
}

namespace {

bool parse_two(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ss(line);
  std::string x, y, extra;
  if (!(ss >> x >> y) || (ss >> extra)) return false;
  auto parse_uint = [](const std::string& s, std::uint64_t& out) {
    if (s.empty() || s.size() > 19) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    out = std::stoull(s);
    return true;
  };
  return parse_uint(x, a) && parse_uint(y, b);
}

}  // namespace

Graph load_edge_list(std::istream& in, std::size_t matrix_threshold) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"n m\"");
  ++line_no;
  std::uint64_t n = 0, m = 0;
  if (!parse_two(line, n, m)) throw ParseError(line_no, "malformed header, expected \"n m\"");
  if (n < 1 || n > 0xffffffffULL) throw ParseError(line_no, "vertex count out of range");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
  std::unordered_set<std::uint64_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (edges.size() == m) throw ParseError(line_no, "more edges than declared in header");
    std::uint64_t u = 0, v = 0;
    if (!parse_two(line, u, v)) throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u > v) throw ParseError(line_no, "edge not canonical, expected u < v");
    if (!seen.insert(pair_key(static_cast<Vertex>(u), static_cast<Vertex>(v))).second)
      throw ParseError(line_no, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m)
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Graph::from_edges(static_cast<std::size_t>(n), edges, matrix_threshold);
}

void save_edge_list(const Graph& graph, std::ostream& out) {
  out << graph.n() << ' ' << graph.edge_count() << '\n';
  for (auto [u, v] : graph.canonical_edges()) out << u << ' ' << v << '\n';
}

}  // namespace qcolor
