#include "qcolor/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcolor/errors.hpp"
#include "qcolor/rng.hpp"

namespace qcolor {

std::uint64_t TraceRecord::total_queries() const {
  return std::accumulate(queries.begin(), queries.end(), std::uint64_t{0});
}

std::uint64_t TraceRecord::total_retries() const {
  return std::accumulate(retries.begin(), retries.end(), std::uint64_t{0});
}

Coloring greedy_color(OracleHandle& oracle) {
  const std::size_t n = oracle.n();
  std::vector<std::vector<Vertex>> seen(n);
  std::size_t max_seen = 0;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 1;; ++j) {
      auto u = oracle.neighbor_query(static_cast<Vertex>(v), j);
      if (!u) break;
      seen[v].push_back(*u);
    }
    max_seen = std::max(max_seen, seen[v].size());
  }
  Coloring coloring(n, static_cast<Color>(max_seen + 1));
  std::vector<std::size_t> stamp(max_seen + 2, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : seen[v]) {
      Color c = coloring.color(u);
      if (c != kUncolored) stamp[c] = v;
    }
    Color c = 1;
    while (stamp[c] == v) ++c;
    coloring.assign(static_cast<Vertex>(v), c);
  }
  return coloring;
}

namespace {

// Shared accept/reject loop. `order` empty means identity order.
std::optional<ColoringRun> random_palette_color(OracleHandle& oracle, std::size_t max_degree, std::size_t palette,
                                                Rng& rng,
                                                std::vector<Vertex> order, std::optional<std::uint64_t> budget,
                                                RandomColorOptions options) {
  const std::size_t n = oracle.n();
  ColoringRun run{Coloring(n, static_cast<Color>(palette)), {}};
  run.trace.order = std::move(order);
  run.trace.queries.assign(n, 0);
  run.trace.retries.assign(n, 0);
  const std::uint64_t cap = static_cast<std::uint64_t>(options.attempt_cap_factor) * palette;
  std::uint64_t spent = 0;

  for (std::size_t t = 0; t < n; ++t) {
    const Vertex v = run.trace.order[t];
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt >= cap)
        throw AttemptCapExceeded("vertex " + std::to_string(v) + " rejected " + std::to_string(cap) +
                                 " candidate colors; the degree bound is likely below the true maximum degree");
      const Color c = static_cast<Color>(rng.below(palette) + 1);
      bool conflict = false;
      // A zero degree bound means there are no edges to probe.
      auto members = max_degree == 0 ? std::span<const Vertex>{} : run.coloring.color_class(c);
      for (Vertex u : members) {
        ++run.trace.queries[t];
        ++spent;
        if (budget && spent > *budget) return std::nullopt;
        if (oracle.adjacency_query(u, v)) {
          conflict = true;
          break;
        }
      }
      if (!conflict) {
        run.coloring.assign(v, c);
        break;
      }
      ++run.trace.retries[t];
    }
  }
  return run;
}

std::vector<Vertex> random_order(std::size_t n, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  rng.shuffle(std::span<Vertex>(order));
  return order;
}

}  // namespace

ColoringRun delta_plus_one_color(OracleHandle& oracle, std::size_t max_degree, std::uint64_t seed,
                                 RandomColorOptions options) {
  Rng rng(seed);
  auto order = random_order(oracle.n(), rng);
  return *random_palette_color(oracle, max_degree, max_degree + 1, rng, std::move(order), std::nullopt, options);
}

std::optional<ColoringRun> delta_plus_one_color_within(OracleHandle& oracle, std::size_t max_degree,
                                                       std::uint64_t seed, std::uint64_t query_budget,
                                                       RandomColorOptions options) {
  Rng rng(seed);
  auto order = random_order(oracle.n(), rng);
  return random_palette_color(oracle, max_degree, max_degree + 1, rng, std::move(order), query_budget, options);
}

BoostReport boosted_color(OracleHandle& oracle, std::size_t max_degree, std::uint64_t seed, std::size_t rounds,
                          std::uint64_t budget) {
  BoostReport report;
  for (std::size_t round = 0; round < rounds; ++round) {
    const std::uint64_t before = oracle.ledger().adj_classical;
    auto run = delta_plus_one_color_within(oracle, max_degree, mix_seed({seed, round}), budget);
    report.round_queries.push_back(oracle.ledger().adj_classical - before);
    if (run) {
      report.coloring = std::move(run->coloring);
      return report;
    }
    ++report.aborted_rounds;
  }
  return report;
}

std::size_t morris_song_palette(std::size_t max_degree, double eps) {
  return static_cast<std::size_t>(std::ceil((1.0 + eps) * static_cast<double>(max_degree))) + 1;
}

ColoringRun morris_song_color(OracleHandle& oracle, std::size_t max_degree, double eps, std::uint64_t seed) {
  if (!(eps > 0.0)) throw ParameterError("morris_song_color: eps must be positive");
  Rng rng(seed);
  std::vector<Vertex> order(oracle.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  return *random_palette_color(oracle, max_degree, morris_song_palette(max_degree, eps), rng, std::move(order), std::nullopt,
                               {});
}

OrderedColorResult ordered_gnp_color(OracleHandle& oracle, double p, double eps) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("ordered_gnp_color: p must lie in [0, 1]");
  if (!(eps > 0.0)) throw ParameterError("ordered_gnp_color: eps must be positive");
  const std::size_t n = oracle.n();
  const double np = static_cast<double>(n) * p;
  const double ln_n = std::max(std::log(static_cast<double>(n)), 1.0);
  const std::size_t parts =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::floor(np * eps * eps / (6.0 * ln_n))), 1, n);
  const std::size_t window =
      static_cast<std::size_t>(std::ceil((1.0 + eps) * np / static_cast<double>(parts)));
  const std::size_t palette = window + 1;

  OrderedColorResult result{Coloring(n, static_cast<Color>(parts * palette)), parts, window, {}};
  std::vector<Vertex> in_part;
  std::vector<std::size_t> stamp(palette + 1, n);

  for (std::size_t i = 0; i < parts; ++i) {
    const auto lo = static_cast<Vertex>(i * n / parts);
    const auto hi = static_cast<Vertex>((i + 1) * n / parts);
    const Color base = static_cast<Color>(i * palette);
    for (Vertex u = lo; u < hi; ++u) {
      in_part.clear();
      const std::size_t d = oracle.degree_query(u);
      // First neighbor index whose vertex id is >= lo (d + 1 if none).
      std::size_t left = 1, right = d + 1;
      while (left < right) {
        const std::size_t mid = (left + right) / 2;
        const Vertex x = *oracle.neighbor_query(u, mid);
        if (x < lo)
          left = mid + 1;
        else
          right = mid;
      }
      std::size_t j = left;
      for (; j <= d && j < left + window; ++j) {
        const Vertex x = *oracle.neighbor_query(u, j);
        if (x >= hi) break;
        in_part.push_back(x);
      }
      if (in_part.size() == window && j <= d) {
        const Vertex x = *oracle.neighbor_query(u, j);
        if (x < hi) result.overflow.push_back(u);
      }
      for (Vertex x : in_part) {
        const Color c = result.coloring.color(x);
        if (c != kUncolored) stamp[c - base] = u;
      }
      Color local = 1;
      while (local <= palette && stamp[local] == u) ++local;
      if (local > palette) {
        // Only reachable after an overflow; reuse the last palette color.
        local = static_cast<Color>(palette);
        if (result.overflow.empty() || result.overflow.back() != u) result.overflow.push_back(u);
      }
      result.coloring.assign(u, base + local);
    }
  }
  return result;
}

}  // namespace qcolor
