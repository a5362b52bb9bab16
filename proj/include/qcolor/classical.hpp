#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcolor/coloring.hpp"
#include "qcolor/oracle.hpp"

namespace qcolor {

/// Per-position measurements of a sequential randomized coloring.
/// order[t] is the vertex handled at step t; queries[t] and retries[t]
/// are the queries spent on it and the candidate colors it rejected.
struct TraceRecord {
  std::vector<Vertex> order;
  std::vector<std::uint64_t> queries;
  std::vector<std::uint64_t> retries;

  std::uint64_t total_queries() const;
  std::uint64_t total_retries() const;
};

struct ColoringRun {
  Coloring coloring;
  TraceRecord trace;
};

/// Greedy (Δ+1)-coloring that learns each neighborhood by neighbor queries,
/// stopping at the first ⊥. Uses sum_v (d(v) + 1) neighbor queries.
Coloring greedy_color(OracleHandle& oracle);

inline constexpr std::uint32_t kDefaultAttemptCapFactor = 64;

struct RandomColorOptions {
  /// Abort with AttemptCapExceeded after cap_factor * palette draws for one vertex.
  std::uint32_t attempt_cap_factor = kDefaultAttemptCapFactor;
};

/// Las Vegas (Δ+1)-coloring: random vertex order, uniformly random candidate
/// colors checked against the current color class with adjacency queries.
/// `max_degree` may be any upper bound on the true maximum degree.
ColoringRun delta_plus_one_color(OracleHandle& oracle, std::size_t max_degree, std::uint64_t seed,
                                 RandomColorOptions options = {});

/// Same as delta_plus_one_color but gives up (returns nullopt) as soon as
/// the run has spent more than `query_budget` adjacency queries.
std::optional<ColoringRun> delta_plus_one_color_within(OracleHandle& oracle, std::size_t max_degree,
                                                       std::uint64_t seed, std::uint64_t query_budget,
                                                       RandomColorOptions options = {});

struct BoostReport {
  std::optional<Coloring> coloring;
  std::vector<std::uint64_t> round_queries;  ///< adjacency queries per attempted round
  std::size_t aborted_rounds = 0;

  bool succeeded() const noexcept { return coloring.has_value(); }
};

/// Monte Carlo wrapper: up to `rounds` budgeted runs of delta_plus_one_color
/// on the same oracle, each seeded with mix_seed({seed, round}).
BoostReport boosted_color(OracleHandle& oracle, std::size_t max_degree, std::uint64_t seed, std::size_t rounds,
                          std::uint64_t budget);

/// Baseline (1+ε)Δ-coloring: vertices in index order, candidates drawn from
/// a palette of ceil((1+ε)Δ) + 1 colors.
ColoringRun morris_song_color(OracleHandle& oracle, std::size_t max_degree, double eps, std::uint64_t seed);

std::size_t morris_song_palette(std::size_t max_degree, double eps);

struct OrderedColorResult {
  Coloring coloring;
  std::size_t parts = 1;
  std::size_t window = 0;  ///< neighbors scanned after the first in-part one
  std::vector<Vertex> overflow;  ///< vertices whose in-part neighborhood exceeded the window

  bool failed() const noexcept { return !overflow.empty(); }
};

/// Coloring for G(n, p) when neighbor lists are sorted by vertex id: the
/// vertex set is cut into contiguous intervals and each vertex finds its
/// in-interval neighbors by binary search plus a bounded scan.
OrderedColorResult ordered_gnp_color(OracleHandle& oracle, double p, double eps);

}  // namespace qcolor
