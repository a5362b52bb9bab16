#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qcolor/graph.hpp"
#include "qcolor/oracle.hpp"
#include "qcolor/rng.hpp"

namespace qcolor::grover {

enum class SearchMode {
  dynamics,    ///< sample measurements from the exact two-dimensional Grover rotation
  cost_model,  ///< idealized search: always correct, charged ceil(c0 * sqrt(N/k)) iterations
};

inline constexpr double kDefaultCostConstant = 4.5;

/// Quantum queries per Grover iteration: one phase-oracle call for adjacency,
/// two XOR-oracle calls (O_N W O_N) for neighborhoods.
constexpr std::uint32_t cost_per_iteration(QuantumKind kind) noexcept {
  return kind == QuantumKind::adjacency ? 1 : 2;
}

/// An unstructured search over indices 0..size-1. The marked set is known to
/// the simulator only; algorithms learn about it through measurements and
/// their own classical verification.
struct GroverInstance {
  std::size_t size = 0;
  std::vector<std::size_t> marked;  // sorted, unique
  QuantumKind query_kind = QuantumKind::adjacency;
  SearchMode mode = SearchMode::cost_model;
  double c0 = kDefaultCostConstant;

  static GroverInstance with_marked(std::size_t size, std::vector<std::size_t> marked, QuantumKind kind,
                                    SearchMode mode = SearchMode::dynamics,
                                    double c0 = kDefaultCostConstant);

  std::size_t marked_count() const noexcept { return marked.size(); }
  bool is_marked(std::size_t index) const;
  std::uint32_t cost() const noexcept { return cost_per_iteration(query_kind); }
};

struct GroverOutcome {
  std::optional<std::size_t> found;  ///< always a marked index when present
  std::uint64_t quantum_queries_charged = 0;
  std::uint64_t classical_verifications = 0;
  std::uint64_t iterations_used = 0;
  std::uint32_t phases = 0;  ///< measurements taken (dynamics mode)
};

/// Returns true when the candidate index really is marked. Supplied by the
/// caller, which also pays for the classical query it makes.
using Verifier = std::function<bool(std::size_t)>;

/// sin^2((2j+1) theta) with sin^2 theta = k/N; 0 when k = 0.
double success_probability(std::size_t size, std::size_t marked, std::uint64_t iterations);

/// Applies `iterations` Grover iterates to the uniform superposition and
/// measures. Charges iterations * cost_per_iteration quantum queries.
std::size_t grover_measure(const GroverInstance& inst, std::uint64_t iterations, Rng& rng,
                           OracleHandle& oracle);

struct BbhtOptions {
  /// Times the m-schedule is run before concluding "no marked item".
  unsigned passes = 2;
};

/// Number of measurements in one pass of the m-schedule
/// (m = 1, 6/5, (6/5)^2, ... capped at sqrt(N), ending after the capped phase).
std::size_t bbht_schedule_length(std::size_t size);

/// BBHT search for an unknown number of marked items.
GroverOutcome bbht_search(const GroverInstance& inst, const Verifier& verify, Rng& rng,
                          OracleHandle& oracle, BbhtOptions options = {});

/// Idealized search. Returns a uniform marked index and charges
/// ceil(c0 sqrt(N/k)) iterations, or charges ceil(c0 sqrt(N)) and returns
/// nothing when k = 0. Performs no verification itself.
GroverOutcome cost_model_search(const GroverInstance& inst, Rng& rng, OracleHandle& oracle);

/// Dispatches on inst.mode. In cost-model mode the returned item is still
/// passed through `verify` (one classical query, as in dynamics mode).
GroverOutcome search(const GroverInstance& inst, const Verifier& verify, Rng& rng, OracleHandle& oracle,
                     BbhtOptions options = {});

/// Search space: `candidates`; marked = candidates adjacent to v (phase oracle O_A).
GroverInstance adjacency_instance(const OracleHandle& oracle, Vertex v, std::span<const Vertex> candidates,
                                  SearchMode mode, double c0 = kDefaultCostConstant);

/// Search space: neighbor indices 1..degree of v (stored as 0..degree-1);
/// marked = indices whose neighbor satisfies `flagged` (the W reflection).
GroverInstance neighborhood_instance(const OracleHandle& oracle, Vertex v, std::size_t degree,
                                     const std::function<bool(Vertex)>& flagged, SearchMode mode,
                                     double c0 = kDefaultCostConstant);

namespace detail {
SimulatorAccess simulator_access() noexcept;
}

}  // namespace qcolor::grover
