#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "json.hpp"
#include "qcolor/graph.hpp"

namespace qcolor {

class SimulatorAccess;
namespace grover::detail {
SimulatorAccess simulator_access() noexcept;
}

/// Key type for the oracle surface that only the Grover simulator may use:
/// uncharged evaluations of the oracle functions inside a quantum query, and
/// quantum charging. Only grover::detail::simulator_access() can mint one.
class SimulatorAccess {
  SimulatorAccess() = default;
  friend SimulatorAccess grover::detail::simulator_access() noexcept;
};

enum class QuantumKind { adjacency, neighborhood };

/// Per-kind query counters. Monotone within a run.
struct QueryLedger {
  std::uint64_t adj_classical = 0;
  std::uint64_t deg_classical = 0;
  std::uint64_t nbr_classical = 0;
  std::uint64_t adj_quantum = 0;
  std::uint64_t nbr_quantum = 0;

  std::uint64_t total() const noexcept {
    return adj_classical + deg_classical + nbr_classical + adj_quantum + nbr_quantum;
  }

  /// Counter-wise difference; `earlier` must be a snapshot of the same ledger.
  QueryLedger since(const QueryLedger& earlier) const noexcept;

  QueryLedger& operator+=(const QueryLedger& other) noexcept;

  bool operator==(const QueryLedger&) const = default;
};

/// {"adj_classical":..,"deg_classical":..,"nbr_classical":..,"adj_quantum":..,"nbr_quantum":..,"total":..}
nlohmann::json to_json(const QueryLedger& ledger);

/// The only view of a Graph that coloring algorithms get. Each probe bumps
/// the matching ledger counter. Out-of-range arguments throw UsageError and
/// are not charged. The graph must outlive the handle.
class OracleHandle {
 public:
  explicit OracleHandle(const Graph& graph) : graph_(&graph) {}

  OracleHandle(const OracleHandle&) = delete;
  OracleHandle& operator=(const OracleHandle&) = delete;
  OracleHandle(OracleHandle&&) = default;
  OracleHandle& operator=(OracleHandle&&) = default;

  std::size_t n() const noexcept { return graph_->n(); }

  bool adjacency_query(Vertex u, Vertex v);
  std::size_t degree_query(Vertex v);
  /// j-th neighbor (1-based) of v, or nullopt (the symbol ⊥) when j > d(v).
  std::optional<Vertex> neighbor_query(Vertex v, std::size_t j);
  /// Exact maximum degree via one degree query per vertex.
  std::size_t estimate_max_degree();

  const QueryLedger& ledger() const noexcept { return ledger_; }

  void charge_quantum(QuantumKind kind, std::uint64_t amount, SimulatorAccess);
  /// f_A(u, v) as evaluated inside O_A. Uncharged.
  bool oracle_adjacent(Vertex u, Vertex v, SimulatorAccess) const;
  /// f(v, j) as evaluated inside O_N (j is 1-based). Uncharged.
  std::optional<Vertex> oracle_neighbor(Vertex v, std::size_t j, SimulatorAccess) const;

 private:
  void check_vertex(Vertex v, const char* op) const;

  const Graph* graph_;
  QueryLedger ledger_;
};

}  // namespace qcolor
