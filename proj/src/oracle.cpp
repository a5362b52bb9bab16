#include "qcolor/oracle.hpp"

#include <algorithm>
#include <string>

#include "qcolor/errors.hpp"

namespace qcolor {

QueryLedger QueryLedger::since(const QueryLedger& earlier) const noexcept {
  return {adj_classical - earlier.adj_classical, deg_classical - earlier.deg_classical,
          nbr_classical - earlier.nbr_classical, adj_quantum - earlier.adj_quantum,
          nbr_quantum - earlier.nbr_quantum};
}

QueryLedger& QueryLedger::operator+=(const QueryLedger& other) noexcept {
  adj_classical += other.adj_classical;
  deg_classical += other.deg_classical;
  nbr_classical += other.nbr_classical;
  adj_quantum += other.adj_quantum;
  nbr_quantum += other.nbr_quantum;
  return *this;
}

nlohmann::json to_json(const QueryLedger& ledger) {
  return nlohmann::json{{"adj_classical", ledger.adj_classical}, {"deg_classical", ledger.deg_classical},
                        {"nbr_classical", ledger.nbr_classical}, {"adj_quantum", ledger.adj_quantum},
                        {"nbr_quantum", ledger.nbr_quantum},     {"total", ledger.total()}};
}

void OracleHandle::check_vertex(Vertex v, const char* op) const {
  if (v >= graph_->n())
    throw UsageError(std::string(op) + ": vertex " + std::to_string(v) + " out of range");
}

bool OracleHandle::adjacency_query(Vertex u, Vertex v) {
  check_vertex(u, "adjacency_query");
  check_vertex(v, "adjacency_query");
  if (u == v) throw UsageError("adjacency_query: u == v");
  ++ledger_.adj_classical;
  return graph_->adjacent(u, v);
}

std::size_t OracleHandle::degree_query(Vertex v) {
  check_vertex(v, "degree_query");
  ++ledger_.deg_classical;
  return graph_->degree(v);
}

std::optional<Vertex> OracleHandle::neighbor_query(Vertex v, std::size_t j) {
  check_vertex(v, "neighbor_query");
  if (j == 0) throw UsageError("neighbor_query: j is 1-based");
  ++ledger_.nbr_classical;
  auto nbrs = graph_->neighbors(v);
  if (j > nbrs.size()) return std::nullopt;
  return nbrs[j - 1];
}

std::size_t OracleHandle::estimate_max_degree() {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n(); ++v) best = std::max(best, degree_query(static_cast<Vertex>(v)));
  return best;
}

void OracleHandle::charge_quantum(QuantumKind kind, std::uint64_t amount, SimulatorAccess) {
  if (kind == QuantumKind::adjacency)
    ledger_.adj_quantum += amount;
  else
    ledger_.nbr_quantum += amount;
}

bool OracleHandle::oracle_adjacent(Vertex u, Vertex v, SimulatorAccess) const {
  check_vertex(u, "oracle_adjacent");
  check_vertex(v, "oracle_adjacent");
  return u != v && graph_->adjacent(u, v);
}

std::optional<Vertex> OracleHandle::oracle_neighbor(Vertex v, std::size_t j, SimulatorAccess) const {
  check_vertex(v, "oracle_neighbor");
  auto nbrs = graph_->neighbors(v);
  if (j == 0 || j > nbrs.size()) return std::nullopt;
  return nbrs[j - 1];
}

}  // namespace qcolor
