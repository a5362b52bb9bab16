#include "qcolor/grover.hpp"

#include <algorithm>
#include <cmath>

#include "qcolor/errors.hpp"

namespace qcolor::grover {

namespace detail {
SimulatorAccess simulator_access() noexcept { return SimulatorAccess{}; }
}  // namespace detail

GroverInstance GroverInstance::with_marked(std::size_t size, std::vector<std::size_t> marked, QuantumKind kind,
                                           SearchMode mode, double c0) {
  if (size == 0) throw ParameterError("GroverInstance: N must be at least 1");
  if (!(c0 > 0.0)) throw ParameterError("GroverInstance: c0 must be positive");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  if (!marked.empty() && marked.back() >= size) throw ParameterError("GroverInstance: marked index out of range");
  GroverInstance inst;
  inst.size = size;
  inst.marked = std::move(marked);
  inst.query_kind = kind;
  inst.mode = mode;
  inst.c0 = c0;
  return inst;
}

bool GroverInstance::is_marked(std::size_t index) const {
  return std::binary_search(marked.begin(), marked.end(), index);
}

double success_probability(std::size_t size, std::size_t marked, std::uint64_t iterations) {
  if (size == 0) throw ParameterError("success_probability: N must be at least 1");
  if (marked > size) throw ParameterError("success_probability: k exceeds N");
  if (marked == 0) return 0.0;
  if (marked == size) return 1.0;
  const double theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(size)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

namespace {

std::size_t sample_marked(const GroverInstance& inst, Rng& rng) {
  return inst.marked[static_cast<std::size_t>(rng.below(inst.marked.size()))];
}

// r-th unmarked index: the smallest x with x - |{marked <= x}| == r.
std::size_t sample_unmarked(const GroverInstance& inst, Rng& rng) {
  const std::size_t r = static_cast<std::size_t>(rng.below(inst.size - inst.marked.size()));
  std::size_t lo = 0, hi = inst.marked.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (inst.marked[mid] - mid <= r)
      lo = mid + 1;
    else
      hi = mid;
  }
  return r + lo;
}

}  // namespace

std::size_t grover_measure(const GroverInstance& inst, std::uint64_t iterations, Rng& rng, OracleHandle& oracle) {
  if (inst.size == 0) throw ParameterError("grover_measure: N must be at least 1");
  oracle.charge_quantum(inst.query_kind, iterations * inst.cost(), detail::simulator_access());
  const std::size_t k = inst.marked_count();
  if (k == 0) return sample_unmarked(inst, rng);
  if (k == inst.size) return sample_marked(inst, rng);
  const double p = success_probability(inst.size, k, iterations);
  return rng.bernoulli(p) ? sample_marked(inst, rng) : sample_unmarked(inst, rng);
}

std::size_t bbht_schedule_length(std::size_t size) {
  const double cap = std::sqrt(static_cast<double>(size));
  std::size_t phases = 0;
  double m = 1.0;
  while (m <= cap) {
    ++phases;
    if (m >= cap) break;
    m = std::min(m * 6.0 / 5.0, cap);
  }
  return phases;
}

GroverOutcome bbht_search(const GroverInstance& inst, const Verifier& verify, Rng& rng, OracleHandle& oracle,
                          BbhtOptions options) {
  if (inst.size == 0) throw ParameterError("bbht_search: N must be at least 1");
  GroverOutcome out;
  const double cap = std::sqrt(static_cast<double>(inst.size));
  for (unsigned pass = 0; pass < options.passes; ++pass) {
    double m = 1.0;
    while (m <= cap) {
      const auto j = rng.below(static_cast<std::uint64_t>(std::floor(m)) + 1);
      const std::size_t index = grover_measure(inst, j, rng, oracle);
      out.iterations_used += j;
      out.quantum_queries_charged += j * inst.cost();
      ++out.phases;
      ++out.classical_verifications;
      if (verify(index)) {
        out.found = index;
        return out;
      }
      if (m >= cap) break;
      m = std::min(m * 6.0 / 5.0, cap);
    }
  }
  return out;
}

GroverOutcome cost_model_search(const GroverInstance& inst, Rng& rng, OracleHandle& oracle) {
  if (inst.size == 0) throw ParameterError("cost_model_search: N must be at least 1");
  GroverOutcome out;
  const std::size_t k = inst.marked_count();
  const double ratio = static_cast<double>(inst.size) / static_cast<double>(std::max<std::size_t>(k, 1));
  out.iterations_used = static_cast<std::uint64_t>(std::ceil(inst.c0 * std::sqrt(ratio)));
  out.quantum_queries_charged = out.iterations_used * inst.cost();
  oracle.charge_quantum(inst.query_kind, out.quantum_queries_charged, detail::simulator_access());
  if (k > 0) out.found = sample_marked(inst, rng);
  return out;
}

GroverOutcome search(const GroverInstance& inst, const Verifier& verify, Rng& rng, OracleHandle& oracle,
                     BbhtOptions options) {
  if (inst.mode == SearchMode::dynamics) return bbht_search(inst, verify, rng, oracle, options);
  GroverOutcome out = cost_model_search(inst, rng, oracle);
  if (out.found) {
    ++out.classical_verifications;
    if (!verify(*out.found)) out.found.reset();
  }
  return out;
}

GroverInstance adjacency_instance(const OracleHandle& oracle, Vertex v, std::span<const Vertex> candidates,
                                  SearchMode mode, double c0) {
  const auto key = detail::simulator_access();
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (oracle.oracle_adjacent(v, candidates[i], key)) marked.push_back(i);
  return GroverInstance::with_marked(candidates.size(), std::move(marked), QuantumKind::adjacency, mode, c0);
}

GroverInstance neighborhood_instance(const OracleHandle& oracle, Vertex v, std::size_t degree,
                                     const std::function<bool(Vertex)>& flagged, SearchMode mode, double c0) {
  const auto key = detail::simulator_access();
  std::vector<std::size_t> marked;
  for (std::size_t j = 1; j <= degree; ++j) {
    auto u = oracle.oracle_neighbor(v, j, key);
    if (u && flagged(*u)) marked.push_back(j - 1);
  }
  return GroverInstance::with_marked(degree, std::move(marked), QuantumKind::neighborhood, mode, c0);
}

}  // namespace qcolor::grover
