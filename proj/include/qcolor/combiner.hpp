#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "qcolor/coloring.hpp"
#include "qcolor/oracle.hpp"
#include "qcolor/quantum.hpp"

namespace qcolor {

/// Modeled query costs of a dense-regime algorithm (decreasing in Δ) and a
/// sparse-regime algorithm (increasing in Δ), as functions of (n, Δ, ε).
struct CostModel {
  using CostFn = std::function<double(double n, double max_degree, double eps)>;

  std::string name;
  CostFn dense;
  CostFn sparse;
  double c_dense = 1.0;
  double c_sparse = 1.0;

  double dense_cost(double n, double max_degree, double eps) const { return c_dense * dense(n, max_degree, eps); }
  double sparse_cost(double n, double max_degree, double eps) const { return c_sparse * sparse(n, max_degree, eps); }

  /// n^2 ln n / Δ against greedy's n Δ.
  static CostModel classical();
  /// n^{3/2} ln n / sqrt Δ against greedy's n Δ.
  static CostModel quantum_dp1();
  /// n^{3/2} ln n / sqrt Δ against ε^{-2} n (ln n)^2 sqrt Δ.
  static CostModel quantum_eps();
};

/// Smallest integer Δ in [1, n-1] with dense_cost <= sparse_cost, or n when
/// there is none. Throws ConfigError if the model is not monotone on [1, n-1].
std::size_t crossover(const CostModel& model, std::size_t n, double eps = 1.0);

enum class Branch { dense, sparse };

const char* to_string(Branch branch) noexcept;

/// Dense branch exactly when max_degree >= crossover(model, n, eps).
Branch choose_branch(const CostModel& model, std::size_t n, std::size_t max_degree, double eps = 1.0);

struct CombinedRun {
  Coloring coloring;
  Branch branch;
  std::size_t max_degree;
  std::size_t threshold;      ///< the crossover Δ*
  std::size_t palette_bound;  ///< colors the output may use when correct
  std::optional<QNReport> neighborhood_report;
};

/// Estimates Δ (n degree queries), then runs delta_plus_one_color when
/// Δ >= Δ* and greedy_color otherwise.
CombinedRun combined_classical(OracleHandle& oracle, std::uint64_t seed, CostModel model = CostModel::classical());

/// quantum_adjacency_color when Δ >= Δ*, greedy_color otherwise.
CombinedRun combined_quantum_dp1(OracleHandle& oracle, std::uint64_t seed, QuantumSettings settings = {},
                                 CostModel model = CostModel::quantum_dp1());

/// quantum_adjacency_color when Δ >= Δ*, quantum_neighborhood_color otherwise.
CombinedRun combined_quantum_eps(OracleHandle& oracle, double eps, std::uint64_t seed, QuantumSettings settings = {},
                                 CostModel model = CostModel::quantum_eps(), bool early_exit = false);

}  // namespace qcolor
