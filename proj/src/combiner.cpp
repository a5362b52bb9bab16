#include "qcolor/combiner.hpp"

#include <cmath>

#include "qcolor/classical.hpp"
#include "qcolor/errors.hpp"

namespace qcolor {

CostModel CostModel::classical() {
  return {"classical",
          [](double n, double d, double) { return n * n * std::log(n) / d; },
          [](double n, double d, double) { return n * d; }};
}

CostModel CostModel::quantum_dp1() {
  return {"quantum-dp1",
          [](double n, double d, double) { return std::pow(n, 1.5) * std::log(n) / std::sqrt(d); },
          [](double n, double d, double) { return n * d; }};
}

CostModel CostModel::quantum_eps() {
  return {"quantum-eps",
          [](double n, double d, double) { return std::pow(n, 1.5) * std::log(n) / std::sqrt(d); },
          [](double n, double d, double eps) {
            const double ln_n = std::log(n);
            return n * ln_n * ln_n * std::sqrt(d) / (eps * eps);
          }};
}

namespace {

void check_monotone(const CostModel& model, std::size_t n, double eps) {
  const double nd = static_cast<double>(n);
  double prev_dense = model.dense_cost(nd, 1.0, eps);
  double prev_sparse = model.sparse_cost(nd, 1.0, eps);
  // Every degree up to 4096, then a geometric grid.
  std::size_t d = 2;
  while (d < n) {
    const double dense = model.dense_cost(nd, static_cast<double>(d), eps);
    const double sparse = model.sparse_cost(nd, static_cast<double>(d), eps);
    const double slack = 1e-12;
    if (dense > prev_dense * (1 + slack) || sparse < prev_sparse * (1 - slack))
      throw ConfigError("cost model '" + model.name + "' is not monotone at degree " + std::to_string(d));
    prev_dense = dense;
    prev_sparse = sparse;
    d = d < 4096 ? d + 1 : d + d / 16;
  }
}

}  // namespace

std::size_t crossover(const CostModel& model, std::size_t n, double eps) {
  if (n < 2) return 1;
  check_monotone(model, n, eps);
  const double nd = static_cast<double>(n);
  auto dense_wins = [&](std::size_t d) {
    const double dd = static_cast<double>(d);
    return model.dense_cost(nd, dd, eps) <= model.sparse_cost(nd, dd, eps);
  };
  std::size_t lo = 1, hi = n;  // answer in [lo, hi]; hi = n means "never"
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (dense_wins(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

const char* to_string(Branch branch) noexcept { return branch == Branch::dense ? "dense" : "sparse"; }

Branch choose_branch(const CostModel& model, std::size_t n, std::size_t max_degree, double eps) {
  return max_degree >= crossover(model, n, eps) ? Branch::dense : Branch::sparse;
}

CombinedRun combined_classical(OracleHandle& oracle, std::uint64_t seed, CostModel model) {
  const std::size_t n = oracle.n();
  const std::size_t max_degree = oracle.estimate_max_degree();
  const std::size_t threshold = crossover(model, n);
  if (max_degree >= threshold) {
    auto run = delta_plus_one_color(oracle, max_degree, seed);
    return {std::move(run.coloring), Branch::dense, max_degree, threshold, max_degree + 1, std::nullopt};
  }
  return {greedy_color(oracle), Branch::sparse, max_degree, threshold, max_degree + 1, std::nullopt};
}

CombinedRun combined_quantum_dp1(OracleHandle& oracle, std::uint64_t seed, QuantumSettings settings,
                                 CostModel model) {
  const std::size_t n = oracle.n();
  const std::size_t max_degree = oracle.estimate_max_degree();
  const std::size_t threshold = crossover(model, n);
  if (max_degree >= threshold) {
    auto run = quantum_adjacency_color(oracle, max_degree, seed, settings);
    return {std::move(run.coloring), Branch::dense, max_degree, threshold, max_degree + 1, std::nullopt};
  }
  return {greedy_color(oracle), Branch::sparse, max_degree, threshold, max_degree + 1, std::nullopt};
}

CombinedRun combined_quantum_eps(OracleHandle& oracle, double eps, std::uint64_t seed, QuantumSettings settings,
                                 CostModel model, bool early_exit) {
  if (!(eps > 0.0)) throw ParameterError("combined_quantum_eps: eps must be positive");
  const std::size_t n = oracle.n();
  const std::size_t max_degree = oracle.estimate_max_degree();
  const std::size_t threshold = crossover(model, n, eps);
  if (max_degree >= threshold) {
    auto run = quantum_adjacency_color(oracle, max_degree, seed, settings);
    return {std::move(run.coloring), Branch::dense, max_degree, threshold, max_degree + 1, std::nullopt};
  }
  auto run = quantum_neighborhood_color(oracle, max_degree, eps, seed, settings, early_exit);
  const std::size_t bound = run.config.total_colors();
  return {std::move(run.coloring), Branch::sparse, max_degree, threshold, bound, std::move(run.report)};
}

}  // namespace qcolor
