#include <cmath>

#include "doctest.h"
#include "qcolor/combiner.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/graph.hpp"

using namespace qcolor;

TEST_CASE("classical crossover closed form") {
  CHECK(crossover(CostModel::classical(), 1024) == 85);
  for (std::size_t n : {16u, 100u, 512u, 4096u, 100000u}) {
    const double nd = static_cast<double>(n);
    const auto expected = static_cast<std::size_t>(std::ceil(std::sqrt(nd * std::log(nd))));
    CHECK(crossover(CostModel::classical(), n) == std::min(expected, n));
  }
}

TEST_CASE("quantum dp1 crossover closed form") {
  for (std::size_t n : {64u, 1024u, 8192u, 65536u}) {
    const double nd = static_cast<double>(n);
    const auto expected = static_cast<std::size_t>(std::ceil(std::pow(std::sqrt(nd) * std::log(nd), 2.0 / 3.0)));
    CHECK(crossover(CostModel::quantum_dp1(), n) == expected);
  }
}

TEST_CASE("quantum eps crossover closed form") {
  // n^{3/2} ln n / sqrt(D) <= eps^-2 n (ln n)^2 sqrt(D)  <=>  D >= eps^2 sqrt(n) / ln n.
  for (std::size_t n : {512u, 2048u, 8192u, 1u << 20})
    for (double eps : {0.5, 1.0}) {
      const double nd = static_cast<double>(n);
      const double exact = eps * eps * std::sqrt(nd) / std::log(nd);
      const auto expected = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(exact - 1e-9)));
      CHECK(crossover(CostModel::quantum_eps(), n, eps) == expected);
    }
}

TEST_CASE("crossover edge cases") {
  CostModel flat{"flat", [](double, double, double) { return 1.0; }, [](double, double, double) { return 1.0; }};
  CHECK(crossover(flat, 100) == 1);
  CostModel never{"never", [](double, double, double) { return 2.0; }, [](double, double, double) { return 1.0; }};
  CHECK(crossover(never, 100) == 100);
  CostModel bumpy{"bumpy", [](double, double d, double) { return std::sin(d) + 2; },
                  [](double, double d, double) { return d; }};
  CHECK_THROWS_AS(crossover(bumpy, 100), ConfigError);
  CHECK(crossover(CostModel::classical(), 1) == 1);
}

TEST_CASE("constants move the crossover") {
  CostModel scaled = CostModel::classical();
  scaled.c_dense = 4.0;
  // c_f f <= g  <=>  D >= sqrt(4 n ln n).
  const double n = 1024;
  CHECK(crossover(scaled, 1024) == static_cast<std::size_t>(std::ceil(std::sqrt(4 * n * std::log(n)))));
}

TEST_CASE("dispatch agrees with the modeled costs") {
  for (const auto& model : {CostModel::classical(), CostModel::quantum_dp1(), CostModel::quantum_eps()})
    for (std::size_t n : {32u, 300u, 1024u, 5000u})
      for (std::size_t d = 1; d < n; d += 1 + d / 3) {
        const double nd = static_cast<double>(n), dd = static_cast<double>(d);
        const bool dense_cheaper = model.dense_cost(nd, dd, 0.5) <= model.sparse_cost(nd, dd, 0.5);
        CHECK((choose_branch(model, n, d, 0.5) == Branch::dense) == dense_cheaper);
      }
}

TEST_CASE("combined classical") {
  Graph empty = gen_edgeless(10);
  OracleHandle oe(empty);
  auto re = combined_classical(oe, 1);
  CHECK(re.branch == Branch::sparse);
  CHECK(re.coloring.colors_used() == 1);
  CHECK(oe.ledger().deg_classical == 10);

  Graph k = gen_clique(40);
  OracleHandle ok(k);
  auto rk = combined_classical(ok, 2);
  CHECK(rk.branch == Branch::dense);
  CHECK(verify_coloring(k, rk.coloring, 40).ok());
  CHECK(ok.ledger().deg_classical == 40);

  for (double p : {0.05, 0.2, 0.6}) {
    Graph g = gen_gnp(300, p, 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      OracleHandle o(g);
      auto r = combined_classical(o, seed);
      CHECK(verify_coloring(g, r.coloring, g.max_degree() + 1).ok());
      CHECK(r.max_degree == g.max_degree());
      CHECK(o.ledger().deg_classical == 300);
    }
  }
}

TEST_CASE("combined quantum dp1") {
  Graph empty = gen_edgeless(10);
  OracleHandle oe(empty);
  CHECK(combined_quantum_dp1(oe, 1).branch == Branch::sparse);
  Graph k = gen_clique(30);
  OracleHandle ok(k);
  auto r = combined_quantum_dp1(ok, 1);
  CHECK(r.branch == Branch::dense);
  CHECK(verify_coloring(k, r.coloring, 30).ok());
  CHECK(ok.ledger().adj_quantum > 0);
  CHECK(ok.ledger().deg_classical == 30);
}

TEST_CASE("combined quantum eps") {
  Graph empty = gen_edgeless(10);
  OracleHandle oe(empty);
  auto re = combined_quantum_eps(oe, 0.5, 1);
  CHECK(re.branch == Branch::sparse);
  CHECK(re.neighborhood_report.has_value());
  CHECK(verify_coloring(empty, re.coloring, re.palette_bound).ok());

  Graph k = gen_clique(30);
  OracleHandle ok(k);
  auto rk = combined_quantum_eps(ok, 0.5, 1);
  CHECK(rk.branch == Branch::dense);
  CHECK(verify_coloring(k, rk.coloring, 30).ok());
  CHECK(ok.ledger().deg_classical == 30);
  CHECK_THROWS_AS(combined_quantum_eps(ok, 0.0, 1), ParameterError);
}
