#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qcolor/errors.hpp"
#include "qcolor/graph.hpp"
#include "qcolor/grover.hpp"
#include "qcolor/oracle.hpp"
#include "test_support.hpp"

using namespace qcolor;
using namespace qcolor::grover;

namespace {

// Independent replay of the m-schedule.
std::vector<double> schedule(std::size_t size) {
  std::vector<double> ms;
  const double cap = std::sqrt(static_cast<double>(size));
  for (double m = 1.0; m <= cap + 1e-12;) {
    ms.push_back(m);
    if (m >= cap) break;
    m = std::min(1.2 * m, cap);
  }
  return ms;
}

GroverInstance instance(std::size_t n, std::vector<std::size_t> marked, QuantumKind kind = QuantumKind::adjacency,
                        SearchMode mode = SearchMode::dynamics, double c0 = kDefaultCostConstant) {
  return GroverInstance::with_marked(n, std::move(marked), kind, mode, c0);
}

}  // namespace

TEST_CASE("success probability closed form") {
  CHECK(success_probability(2, 1, 0) == doctest::Approx(0.5));
  for (std::size_t n : {1u, 5u, 64u}) CHECK(success_probability(n, n, 0) == 1.0);
  CHECK(success_probability(4, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(success_probability(10, 0, 3) == 0.0);
  CHECK_THROWS_AS(success_probability(4, 5, 0), ParameterError);
  CHECK_THROWS_AS(success_probability(0, 0, 0), ParameterError);
  CHECK(success_probability(16, 4, 0) == doctest::Approx(0.25));
}

TEST_CASE("closed form agrees with explicit rotation") {
  for (std::size_t n : {3u, 4u, 16u, 17u, 64u, 100u})
    for (std::size_t k = 1; k < n; k += 1 + n / 7)
      for (std::uint64_t j = 0; j <= 12; ++j)
        CHECK(success_probability(n, k, j) == doctest::Approx(testing::rotation_success(n, k, j)).epsilon(1e-9));
}

TEST_CASE("optimal iteration count nearly always succeeds") {
  // j* = round(pi / (4 theta) - 1/2) leaves the final angle within theta of pi/2.
  for (std::size_t n = 4; n <= 1024; ++n) {
    const double theta = std::asin(std::sqrt(1.0 / static_cast<double>(n)));
    const auto j = static_cast<std::uint64_t>(std::llround(std::numbers::pi / (4 * theta) - 0.5));
    CHECK(success_probability(n, 1, j) >= 1.0 - 1.0 / static_cast<double>(n) - 1e-12);
  }
  // The cruder floor((pi/4) sqrt N) count is still close to certain.
  for (std::size_t n = 4; n <= 1024; ++n) {
    const auto j = static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4 * std::sqrt(static_cast<double>(n))));
    CHECK(success_probability(n, 1, j) >= 1.0 - 2.0 / static_cast<double>(n));
  }
}

TEST_CASE("grover_measure extremes and charging") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(3);
  auto all = instance(8, {0, 1, 2, 3, 4, 5, 6, 7});
  std::vector<std::size_t> counts(8, 0);
  for (int i = 0; i < 8000; ++i) ++counts[grover_measure(all, 0, rng, o)];
  CHECK(testing::chi_square_uniform_p(counts) > 0.001);

  auto none = instance(8, {});
  for (int i = 0; i < 200; ++i) CHECK(!none.is_marked(grover_measure(none, 3, rng, o)));
  CHECK(o.ledger().adj_quantum == 600);

  auto nbr = instance(8, {2}, QuantumKind::neighborhood);
  grover_measure(nbr, 5, rng, o);
  CHECK(o.ledger().nbr_quantum == 10);
  CHECK(o.ledger().nbr_classical + o.ledger().adj_classical == 0);
}

TEST_CASE("unmarked samples are uniform over the unmarked set") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(4);
  auto inst = instance(12, {0, 3, 4, 11});
  std::vector<std::size_t> counts(12, 0);
  for (int i = 0; i < 40000; ++i) ++counts[grover_measure(inst, 0, rng, o)];
  std::vector<std::size_t> unmarked, marked;
  for (std::size_t i = 0; i < 12; ++i) (inst.is_marked(i) ? marked : unmarked).push_back(counts[i]);
  CHECK(testing::chi_square_uniform_p(unmarked) > 0.001);
  CHECK(testing::chi_square_uniform_p(marked) > 0.001);
}

TEST_CASE("grover_measure frequency matches closed form") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(99);
  auto inst = instance(16, {1, 9});
  const int trials = 100000;
  int hits = 0;
  for (int i = 0; i < trials; ++i) hits += inst.is_marked(grover_measure(inst, 2, rng, o));
  const double p = success_probability(16, 2, 2);
  const double sigma = std::sqrt(trials * p * (1 - p));
  CHECK(std::abs(hits - trials * p) <= 3 * sigma);
}

TEST_CASE("schedule length") {
  CHECK(bbht_schedule_length(16) == 9);
  CHECK(bbht_schedule_length(1) == 1);
  for (std::size_t n : {2u, 4u, 7u, 64u, 1000u, 4096u}) CHECK(bbht_schedule_length(n) == schedule(n).size());
}

TEST_CASE("bbht with everything marked") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(7);
  auto inst = instance(1, {0});
  auto out = bbht_search(inst, [&](std::size_t i) { return inst.is_marked(i); }, rng, o);
  REQUIRE(out.found.has_value());
  CHECK(*out.found == 0);
  CHECK(out.phases == 1);
  CHECK(out.quantum_queries_charged <= 1);
  CHECK(out.classical_verifications == 1);
}

TEST_CASE("bbht with nothing marked exhausts the schedule") {
  Graph g = gen_edgeless(2);
  Rng rng(8);
  for (unsigned passes : {1u, 2u}) {
    OracleHandle o(g);
    auto inst = instance(16, {}, QuantumKind::neighborhood);
    auto out = bbht_search(inst, [&](std::size_t i) { return inst.is_marked(i); }, rng, o, {passes});
    CHECK(!out.found);
    CHECK(out.phases == 9 * passes);
    CHECK(out.classical_verifications == 9 * passes);
    CHECK(o.ledger().nbr_quantum == out.quantum_queries_charged);
    CHECK(out.quantum_queries_charged == out.iterations_used * 2);
    // Each phase draws j <= floor(m), so the charge is at most cost * passes * sum(floor m).
    double bound = 0;
    for (double m : schedule(16)) bound += std::floor(m);
    CHECK(out.quantum_queries_charged <= 2 * passes * bound);
    CHECK(out.quantum_queries_charged <= 12 * 2 * 4);
  }
}

TEST_CASE("bbht finds marked items uniformly") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(31337);
  std::vector<std::size_t> marked{3, 10, 17, 22, 40, 41, 55, 63};
  auto inst = instance(64, marked);
  std::vector<std::size_t> counts(marked.size(), 0);
  int found = 0;
  const int runs = 10000;
  for (int i = 0; i < runs; ++i) {
    auto out = bbht_search(inst, [&](std::size_t idx) { return inst.is_marked(idx); }, rng, o);
    if (!out.found) continue;
    ++found;
    CHECK(inst.is_marked(*out.found));
    ++counts[std::find(marked.begin(), marked.end(), *out.found) - marked.begin()];
  }
  CHECK(found >= 0.99 * runs);
  CHECK(testing::chi_square_uniform_p(counts) > 0.01);
}

TEST_CASE("verification gate is one-sided") {
  // A verifier that rejects everything means nothing is ever reported found.
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(1);
  for (auto mode : {SearchMode::dynamics, SearchMode::cost_model}) {
    auto inst = instance(32, {4, 5}, QuantumKind::adjacency, mode);
    for (int i = 0; i < 100; ++i) {
      auto out = search(inst, [](std::size_t) { return false; }, rng, o);
      CHECK(!out.found);
    }
  }
}

TEST_CASE("cost model charges") {
  Graph g = gen_edgeless(2);
  Rng rng(2);
  {
    OracleHandle o(g);
    auto out = cost_model_search(instance(100, {}, QuantumKind::adjacency, SearchMode::cost_model, 1.0), rng, o);
    CHECK(!out.found);
    CHECK(out.quantum_queries_charged == 10);
    CHECK(o.ledger().adj_quantum == 10);
  }
  {
    OracleHandle o(g);
    std::vector<std::size_t> all(100);
    for (std::size_t i = 0; i < 100; ++i) all[i] = i;
    auto out = cost_model_search(instance(100, all, QuantumKind::neighborhood, SearchMode::cost_model, 1.0), rng, o);
    CHECK(out.found.has_value());
    CHECK(out.quantum_queries_charged == 2);
    CHECK(o.ledger().nbr_quantum == 2);
  }
  {
    OracleHandle o(g);
    auto out = cost_model_search(instance(64, {1, 2, 3, 4}, QuantumKind::adjacency, SearchMode::cost_model), rng, o);
    CHECK(out.quantum_queries_charged == 18);
    CHECK(out.classical_verifications == 0);
  }
}

TEST_CASE("cost model returns marked items uniformly") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(77);
  std::vector<std::size_t> marked{0, 2, 5, 7, 9, 11, 13, 15, 16, 19, 20, 21, 22, 23, 24, 25};
  auto inst = instance(30, marked, QuantumKind::adjacency, SearchMode::cost_model);
  std::vector<std::size_t> counts(marked.size(), 0);
  for (int i = 0; i < 10000; ++i) {
    auto out = cost_model_search(inst, rng, o);
    REQUIRE(out.found.has_value());
    ++counts[std::find(marked.begin(), marked.end(), *out.found) - marked.begin()];
  }
  CHECK(testing::chi_square_uniform_p(counts) > 0.01);
}

TEST_CASE("search in cost-model mode verifies once") {
  Graph g = gen_edgeless(2);
  OracleHandle o(g);
  Rng rng(5);
  auto inst = instance(16, {3}, QuantumKind::adjacency, SearchMode::cost_model);
  int calls = 0;
  auto out = search(inst, [&](std::size_t i) { ++calls; return inst.is_marked(i); }, rng, o);
  CHECK(out.found == std::optional<std::size_t>(3));
  CHECK(out.classical_verifications == 1);
  CHECK(calls == 1);
}

TEST_CASE("instances built from the oracle") {
  Graph g = gen_clique(5);
  OracleHandle o(g);
  std::vector<Edge> edges{{0, 2}, {0, 4}, {1, 2}};
  Graph h = Graph::from_edges(5, edges);
  OracleHandle oh(h);
  std::vector<Vertex> candidates{1, 2, 3, 4};
  auto adj = adjacency_instance(oh, 0, candidates, SearchMode::dynamics);
  CHECK(adj.size == 4);
  CHECK(adj.marked == std::vector<std::size_t>{1, 3});
  auto nbr = neighborhood_instance(o, 0, 4, [](Vertex u) { return u % 2 == 0; }, SearchMode::cost_model);
  CHECK(nbr.size == 4);
  CHECK(nbr.query_kind == QuantumKind::neighborhood);
  CHECK(nbr.marked_count() == 2);
  CHECK(o.ledger().total() + oh.ledger().total() == 0);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(instance(0, {}), ParameterError);
  CHECK_THROWS_AS(instance(4, {4}), ParameterError);
  CHECK_THROWS_AS(instance(4, {1}, QuantumKind::adjacency, SearchMode::cost_model, 0.0), ParameterError);
}
