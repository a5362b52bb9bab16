#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "qcolor/coloring.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/graph.hpp"
#include "qcolor/rng.hpp"
#include "test_support.hpp"

using namespace qcolor;

TEST_CASE("gnp extremes") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    Graph empty = gen_gnp(5, 0.0, seed);
    CHECK(empty.edge_count() == 0);
    CHECK(empty.max_degree() == 0);
    Graph full = gen_gnp(5, 1.0, seed);
    CHECK(full.edge_count() == 10);
    CHECK(full.max_degree() == 4);
  }
  CHECK_THROWS_AS(gen_gnp(5, -0.1, 1), ParameterError);
  CHECK_THROWS_AS(gen_gnp(5, 1.5, 1), ParameterError);
}

TEST_CASE("gnp edge count is binomial") {
  Graph g = gen_gnp(1000, 0.5, 7);
  const double mean = 499500 * 0.5;
  const double sigma = std::sqrt(499500 * 0.25);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) <= 4 * sigma);
}

TEST_CASE("gnp pair frequencies are uniform") {
  // Every pair of a small graph should appear with frequency p over many seeds.
  const std::size_t n = 6, reps = 4000;
  const double p = 0.3;
  std::vector<std::size_t> hits(n * n, 0);
  for (std::size_t s = 0; s < reps; ++s) {
    Graph g = gen_gnp(n, p, s);
    for (auto [u, v] : g.canonical_edges()) ++hits[u * n + v];
  }
  const double sigma = std::sqrt(reps * p * (1 - p));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) CHECK(std::abs(hits[u * n + v] - reps * p) <= 4.5 * sigma);
}

TEST_CASE("generators are deterministic including neighbor order") {
  Graph a = gen_gnp(200, 0.1, 42);
  Graph b = gen_gnp(200, 0.1, 42);
  Graph c = gen_gnp(200, 0.1, 43);
  CHECK(a.canonical_edges() == b.canonical_edges());
  CHECK(a.canonical_edges() != c.canonical_edges());
  for (Vertex v = 0; v < 200; ++v) {
    auto na = a.neighbors(v), nb = b.neighbors(v);
    CHECK(std::equal(na.begin(), na.end(), nb.begin(), nb.end()));
  }
}

TEST_CASE("neighbor order modes") {
  GraphOptions asc;
  asc.order = NeighborOrder::ascending;
  Graph sorted = gen_gnp(300, 0.2, 5, asc);
  Graph shuffled = gen_gnp(300, 0.2, 5);
  CHECK(sorted.canonical_edges() == shuffled.canonical_edges());
  bool some_unsorted = false;
  for (Vertex v = 0; v < 300; ++v) {
    auto s = sorted.neighbors(v);
    CHECK(std::is_sorted(s.begin(), s.end()));
    auto r = shuffled.neighbors(v);
    if (!std::is_sorted(r.begin(), r.end())) some_unsorted = true;
  }
  CHECK(some_unsorted);
}

TEST_CASE("graph invariants hold for every generator") {
  std::vector<Graph> graphs;
  graphs.push_back(gen_gnp(128, 0.25, 3));
  graphs.push_back(gen_clique(9));
  graphs.push_back(gen_cycle(11));
  graphs.push_back(gen_edgeless(7));
  graphs.push_back(gen_near_regular(100, 6, 4));
  graphs.push_back(gen_gnp(300, 0.05, 8, {NeighborOrder::seeded_random, 16}));  // sorted-list index path
  for (const Graph& g : graphs) {
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      std::set<Vertex> uniq(nb.begin(), nb.end());
      CHECK(uniq.size() == nb.size());
      CHECK(!uniq.count(v));
      for (Vertex u : nb) {
        auto back = g.neighbors(u);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
        CHECK(g.adjacent(u, v));
      }
      max_deg = std::max(max_deg, nb.size());
    }
    CHECK(max_deg == g.max_degree());
  }
}

TEST_CASE("adjacency index agrees with neighbor lists in both storage modes") {
  Graph matrix = gen_gnp(150, 0.3, 11);
  Graph lists = gen_gnp(150, 0.3, 11, {NeighborOrder::seeded_random, 10});
  CHECK(matrix.uses_matrix());
  CHECK(!lists.uses_matrix());
  for (Vertex u = 0; u < 150; ++u) {
    std::set<Vertex> nb(matrix.neighbors(u).begin(), matrix.neighbors(u).end());
    for (Vertex v = 0; v < 150; ++v) {
      CHECK(matrix.adjacent(u, v) == (nb.count(v) == 1));
      CHECK(lists.adjacent(u, v) == (nb.count(v) == 1));
    }
  }
}

TEST_CASE("clique, cycle and edgeless") {
  CHECK(gen_clique(1).max_degree() == 0);
  CHECK(gen_clique(2).edge_count() == 1);
  Graph k6 = gen_clique(6);
  CHECK(k6.edge_count() == 15);
  CHECK(k6.max_degree() == 5);
  CHECK(testing::chromatic_number(k6) == 6);

  CHECK(testing::chromatic_number(gen_cycle(3)) == 3);
  CHECK(testing::chromatic_number(gen_cycle(4)) == 2);
  CHECK(testing::chromatic_number(gen_cycle(5)) == 3);
  CHECK(gen_cycle(5).max_degree() == 2);
  CHECK_THROWS_AS(gen_cycle(2), ParameterError);
  CHECK(gen_edgeless(4).edge_count() == 0);
}

TEST_CASE("near-regular degrees") {
  Graph g = gen_near_regular(512, 20, 9);
  CHECK(g.max_degree() <= 20);
  // A vertex loses one degree per repeated matching partner: about C(20,2)/511 per vertex.
  const double mean = 2.0 * static_cast<double>(g.edge_count()) / 512;
  CHECK(mean > 20 - 2 * 190.0 / 511);
  CHECK(mean <= 20);
}

TEST_CASE("from_edges rejects bad input") {
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), ParameterError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), ParameterError);
  std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, range), ParameterError);
  std::vector<std::vector<Vertex>> asym{{1}, {}};
  CHECK_THROWS_AS(Graph::from_neighbor_lists(asym), ParameterError);
}

TEST_CASE("from_edges keeps edge order as neighbor order") {
  std::vector<Edge> edges{{0, 3}, {0, 1}, {2, 0}};
  Graph g = Graph::from_edges(4, edges);
  auto nb = g.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{3, 1, 2});
}

TEST_CASE("edge list parsing") {
  {
    std::istringstream in("3 0\n");
    Graph g = load_edge_list(in);
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 0);
  }
  {
    std::istringstream in("3 3\n0 1\n0 2\n1 2\n");
    Graph g = load_edge_list(in);
    CHECK(g.edge_count() == 3);
    CHECK(g.max_degree() == 2);
  }
  auto error_line = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      load_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("3 2\n0 1\nx y\n") == 3);
  CHECK(error_line("3 2\n0 1\n0 3\n") == 3);
  CHECK(error_line("3 2\n0 1\n0 1\n") == 3);
  CHECK(error_line("3 1\n1 1\n") == 2);
  CHECK(error_line("3 1\n2 1\n") == 2);
  CHECK(error_line("3 2\n0 1\n") != 0);
  CHECK(error_line("3 1\n0 1\n1 2\n") != 0);
  CHECK(error_line("three\n") == 1);
}

TEST_CASE("edge list round trip on fuzzed files") {
  Rng rng(2024);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng.below(40);
    std::set<Edge> edges;
    const std::size_t attempts = rng.below(3 * n + 1);
    for (std::size_t a = 0; a < attempts && n > 1; ++a) {
      Vertex u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
      if (u == v) continue;
      edges.insert({std::min(u, v), std::max(u, v)});
    }
    // Shuffle the lines so the file is not canonical.
    std::vector<Edge> lines(edges.begin(), edges.end());
    rng.shuffle(std::span<Edge>(lines));
    std::ostringstream text;
    text << n << ' ' << lines.size() << '\n';
    for (auto [u, v] : lines) text << u << ' ' << v << '\n';

    std::istringstream in(text.str());
    Graph g = load_edge_list(in);
    std::ostringstream saved;
    save_edge_list(g, saved);

    std::ostringstream canonical;
    canonical << n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) canonical << u << ' ' << v << '\n';
    CHECK(saved.str() == canonical.str());

    std::istringstream again(saved.str());
    CHECK(load_edge_list(again).canonical_edges() == g.canonical_edges());
  }
}

TEST_CASE("coloring container") {
  Coloring c(4, 3);
  CHECK(!c.complete());
  c.assign(0, 2);
  c.assign(3, 2);
  c.assign(1, 1);
  CHECK_THROWS_AS(c.assign(0, 1), UsageError);
  CHECK_THROWS_AS(c.assign(2, 4), UsageError);
  CHECK_THROWS_AS(c.assign(2, 0), UsageError);
  auto cls = c.color_class(2);
  CHECK(std::vector<Vertex>(cls.begin(), cls.end()) == std::vector<Vertex>{0, 3});
  c.assign(2, 3);
  CHECK(c.complete());
  CHECK(c.colors_used() == 3);
  // Classes are the exact inverse of the assignment.
  for (Color col = 1; col <= 3; ++col)
    for (Vertex v : c.color_class(col)) CHECK(c.color(v) == col);
}

TEST_CASE("verify_coloring") {
  Graph tri = gen_clique(3);
  auto colored = [](std::vector<Color> colors) {
    Coloring c(colors.size(), *std::max_element(colors.begin(), colors.end()));
    for (std::size_t v = 0; v < colors.size(); ++v) c.assign(static_cast<Vertex>(v), colors[v]);
    return c;
  };
  auto good = verify_coloring(tri, colored({1, 2, 3}), 3);
  CHECK(good.proper);
  CHECK(good.colors_used == 3);
  CHECK(good.ok());
  auto bad = verify_coloring(tri, colored({1, 1, 2}), 3);
  CHECK(!bad.proper);
  REQUIRE(bad.violation.has_value());
  CHECK(*bad.violation == Edge{0, 1});
  CHECK(!verify_coloring(tri, colored({1, 2, 3}), 2).within_bound);
  Coloring partial(3, 3);
  partial.assign(0, 1);
  CHECK_THROWS_AS(verify_coloring(tri, partial, 3), IncompleteColoringError);
}

TEST_CASE("coloring file round trip and errors") {
  Coloring c(3, 5);
  c.assign(0, 5);
  c.assign(1, 1);
  c.assign(2, 2);
  std::ostringstream out;
  save_coloring(c, out);
  CHECK(out.str() == "3 5\n0 5\n1 1\n2 2\n");
  std::istringstream in(out.str());
  Coloring back = load_coloring(in);
  CHECK(std::equal(back.assignment().begin(), back.assignment().end(), c.assignment().begin()));

  auto fails = [](const std::string& text) {
    std::istringstream s(text);
    return testing::throws_parse_error([&] { load_coloring(s); });
  };
  CHECK(fails("3 5\n0 6\n"));
  CHECK(fails("3 5\n3 1\n"));
  CHECK(fails("3 5\n0 1\n0 2\n"));
  CHECK(fails("bad\n"));
}
