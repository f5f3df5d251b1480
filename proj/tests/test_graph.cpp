#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgereg/generators.hpp"
#include "edgereg/graph.hpp"
#include "oracles.hpp"

using namespace edgereg;

TEST_CASE("vertex sets") {
  const VertexSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.lowest() == 0);
  CHECK(s.highest() == 5);
  CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
  CHECK((s - VertexSet{3}) == VertexSet{0, 5});
  CHECK(VertexSet::prefix(64).size() == 64);
  CHECK(VertexSet::prefix(0).empty());

  // Tuple order: (0,5) < (1,2) < (1,2,3).
  CHECK(lex_less(VertexSet{0, 5}, VertexSet{1, 2}));
  CHECK(lex_less(VertexSet{1, 2}, VertexSet{1, 3}));
  CHECK(lex_less(VertexSet{1, 2}, VertexSet{1, 2, 3}));
  CHECK_FALSE(lex_less(VertexSet{1, 2, 3}, VertexSet{1, 2}));
  CHECK_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
  CHECK(lex_less(VertexSet{}, VertexSet{0}));
}

TEST_CASE("lex order agrees with tuple comparison") {
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      const auto ta = VertexSet(a).to_vector();
      const auto tb = VertexSet(b).to_vector();
      CHECK(lex_less(VertexSet(a), VertexSet(b)) == (ta < tb));
    }
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_NOTHROW(Graph(64));
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(Graph::from_rows({VertexSet{1}, VertexSet{}}), std::invalid_argument);
}

TEST_CASE("complement is an involution") {
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen::gnp(1 + t % 12, 0.3 + (t % 5) * 0.1, 100 + t);
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.edge_count() + c.edge_count() == g.order() * (g.order() - 1) / 2);
  }
}

TEST_CASE("removal keeps labels") {
  const Graph p4 = gen::path(4);  // 0-1-2-3
  const Graph star = remove(p4, 1, RemoveMode::star);
  CHECK(star.order() == 1);
  CHECK(star.labels() == std::vector<int>{3});
  const Graph del = remove(p4, 1, RemoveMode::vertex);
  CHECK(del.order() == 3);
  CHECK(del.labels() == std::vector<int>{0, 2, 3});
  CHECK(del.edge_count() == 1);
  const Graph again = remove(del, 1, RemoveMode::vertex);
  CHECK(again.labels() == std::vector<int>{0, 3});
}

TEST_CASE("edge degree and stats") {
  const Graph k23 = gen::complete_bipartite(2, 3);
  CHECK(edge_degree(k23, 0, 2) == 5);
  CHECK_THROWS_AS(edge_degree(k23, 0, 1), std::invalid_argument);

  const EdgeStats p3 = degree_stats(gen::path(3));
  CHECK(p3.d_max == 2);
  CHECK(*p3.D_max == 3);
  CHECK(*p3.C_clawfree == 3);

  const EdgeStats c5 = degree_stats(gen::cycle(5));
  CHECK(*c5.D_max == 4);
  CHECK(*c5.C_clawfree == 4);

  const EdgeStats empty = degree_stats(Graph(4));
  CHECK_FALSE(empty.D_max.has_value());
  CHECK(empty.d_max == 0);
}

TEST_CASE("distances against Floyd-Warshall") {
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen::gnp(1 + t % 10, 0.25, 7 * t + 1);
    const auto ref = oracle::all_distances(g);
    for (int u = 0; u < g.order(); ++u) {
      const auto d = distances_from(g, u);
      for (int v = 0; v < g.order(); ++v) {
        CHECK(d[v].value_or(-1) == ref[u][v]);
      }
    }
  }
  CHECK_FALSE(distance(Graph(2), 0, 1).has_value());
  CHECK(*distance(gen::cycle(6), 0, 3) == 3);
}

TEST_CASE("gaps and claws against brute force, n <= 5 exhaustive") {
  for (int n = 0; n <= 5; ++n) {
    GraphStream s = gen::all_labeled(n);
    while (auto g = s()) {
      CHECK(is_gap_free(*g) == !oracle::has_gap(*g));
      CHECK(is_claw_free(*g) == !oracle::has_claw(*g));
      if (auto gap = find_gap(*g)) {
        const VertexSet a{gap->first.u, gap->first.v};
        const VertexSet b{gap->second.u, gap->second.v};
        CHECK_FALSE(a.intersects(b));
        CHECK_FALSE((g->neighbors(gap->first.u) | g->neighbors(gap->first.v)).intersects(b));
      }
      if (auto claw = find_claw(*g)) {
        for (int leaf : claw->leaves) CHECK(g->adjacent(claw->center, leaf));
        CHECK_FALSE(g->adjacent(claw->leaves[0], claw->leaves[1]));
        CHECK_FALSE(g->adjacent(claw->leaves[0], claw->leaves[2]));
        CHECK_FALSE(g->adjacent(claw->leaves[1], claw->leaves[2]));
      }
    }
  }
  CHECK_FALSE(is_gap_free(gen::disjoint_edges(2)));
  CHECK(is_gap_free(gen::cycle(5)));
  CHECK_FALSE(is_gap_free(gen::cycle(6)));
  CHECK_FALSE(is_claw_free(gen::complete_bipartite(1, 3)));
}

TEST_CASE("induced cycle spectrum against subset enumeration") {
  for (int n = 0; n <= 6; ++n) {
    GraphStream s = gen::all_labeled(n);
    while (auto g = s()) {
      REQUIRE(induced_cycle_spectrum(*g, n) == oracle::induced_cycle_lengths(*g));
    }
  }
  for (int t = 0; t < 300; ++t) {
    const Graph g = gen::gnp(7 + t % 6, 0.2 + 0.1 * (t % 6), 1000 + t);
    CHECK(induced_cycle_spectrum(g, g.order()) == oracle::induced_cycle_lengths(g));
  }
}

TEST_CASE("spectrum truncation and shortest cycle") {
  const Graph c7 = gen::cycle(7);
  CHECK(cycle_lengths(induced_cycle_spectrum(c7, 7)) == std::vector<int>{7});
  CHECK(induced_cycle_spectrum(c7, 6) == 0);
  CHECK(*shortest_induced_cycle(c7, 4) == 7);
  CHECK_FALSE(shortest_induced_cycle(c7, 8).has_value());
  CHECK_FALSE(shortest_induced_cycle(gen::complete(6), 4).has_value());
  CHECK(*shortest_induced_cycle(gen::complete(3), 3) == 3);
}

TEST_CASE("combinatorial linearity steps") {
  // C5 is self-complementary: an induced C5 in the complement, k = 1.
  CHECK(*linearity_steps_combinatorial(gen::cycle(5)) == 1);
  // C4 complement is 2K2: no induced cycles.
  CHECK_FALSE(linearity_steps_combinatorial(gen::cycle(4)).has_value());
  CHECK(*linearity_steps_combinatorial(complement(gen::cycle(6))) == 2);
  CHECK(*linearity_steps_combinatorial(gen::disjoint_edges(2)) == 0);
  CHECK_FALSE(linearity_steps_combinatorial(Graph(3)).has_value());
}
