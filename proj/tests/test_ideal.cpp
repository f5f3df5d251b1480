#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "edgereg/generators.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/ideal.hpp"
#include "oracles.hpp"

using namespace edgereg;

namespace {

std::vector<std::uint64_t> bits_of(std::span<const VertexSet> sets) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

SquarefreeIdeal random_ideal(SplitMix64& rng, int n) {
  std::vector<VertexSet> gens;
  const int k = rng.between(1, 6);
  for (int i = 0; i < k; ++i) {
    VertexSet g;
    const int d = rng.between(1, std::min(n, 4));
    while (g.size() < d) g.insert(rng.between(0, n - 1));
    gens.push_back(g);
  }
  return SquarefreeIdeal::from_generators(n, gens);
}

}  // namespace

TEST_CASE("generators are minimalized and ordered") {
  const auto I = SquarefreeIdeal::from_generators(4, {VertexSet{0, 1, 2}, VertexSet{2, 3}, VertexSet{0, 1}, VertexSet{0, 1}});
  REQUIRE(I.generators().size() == 2);
  CHECK(I.to_string() == "(x0*x1, x2*x3)");
  CHECK(I.min_degree() == 2);
  CHECK(I.support() == VertexSet{0, 1, 2, 3});

  CHECK(SquarefreeIdeal::from_generators(3, {}).is_zero());
  CHECK(SquarefreeIdeal::from_generators(3, {VertexSet{}, VertexSet{1}}).is_unit());
  CHECK(SquarefreeIdeal::zero(2).to_string() == "(0)");
  CHECK(SquarefreeIdeal::unit(2).to_string() == "(1)");
  CHECK_THROWS_AS(SquarefreeIdeal::from_generators(2, {VertexSet{2}}), std::invalid_argument);
}

TEST_CASE("edge ideals drop isolated vertices") {
  const Graph g = Graph::from_edges(5, {{1, 3}, {3, 4}});
  const SquarefreeIdeal I = edge_ideal(g);
  CHECK(I.n_vars() == 3);
  CHECK(I.var_labels() == std::vector<int>{1, 3, 4});
  CHECK(I.to_string() == "(x0*x1, x1*x2)");
  CHECK(edge_ideal(Graph(4)).is_zero());
  CHECK(edge_ideal(Graph(4)).n_vars() == 0);
}

TEST_CASE("colon and added variables") {
  const SquarefreeIdeal p3 = edge_ideal(gen::path(3));
  CHECK(colon(p3, 0).to_string() == "(x1)");
  CHECK(colon(p3, 1).to_string() == "(x0, x2)");
  CHECK(colon(add_variables(p3, VertexSet{0}), 2).to_string() == "(x0, x1)");
  CHECK(add_variables(p3, VertexSet{0, 2}).to_string() == "(x0, x2)");
  const SquarefreeIdeal k2 = edge_ideal(gen::complete(2));
  CHECK(colon(add_variables(k2, VertexSet{0}), 1).is_unit() == false);
  CHECK(colon(SquarefreeIdeal::from_generators(2, {VertexSet{0}}), 0).is_unit());
  CHECK_THROWS_AS(colon(p3, 3), std::invalid_argument);
}

TEST_CASE("colon by x equals the ideal of G minus the star of x, plus N(x)") {
  // (I(G) : x) = I(G - st x) + (N(x)) on the variables of G.
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen::gnp(6, 0.5, t);
    const SquarefreeIdeal I = edge_ideal(g);
    if (I.is_zero()) continue;
    for (int x = 0; x < I.n_vars(); ++x) {
      const SquarefreeIdeal c = colon(I, x);
      VertexSet nbrs;
      for (VertexSet e : I.generators()) {
        if (e.contains(x)) nbrs |= e.without(x);
      }
      std::vector<VertexSet> expect;
      for (int y : nbrs) expect.push_back(VertexSet{y});
      for (VertexSet e : I.generators()) {
        if (!e.contains(x) && !e.intersects(nbrs)) expect.push_back(e);
      }
      CHECK(c == SquarefreeIdeal::from_generators(I.n_vars(), expect));
    }
  }
}

TEST_CASE("maximal independent sets against brute force") {
  for (int n = 0; n <= 6; ++n) {
    GraphStream s = gen::all_labeled(n);
    while (auto g = s()) {
      REQUIRE(bits_of(maximal_independent_sets(*g)) == oracle::maximal_independent_sets(*g));
    }
  }
}

TEST_CASE("minimal transversals against brute force") {
  SplitMix64 rng(4);
  for (int t = 0; t < 500; ++t) {
    const int n = rng.between(1, 8);
    const SquarefreeIdeal I = random_ideal(rng, n);
    const auto mine = bits_of(minimal_transversals(I.generators()));
    CHECK(mine == oracle::minimal_hitting_sets(bits_of(I.generators()), n));
  }
}

TEST_CASE("Alexander duality") {
  CHECK(alexander_dual(edge_ideal(gen::path(3))).to_string() == "(x1, x0*x2)");
  CHECK(alexander_dual(edge_ideal(gen::cycle(4))).to_string() == "(x0*x2, x1*x3)");
  CHECK(alexander_dual(edge_ideal(gen::complete(2))).to_string() == "(x0, x1)");
  CHECK_THROWS_AS(alexander_dual(SquarefreeIdeal::zero(3)), std::domain_error);
  CHECK_THROWS_AS(alexander_dual(SquarefreeIdeal::unit(3)), std::domain_error);

  SplitMix64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const SquarefreeIdeal I = random_ideal(rng, rng.between(1, 9));
    CHECK(alexander_dual(alexander_dual(I)) == I);
  }
}

TEST_CASE("big height is the largest minimal vertex cover") {
  CHECK(big_height(edge_ideal(gen::cycle(5))) == 3);
  CHECK(big_height(edge_ideal(gen::complete_bipartite(2, 3))) == 3);
  CHECK(big_height(edge_ideal(gen::complete(4))) == 3);
  CHECK(big_height(edge_ideal(gen::disjoint_edges(3))) == 3);
}

TEST_CASE("Stanley-Reisner complexes") {
  SplitMix64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.between(1, 7);
    const SquarefreeIdeal I = random_ideal(rng, n);
    const SimplicialComplex d = stanley_reisner_complex(I);
    // A set is a face iff it contains no generator.
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      bool face = true;
      for (VertexSet g : I.generators()) face = face && !g.subset_of(VertexSet(s));
      CHECK(d.contains(VertexSet(s)) == face);
    }
  }
  const SimplicialComplex c4 = stanley_reisner_complex(edge_ideal(gen::cycle(4)));
  CHECK(bits_of(c4.facets()) == std::vector<std::uint64_t>{0b0101, 0b1010});
  CHECK(stanley_reisner_complex(SquarefreeIdeal::zero(2)).dimension() == 1);
  // Every variable a generator: only the empty face.
  const SimplicialComplex empty = stanley_reisner_complex(SquarefreeIdeal::from_generators(2, {VertexSet{0}, VertexSet{1}}));
  CHECK(empty.is_empty_complex());
  CHECK(empty.dimension() == -1);
  CHECK(SimplicialComplex::void_complex(2).dimension() == -2);
  CHECK_THROWS_AS(stanley_reisner_complex(SquarefreeIdeal::unit(2)), std::domain_error);
}

TEST_CASE("cubic thickening") {
  CHECK(cubic_thickening(gen::complete(3)).to_string() == "(x0*x1*x2)");
  CHECK(cubic_thickening(gen::path(3)).to_string() == "(x0*x1*x2)");
  // 2K2 on four variables: every squarefree cubic contains an edge.
  CHECK(cubic_thickening(gen::disjoint_edges(2)).generators().size() == 4);
  // C5 has no independent triple, so all ten cubics appear.
  CHECK(cubic_thickening(gen::cycle(5)).generators().size() == 10);
  CHECK_THROWS_AS(cubic_thickening(gen::complete(2)), std::invalid_argument);
  const Graph g = Graph::from_edges(5, {{1, 2}, {2, 4}});
  CHECK(cubic_thickening(g).var_labels() == std::vector<int>{1, 2, 4});
}

TEST_CASE("ideal text format") {
  SplitMix64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const SquarefreeIdeal I = random_ideal(rng, rng.between(1, 12));
    std::istringstream in(to_text(I));
    CHECK(read_ideal(in) == I);
  }
  std::istringstream unit("3 1\n\n");
  CHECK(read_ideal(unit).is_unit());
  std::istringstream zero("3 0\n");
  CHECK(read_ideal(zero).is_zero());
  std::istringstream bad("3 1\n0 5\n");
  CHECK_THROWS_AS(read_ideal(bad), InputError);
  std::istringstream junk("3 1\n0 a\n");
  CHECK_THROWS_AS(read_ideal(junk), InputError);
  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(read_ideal(truncated), InputError);
}
