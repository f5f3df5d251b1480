#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/vertex_set.hpp"

namespace edgereg {

// Squarefree monomial ideal in S = k[x_0, ..., x_{n-1}], stored as the
// supports of its minimal generators. The zero and unit ideals are flagged
// instead of being encoded through degenerate generator lists.
class SquarefreeIdeal {
 public:
  enum class Kind { zero, unit, proper };

  static SquarefreeIdeal zero(int n_vars);
  static SquarefreeIdeal unit(int n_vars);
  // Minimalizes to an antichain. No generators gives the zero ideal, an
  // empty support the unit ideal.
  static SquarefreeIdeal from_generators(int n_vars, std::vector<VertexSet> gens);

  int n_vars() const { return n_vars_; }
  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_unit() const { return kind_ == Kind::unit; }
  // Sorted by degree, then lexicographically.
  std::span<const VertexSet> generators() const { return gens_; }
  // Variables that occur in some generator.
  VertexSet support() const;
  int min_degree() const;
  int max_degree() const;

  // Graph vertex behind each variable (identity unless built from a graph).
  const std::vector<int>& var_labels() const { return var_labels_; }
  SquarefreeIdeal with_labels(std::vector<int> labels) const;

  bool operator==(const SquarefreeIdeal& o) const {
    return n_vars_ == o.n_vars_ && kind_ == o.kind_ && gens_ == o.gens_;
  }

  std::string to_string() const;  // e.g. "(x0*x1, x1*x2)"

 private:
  int n_vars_ = 0;
  Kind kind_ = Kind::zero;
  std::vector<VertexSet> gens_;
  std::vector<int> var_labels_;
};

// Drops every support that strictly contains another, and duplicates.
std::vector<VertexSet> minimalize(std::vector<VertexSet> sets);
// Keeps the inclusion-maximal sets only.
std::vector<VertexSet> maximalize(std::vector<VertexSet> sets);
void sort_supports(std::vector<VertexSet>& sets);

// Simplicial complex given by its facets. The void complex has no faces at
// all; the empty complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int n_vars);
  static SimplicialComplex from_facets(int n_vars, std::vector<VertexSet> faces);

  int n_vars() const { return n_vars_; }
  std::span<const VertexSet> facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }
  int dimension() const;  // -1 for {∅}; -2 for the void complex
  bool contains(VertexSet face) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_vars_ = 0;
  std::vector<VertexSet> facets_;
};

// Edge ideal on the non-isolated vertices of g, renumbered in order;
// var_labels() maps each variable back to its vertex in g.
SquarefreeIdeal edge_ideal(const Graph& g);

// (I, x_v : v in vars)
SquarefreeIdeal add_variables(const SquarefreeIdeal& ideal, VertexSet vars);
// (I : x_v)
SquarefreeIdeal colon(const SquarefreeIdeal& ideal, int var);

// Faces are the squarefree monomials outside I. Throws on the unit ideal.
SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal);

// Maximal independent sets of g, by pivoting Bron-Kerbosch on cliques of
// the complement, restricted to `within`.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Inclusion-minimal sets meeting every edge of the hypergraph. Branches on
// the elements of an unhit edge; elements tried earlier in the same edge
// are excluded from later branches, so each transversal appears once.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges);

// Generated by the products over the minimal primes of I. Throws
// std::domain_error on the zero or unit ideal.
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal);
int big_height(const SquarefreeIdeal& ideal);

// Squarefree cubics of m * I(g), i.e. all {x,y,z} containing an edge, over
// the variables of edge_ideal(g). Throws std::invalid_argument when fewer
// than three variables remain.
SquarefreeIdeal cubic_thickening(const Graph& g);

// Text format: header "n_vars k", then one generator per line as sorted
// variable indices separated by spaces. An empty line is the unit monomial.
std::string to_text(const SquarefreeIdeal& ideal);
SquarefreeIdeal read_ideal(std::istream& in);

}  // namespace edgereg
