#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgereg/vertex_set.hpp"

namespace edgereg {

struct Edge {
  int u;
  int v;
  bool operator==(const Edge&) const = default;
};

// Labeled simple graph on at most 64 vertices. Adjacency rows are bitsets.
// Values are immutable once built; every operation returns a new graph.
//
// `labels()` records, for each vertex, its index in the graph this one was
// carved out of (identity for freshly built graphs). Equality compares
// structure only, not labels.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws std::invalid_argument on n outside [0, 64], an endpoint out of
  // range, or a loop. Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Rows must already be symmetric and loop-free; checked.
  static Graph from_rows(std::vector<VertexSet> rows, std::vector<int> labels = {});

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::prefix(order()); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;
  std::vector<Edge> edges() const;  // u < v, sorted
  // Vertices with at least one neighbor.
  VertexSet active_vertices() const;
  const std::vector<int>& labels() const { return labels_; }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<int> labels_;
};

Graph complement(const Graph& g);

enum class RemoveMode { vertex, star };

// Deletes v (mode vertex) or v with all its neighbors (mode star, the star
// st v). Survivors keep their relative order and inherit labels.
Graph remove(const Graph& g, int v, RemoveMode mode);

// Survivors are renumbered in increasing order; labels carried over.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Number of vertices adjacent to x or y, i.e. deg x + deg y - |common|.
// Throws std::invalid_argument when (x, y) is not an edge.
int edge_degree(const Graph& g, int x, int y);

struct EdgeStats {
  int n = 0;
  int d_max = 0;
  std::optional<int> D_max;       // max edge degree; unset when edgeless
  std::optional<int> big_height;  // filled in from the edge ideal by callers
  std::optional<int> C_clawfree;  // max over arcs x->y of deg x + floor(deg y / 2) + 1
};

EdgeStats degree_stats(const Graph& g);

// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);
std::vector<std::optional<int>> distances_from(const Graph& g, int source);

// Two vertex-disjoint edges with no edge between them.
struct Gap {
  Edge first;
  Edge second;
};
std::optional<Gap> find_gap(const Graph& g);
inline bool is_gap_free(const Graph& g) { return !find_gap(g).has_value(); }

// Induced K_{1,3}.
struct Claw {
  int center;
  std::array<int, 3> leaves;
};
std::optional<Claw> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

// Bit l is set iff g has an induced cycle of length l, for 3 <= l <= max_len.
using CycleLengths = std::uint64_t;

// Induced-path extension search: a path only grows through vertices that are
// adjacent to its last vertex and to none of the earlier ones; touching the
// first vertex closes an induced cycle. Every cycle is rooted at its
// smallest vertex.
CycleLengths induced_cycle_spectrum(const Graph& g, int max_len);
std::vector<int> cycle_lengths(CycleLengths mask);

// Length of the shortest induced cycle of length >= min_len, if any.
std::optional<int> shortest_induced_cycle(const Graph& g, int min_len);

// Largest k >= 0 such that the complement has no induced C_i, 4 <= i <= k+3.
// nullopt means the complement has no induced cycle of length >= 4 at all.
std::optional<int> linearity_steps_combinatorial(const Graph& g);

}  // namespace edgereg
