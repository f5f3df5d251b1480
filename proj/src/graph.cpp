#include "edgereg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edgereg {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

std::vector<int> identity_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  labels_ = identity_labels(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    g.adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::vector<int> labels) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::prefix(n);
  for (int v = 0; v < n; ++v) {
    const VertexSet row = rows[static_cast<std::size_t>(v)];
    if (!row.subset_of(all) || row.contains(v)) {
      throw std::invalid_argument("adjacency row " + std::to_string(v) + " is out of range or has a loop");
    }
    for (int w : row) {
      if (!rows[static_cast<std::size_t>(w)].contains(v)) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
  }
  if (labels.empty()) labels = identity_labels(n);
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("label count does not match order");
  Graph g;
  g.adj_ = std::move(rows);
  g.labels_ = std::move(labels);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet Graph::active_vertices() const {
  VertexSet s;
  for (int v = 0; v < order(); ++v) {
    if (!neighbors(v).empty()) s.insert(v);
  }
  return s;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = (all - g.neighbors(v)).without(v);
  return Graph::from_rows(std::move(rows), g.labels());
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.vertices();
  const std::vector<int> keep = s.to_vector();
  std::array<int, kMaxVertices> position{};
  for (std::size_t i = 0; i < keep.size(); ++i) position[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

  std::vector<VertexSet> rows(keep.size());
  std::vector<int> labels(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int v = keep[i];
    VertexSet row;
    for (int w : g.neighbors(v) & s) row.insert(position[static_cast<std::size_t>(w)]);
    rows[i] = row;
    labels[i] = g.labels()[static_cast<std::size_t>(v)];
  }
  return Graph::from_rows(std::move(rows), std::move(labels));
}

Graph remove(const Graph& g, int v, RemoveMode mode) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  const VertexSet gone = mode == RemoveMode::star ? g.closed_neighbors(v) : VertexSet{v};
  return induced_subgraph(g, g.vertices() - gone);
}

int edge_degree(const Graph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
    throw std::invalid_argument("(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
  return (g.neighbors(x) | g.neighbors(y)).size();
}

EdgeStats degree_stats(const Graph& g) {
  EdgeStats st;
  st.n = g.order();
  for (int v = 0; v < g.order(); ++v) st.d_max = std::max(st.d_max, g.degree(v));
  for (int x = 0; x < g.order(); ++x) {
    for (int y : g.neighbors(x)) {
      const int D = (g.neighbors(x) | g.neighbors(y)).size();
      const int C = g.degree(x) + g.degree(y) / 2 + 1;
      st.D_max = std::max(st.D_max.value_or(0), D);
      st.C_clawfree = std::max(st.C_clawfree.value_or(0), C);
    }
  }
  return st;
}

std::vector<std::optional<int>> distances_from(const Graph& g, int source) {
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  dist[static_cast<std::size_t>(source)] = 0;
  VertexSet seen{source};
  VertexSet frontier{source};
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next -= seen;
    for (int v : next) dist[static_cast<std::size_t>(v)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw std::invalid_argument("distance query outside the vertex range");
  }
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

std::optional<Gap> find_gap(const Graph& g) {
  const std::vector<Edge> es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a) {
    const VertexSet first{es[a].u, es[a].v};
    const VertexSet reach = g.neighbors(es[a].u) | g.neighbors(es[a].v) | first;
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const VertexSet second{es[b].u, es[b].v};
      if (!reach.intersects(second)) return Gap{es[a], es[b]};
    }
  }
  return std::nullopt;
}

std::optional<Claw> find_claw(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const VertexSet nb = g.neighbors(c);
    if (nb.size() < 3) continue;
    for (int a : nb) {
      const VertexSet after_a = VertexSet(nb.bits() & ~((std::uint64_t{2} << a) - 1)) - g.neighbors(a);
      for (int b : after_a) {
        const VertexSet after_b = VertexSet(after_a.bits() & ~((std::uint64_t{2} << b) - 1)) - g.neighbors(b);
        if (!after_b.empty()) return Claw{c, {a, b, after_b.lowest()}};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct CycleSearch {
  const Graph& g;
  int max_len;
  int root = 0;
  VertexSet allowed;  // vertices greater than the root
  CycleLengths found = 0;

  // path = root, ..., last; `blocked` = closed neighborhoods of the interior
  // vertices plus the path itself.
  void extend(int last, int length, VertexSet blocked) {
    const VertexSet root_nb = g.neighbors(root);
    VertexSet candidates = (g.neighbors(last) & allowed) - blocked;
    for (int v : candidates) {
      if (root_nb.contains(v)) {
        if (length >= 2) found |= CycleLengths{1} << (length + 1);
        continue;
      }
      if (length + 2 > max_len) continue;
      // `last` becomes interior once v is appended.
      extend(v, length + 1, blocked | g.closed_neighbors(last));
    }
  }
};

}  // namespace

CycleLengths induced_cycle_spectrum(const Graph& g, int max_len) {
  CycleSearch search{g, std::min(max_len, g.order()), 0, VertexSet{}, 0};
  if (search.max_len < 3) return 0;
  for (int r = 0; r < g.order(); ++r) {
    search.root = r;
    search.allowed = VertexSet(g.vertices().bits() & ~((std::uint64_t{2} << r) - 1));
    for (int first : g.neighbors(r) & search.allowed) {
      // Path root-first; the root's own neighborhood is handled via root_nb.
      search.extend(first, 2, VertexSet{r, first});
    }
  }
  return search.found;
}

std::vector<int> cycle_lengths(CycleLengths mask) {
  std::vector<int> out;
  for (int l = 0; l < 64; ++l) {
    if ((mask >> l) & 1U) out.push_back(l);
  }
  return out;
}

std::optional<int> shortest_induced_cycle(const Graph& g, int min_len) {
  const CycleLengths mask = induced_cycle_spectrum(g, g.order()) & ~((CycleLengths{1} << std::max(0, min_len)) - 1);
  if (mask == 0) return std::nullopt;
  return std::countr_zero(mask);
}

std::optional<int> linearity_steps_combinatorial(const Graph& g) {
  const std::optional<int> len = shortest_induced_cycle(complement(g), 4);
  if (!len) return std::nullopt;
  return *len - 4;
}

}  // namespace edgereg
