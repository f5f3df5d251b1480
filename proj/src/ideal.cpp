#include "edgereg/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edgereg/graph_io.hpp"

namespace edgereg {

namespace {

std::vector<int> identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void check_vars(int n_vars) {
  if (n_vars < 0 || n_vars > kMaxVertices) {
    throw std::invalid_argument("variable count " + std::to_string(n_vars) + " outside [0, 64]");
  }
}

}  // namespace

void sort_supports(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
}

std::vector<VertexSet> minimalize(std::vector<VertexSet> sets) {
  sort_supports(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    // Smaller sets come first, so only earlier survivors can be contained in s.
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return k.subset_of(s); });
    if (!redundant) kept.push_back(s);
  }
  return kept;
}

std::vector<VertexSet> maximalize(std::vector<VertexSet> sets) {
  sort_supports(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return it->subset_of(k); });
    if (!redundant) kept.push_back(*it);
  }
  sort_supports(kept);
  return kept;
}

SquarefreeIdeal SquarefreeIdeal::zero(int n_vars) {
  check_vars(n_vars);
  SquarefreeIdeal I;
  I.n_vars_ = n_vars;
  I.kind_ = Kind::zero;
  I.var_labels_ = identity(n_vars);
  return I;
}

SquarefreeIdeal SquarefreeIdeal::unit(int n_vars) {
  SquarefreeIdeal I = zero(n_vars);
  I.kind_ = Kind::unit;
  return I;
}

SquarefreeIdeal SquarefreeIdeal::from_generators(int n_vars, std::vector<VertexSet> gens) {
  SquarefreeIdeal I = zero(n_vars);
  const VertexSet all = VertexSet::prefix(n_vars);
  for (VertexSet g : gens) {
    if (!g.subset_of(all)) throw std::invalid_argument("generator uses a variable outside [0, n_vars)");
    if (g.empty()) {
      I.kind_ = Kind::unit;
      return I;
    }
  }
  I.gens_ = minimalize(std::move(gens));
  I.kind_ = I.gens_.empty() ? Kind::zero : Kind::proper;
  return I;
}

VertexSet SquarefreeIdeal::support() const {
  VertexSet s;
  for (VertexSet g : gens_) s |= g;
  return s;
}

int SquarefreeIdeal::min_degree() const {
  int d = kMaxVertices + 1;
  for (VertexSet g : gens_) d = std::min(d, g.size());
  return gens_.empty() ? 0 : d;
}

int SquarefreeIdeal::max_degree() const {
  int d = 0;
  for (VertexSet g : gens_) d = std::max(d, g.size());
  return d;
}

SquarefreeIdeal SquarefreeIdeal::with_labels(std::vector<int> labels) const {
  if (static_cast<int>(labels.size()) != n_vars_) throw std::invalid_argument("label count does not match n_vars");
  SquarefreeIdeal I = *this;
  I.var_labels_ = std::move(labels);
  return I;
}

std::string SquarefreeIdeal::to_string() const {
  if (is_zero()) return "(0)";
  if (is_unit()) return "(1)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    bool first = true;
    for (int v : gens_[i]) {
      if (!first) out += "*";
      out += "x" + std::to_string(v);
      first = false;
    }
  }
  return out + ")";
}

SimplicialComplex SimplicialComplex::void_complex(int n_vars) {
  check_vars(n_vars);
  SimplicialComplex c;
  c.n_vars_ = n_vars;
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(int n_vars, std::vector<VertexSet> faces) {
  SimplicialComplex c = void_complex(n_vars);
  const VertexSet all = VertexSet::prefix(n_vars);
  for (VertexSet f : faces) {
    if (!f.subset_of(all)) throw std::invalid_argument("face uses a vertex outside [0, n_vars)");
  }
  c.facets_ = maximalize(std::move(faces));
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

SquarefreeIdeal edge_ideal(const Graph& g) {
  const std::vector<int> active = g.active_vertices().to_vector();
  std::array<int, kMaxVertices> var_of{};
  for (std::size_t i = 0; i < active.size(); ++i) var_of[static_cast<std::size_t>(active[i])] = static_cast<int>(i);
  std::vector<VertexSet> gens;
  for (const Edge& e : g.edges()) {
    gens.push_back(VertexSet{var_of[static_cast<std::size_t>(e.u)], var_of[static_cast<std::size_t>(e.v)]});
  }
  return SquarefreeIdeal::from_generators(static_cast<int>(active.size()), std::move(gens)).with_labels(active);
}

SquarefreeIdeal add_variables(const SquarefreeIdeal& ideal, VertexSet vars) {
  if (ideal.is_unit()) return ideal;
  std::vector<VertexSet> gens(ideal.generators().begin(), ideal.generators().end());
  for (int v : vars) gens.push_back(VertexSet{v});
  return SquarefreeIdeal::from_generators(ideal.n_vars(), std::move(gens)).with_labels(ideal.var_labels());
}

SquarefreeIdeal colon(const SquarefreeIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.n_vars()) throw std::invalid_argument("colon by a variable outside [0, n_vars)");
  if (ideal.is_unit() || ideal.is_zero()) return ideal;
  std::vector<VertexSet> gens;
  for (VertexSet g : ideal.generators()) gens.push_back(g.without(var));
  return SquarefreeIdeal::from_generators(ideal.n_vars(), std::move(gens)).with_labels(ideal.var_labels());
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  // Cliques of the complement restricted to `within`.
  auto non_nb = [&](int v) { return (within - g.neighbors(v)).without(v); };
  auto bron_kerbosch = [&](auto&& self, VertexSet clique, VertexSet cand, VertexSet excluded) -> void {
    if (cand.empty()) {
      if (excluded.empty()) out.push_back(clique);
      return;
    }
    int pivot = -1;
    int best = -1;
    for (int u : cand | excluded) {
      const int score = (cand & non_nb(u)).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (int v : cand - non_nb(pivot)) {
      self(self, clique.with(v), cand & non_nb(v), excluded & non_nb(v));
      cand.erase(v);
      excluded.insert(v);
    }
  };
  bron_kerbosch(bron_kerbosch, VertexSet{}, within & g.vertices(), VertexSet{});
  sort_supports(out);
  return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return maximal_independent_sets(g, g.vertices());
}

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges) {
  std::vector<VertexSet> out;
  if (std::any_of(edges.begin(), edges.end(), [](VertexSet e) { return e.empty(); })) return out;

  // Every chosen element must keep a private edge (hit by it alone);
  // otherwise no extension can be minimal.
  auto has_private_edges = [&](VertexSet chosen) {
    for (int v : chosen) {
      const VertexSet others = chosen.without(v);
      const bool has_private = std::any_of(edges.begin(), edges.end(), [&](VertexSet e) {
        return e.contains(v) && !e.intersects(others);
      });
      if (!has_private) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, VertexSet chosen, VertexSet forbidden) -> void {
    const VertexSet* branch = nullptr;
    for (const VertexSet& e : edges) {
      if (e.intersects(chosen)) continue;
      const VertexSet open = e - forbidden;
      if (open.empty()) return;
      if (branch == nullptr || open.size() < (*branch - forbidden).size()) branch = &e;
    }
    if (branch == nullptr) {
      out.push_back(chosen);
      return;
    }
    VertexSet tried;
    for (int v : *branch - forbidden) {
      const VertexSet next = chosen.with(v);
      if (has_private_edges(next)) self(self, next, forbidden | tried);
      tried.insert(v);
    }
  };
  search(search, VertexSet{}, VertexSet{});
  sort_supports(out);
  return out;
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal) {
  if (ideal.is_unit()) throw std::domain_error("the unit ideal has no Stanley-Reisner complex");
  const int n = ideal.n_vars();
  const VertexSet all = VertexSet::prefix(n);
  if (ideal.is_zero()) return SimplicialComplex::from_facets(n, {all});

  const bool quadratic = ideal.max_degree() == 2 && ideal.min_degree() == 2;
  std::vector<VertexSet> facets;
  if (quadratic) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (VertexSet g : ideal.generators()) {
      const int a = g.lowest();
      const int b = g.highest();
      rows[static_cast<std::size_t>(a)].insert(b);
      rows[static_cast<std::size_t>(b)].insert(a);
    }
    facets = maximal_independent_sets(Graph::from_rows(std::move(rows)));
  } else {
    // Faces avoid every generator, so facets are complements of minimal
    // transversals.
    for (VertexSet t : minimal_transversals(ideal.generators())) facets.push_back(all - t);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw std::domain_error("Alexander dual needs a proper nonzero ideal");
  return SquarefreeIdeal::from_generators(ideal.n_vars(), minimal_transversals(ideal.generators()))
      .with_labels(ideal.var_labels());
}

int big_height(const SquarefreeIdeal& ideal) { return alexander_dual(ideal).max_degree(); }

SquarefreeIdeal cubic_thickening(const Graph& g) {
  const SquarefreeIdeal base = edge_ideal(g);
  const int n = base.n_vars();
  if (n < 3) throw std::invalid_argument("cubic thickening needs at least three variables");
  std::vector<VertexSet> gens;
  for (VertexSet e : base.generators()) {
    for (int z = 0; z < n; ++z) {
      if (!e.contains(z)) gens.push_back(e.with(z));
    }
  }
  return SquarefreeIdeal::from_generators(n, std::move(gens)).with_labels(base.var_labels());
}

std::string to_text(const SquarefreeIdeal& ideal) {
  std::ostringstream out;
  if (ideal.is_unit()) {
    out << ideal.n_vars() << " 1\n\n";
    return out.str();
  }
  out << ideal.n_vars() << ' ' << ideal.generators().size() << '\n';
  for (VertexSet g : ideal.generators()) {
    bool first = true;
    for (int v : g) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

SquarefreeIdeal read_ideal(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  long n = -1;
  long k = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> k) || n < 0 || k < 0) throw InputError("ideal: header must be \"n_vars k\"");
  }
  if (n > kMaxVertices) throw InputError("ideal: more than 64 variables");
  std::vector<VertexSet> gens;
  for (long i = 0; i < k; ++i) {
    if (!std::getline(in, line)) throw InputError("ideal: expected " + std::to_string(k) + " generator lines");
    std::istringstream row(line);
    VertexSet g;
    long v = 0;
    while (row >> v) {
      if (v < 0 || v >= n) throw InputError("ideal: variable " + std::to_string(v) + " out of range");
      g.insert(static_cast<int>(v));
    }
    if (!row.eof()) throw InputError("ideal: bad generator line \"" + line + "\"");
    gens.push_back(g);
  }
  return SquarefreeIdeal::from_generators(static_cast<int>(n), std::move(gens));
}

}  // namespace edgereg
