#include "edgereg/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "edgereg/graph_io.hpp"
#include "edgereg/parallel.hpp"

namespace edgereg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

void to_json(json& j, const CheckResult& r) {
  j = json{{"name", r.name}, {"status", to_string(r.status)}, {"details", r.details}};
}

namespace {

CheckResult skipped(std::string name, std::string reason) {
  CheckResult r{std::move(name), CheckStatus::skip, json::object()};
  r.details["reason"] = std::move(reason);
  return r;
}

CheckResult verdict(std::string name, bool ok, json details) {
  return CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)};
}

bool has_edge(const Graph& g) { return g.edge_count() > 0; }

// Graph vertex -> variable of edge_ideal(g); -1 for isolated vertices.
std::vector<int> variable_of(const Graph& g, const SquarefreeIdeal& ideal) {
  std::vector<int> var(static_cast<std::size_t>(g.order()), -1);
  const auto& labels = ideal.var_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) var[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);
  return var;
}

// The k a regularity bound is instantiated with: fully linear resolutions
// are k-steps linear for every k, and 1 is the weakest admissible choice.
std::optional<int> bound_steps(const InvariantRecord& inv) {
  if (inv.fully_linear) return std::max(1, inv.lin_steps);
  if (inv.lin_steps >= 1) return inv.lin_steps;
  return std::nullopt;
}

}  // namespace

CheckResult verify_reg_recursion(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("recursion", "edgeless");
  const int reg = cache.reg(g);
  json bad = json::array();
  for (int x = 0; x < g.order(); ++x) {
    const int star = cache.reg(remove(g, x, RemoveMode::star)) + 1;
    const int del = cache.reg(remove(g, x, RemoveMode::vertex));
    if (reg > std::max(star, del) || (reg != star && reg != del)) {
      bad.push_back({{"vertex", x}, {"reg", reg}, {"reg_star_plus_1", star}, {"reg_deleted", del}});
    }
  }
  return verdict("recursion", bad.empty(), bad.empty() ? json{{"reg", reg}} : json{{"reg", reg}, {"witnesses", bad}});
}

CheckResult verify_terai(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("terai", "edgeless");
  const SquarefreeIdeal ideal = edge_ideal(g);
  const InvariantRecord inv = cache.edge_ideal_invariants(g);
  const InvariantRecord dual = cache.ideal_invariants(alexander_dual(ideal));
  json d{{"reg", inv.reg_ideal},
         {"pd", inv.pd_quotient},
         {"reg_dual", dual.reg_ideal},
         {"pd_dual", dual.pd_quotient}};
  return verdict("terai", dual.reg_ideal == inv.pd_quotient && inv.reg_ideal == dual.pd_quotient, d);
}

CheckResult verify_linearity(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("linearity", "edgeless");
  const LinearityReport r = linearity_cross_check(g, cache.edge_ideal_invariants(g));
  json d{{"betti_steps", r.betti_steps},
         {"fully_linear", r.fully_linear},
         {"combinatorial_steps", r.combinatorial_steps ? json(*r.combinatorial_steps) : json(nullptr)},
         {"reg", r.reg_ideal}};
  return verdict("linearity", r.agree, d);
}

CheckResult verify_froberg(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("froberg", "edgeless");
  const int reg = cache.reg(g);
  const std::optional<int> cycle = shortest_induced_cycle(complement(g), 4);
  json d{{"reg", reg}, {"shortest_complement_cycle", cycle ? json(*cycle) : json(nullptr)}};
  return verdict("froberg", (reg == 2) == !cycle.has_value(), d);
}

CheckResult verify_distance2(const Graph& g) {
  const Graph core = induced_subgraph(g, g.active_vertices());
  if (!has_edge(core)) return skipped("distance2", "edgeless");
  if (!is_gap_free(core)) return skipped("distance2", "has a gap");
  int top = 0;
  for (int v = 0; v < core.order(); ++v) top = std::max(top, core.degree(v));
  json bad = json::array();
  for (int x = 0; x < core.order(); ++x) {
    if (core.degree(x) != top) continue;
    const auto dist = distances_from(core, x);
    for (int y = 0; y < core.order(); ++y) {
      const auto& d = dist[static_cast<std::size_t>(y)];
      if (!d || *d > 2) {
        bad.push_back({{"x", core.labels()[static_cast<std::size_t>(x)]},
                       {"y", core.labels()[static_cast<std::size_t>(y)]},
                       {"distance", d ? json(*d) : json(nullptr)}});
      }
    }
  }
  return verdict("distance2", bad.empty(), bad.empty() ? json{{"max_degree", top}} : json{{"witnesses", bad}});
}

CheckResult verify_pd_splitting(const SquarefreeIdeal& ideal, const std::vector<int>& lambda, InvariantCache& cache) {
  if (lambda.empty()) throw std::invalid_argument("pd splitting needs a nonempty variable list");
  for (int v : lambda) {
    if (v < 0 || v >= ideal.n_vars()) throw std::invalid_argument("pd splitting: variable out of range");
  }
  const int pd = cache.ideal_invariants(ideal).pd_quotient;
  json branches = json::array();
  bool matched = false;
  VertexSet before;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    const SquarefreeIdeal c = colon(add_variables(ideal, before), lambda[j]);
    if (c.is_unit()) {
      branches.push_back(nullptr);
    } else {
      const int p = cache.ideal_invariants(c).pd_quotient;
      branches.push_back(p);
      matched = matched || p == pd;
    }
    before.insert(lambda[j]);
  }
  const int last = cache.ideal_invariants(add_variables(ideal, before)).pd_quotient;
  matched = matched || last == pd;
  return verdict("lyu", matched, json{{"lambda", lambda}, {"pd", pd}, {"colon_pds", branches}, {"sum_pd", last}});
}

CheckResult verify_lyu_neighborhoods(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("lyu", "edgeless");
  const SquarefreeIdeal ideal = edge_ideal(g);
  const std::vector<int> var = variable_of(g, ideal);
  json bad = json::array();
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) == 0) continue;
    std::vector<int> lambda;
    for (int y : g.neighbors(x)) lambda.push_back(var[static_cast<std::size_t>(y)]);
    CheckResult r = verify_pd_splitting(ideal, lambda, cache);
    if (r.failed()) {
      r.details["vertex"] = x;
      bad.push_back(r.details);
    }
  }
  return verdict("lyu", bad.empty(), bad.empty() ? json::object() : json{{"witnesses", bad}});
}

CheckResult verify_nevo(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("nevo", "edgeless");
  if (!is_claw_free(g)) return skipped("nevo", "has a claw");
  if (!is_gap_free(g)) return skipped("nevo", "has a gap");
  const int reg = cache.reg(g);
  return verdict("nevo", reg <= 3, json{{"reg", reg}});
}

CheckResult verify_cubic_reg(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("cubic", "edgeless");
  if (g.active_vertices().size() < 3) return skipped("cubic", "fewer than three variables");
  const InvariantRecord edge = cache.edge_ideal_invariants(g);
  const InvariantRecord cubic = cache.ideal_invariants(cubic_thickening(g));
  const bool equal = cubic.reg_ideal == edge.reg_ideal;
  const bool linear = cubic.fully_linear || cubic.lin_steps >= 1;
  json d{{"reg_edge", edge.reg_ideal},
         {"reg_cubic", cubic.reg_ideal},
         {"cubic_lin_steps", cubic.lin_steps},
         {"cubic_fully_linear", cubic.fully_linear},
         {"reg_equal", equal},
         {"one_step_linear", linear},
         {"reg_cubic_is_max_reg_edge_3", cubic.reg_ideal == std::max(edge.reg_ideal, 3)}};
  return verdict("cubic", equal && linear, d);
}

CheckResult verify_remove_induced(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("remove_induced", "edgeless");
  const InvariantRecord parent = cache.edge_ideal_invariants(g);
  const CycleLengths parent_cycles = induced_cycle_spectrum(complement(g), g.order());
  const VertexSet all = g.vertices();

  // Every deleted set for small graphs; single vertices and stars otherwise.
  std::vector<VertexSet> deletions;
  constexpr int kExhaustiveUpTo = 8;
  if (g.order() <= kExhaustiveUpTo) {
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << g.order()); ++m) deletions.push_back(VertexSet(m));
  } else {
    for (int x = 0; x < g.order(); ++x) {
      deletions.push_back(VertexSet{x});
      if (g.closed_neighbors(x) != all) deletions.push_back(g.closed_neighbors(x));
    }
  }

  json bad = json::array();
  for (VertexSet gone : deletions) {
    const Graph h = induced_subgraph(g, all - gone);
    const InvariantRecord sub = cache.edge_ideal_invariants(h);
    const bool betti_ok = parent.fully_linear ? sub.fully_linear : (sub.fully_linear || sub.lin_steps >= parent.lin_steps);
    const CycleLengths sub_cycles = induced_cycle_spectrum(complement(h), h.order());
    const bool cycles_ok = (sub_cycles & ~parent_cycles) == 0;
    if (!betti_ok || !cycles_ok) {
      bad.push_back({{"removed", vertex_list(gone)},
                     {"lin_steps", sub.lin_steps},
                     {"fully_linear", sub.fully_linear},
                     {"new_cycle_lengths", cycle_lengths(sub_cycles & ~parent_cycles)}});
    }
  }
  json d{{"lin_steps", parent.lin_steps}, {"fully_linear", parent.fully_linear}, {"deletions", deletions.size()}};
  if (!bad.empty()) d["witnesses"] = bad;
  return verdict("remove_induced", bad.empty(), d);
}

void to_json(json& j, const BoundCheck& b) {
  j = json{{"bound", b.bound}, {"invariant", b.invariant}, {"observed", b.observed}, {"upper", b.upper}};
  j["effective"] = b.bound.applicable ? json(b.effective) : json(nullptr);
  j["satisfied"] = b.satisfied ? json(*b.satisfied) : json(nullptr);
  if (!b.note.empty()) j["note"] = b.note;
}

bool BoundReport::all_satisfied() const {
  for (const BoundCheck& b : bounds) {
    if (b.satisfied && !*b.satisfied) return false;
  }
  for (const auto& [name, r] : lemma_checks) {
    if (r.failed()) return false;
  }
  return true;
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"graph6", r.graph6},
           {"invariants", r.invariants},
           {"stats", r.stats},
           {"flags",
            {{"gap_free", r.gap_free},
             {"claw_free", r.claw_free},
             {"lin_steps_combinatorial",
              r.lin_steps_combinatorial ? json(*r.lin_steps_combinatorial) : json(nullptr)}}},
           {"bounds", r.bounds}};
  json lemmas = json::object();
  for (const auto& [name, c] : r.lemma_checks) lemmas[name] = c;
  j["lemma_checks"] = lemmas;
}

namespace {

BoundCheck compare_upper(BoundValue bound, std::string invariant, int observed, double floor) {
  BoundCheck c;
  c.invariant = std::move(invariant);
  c.observed = observed;
  c.upper = true;
  if (bound.applicable) {
    c.effective = std::max(bound.value, floor);
    if (bound.value < floor) c.note = "formula below the trivial floor " + std::to_string(static_cast<int>(floor));
    c.satisfied = observed <= c.effective + kBoundSlack;
  }
  c.bound = std::move(bound);
  return c;
}

BoundValue not_applicable(std::string name, std::string why) {
  BoundValue v;
  v.name = std::move(name);
  v.value = std::nan("");
  v.applicable = false;
  v.violated_hypothesis = std::move(why);
  return v;
}

// Final corollary of the projective dimension section: a witness sigma of
// reg on m vertices spans a subgraph H whose max edge degree is at least
// m / (log_{(k+4)/2}(d/(k+1)) + 3).
// The Betti table of I(H) is the restriction of the table of I(G) to the
// subsets of sigma.
CheckResult witness_edge_degree(const Graph& g, const SquarefreeIdeal& ideal, const InvariantRecord& inv,
                                const BettiTable& table) {
  json failures = json::array();
  std::size_t checked = 0;
  std::size_t floored = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::optional<LinearityIndex> index;
  if (inv.witnesses.size() * table.entries().size() > (std::size_t{1} << table.n_vars()) * 4) index.emplace(table);
  for (const RegularityWitness& w : inv.witnesses) {
    const Linearity lin = index ? (*index)(w.sigma) : linearity_within(table, w.sigma);
    InvariantRecord sub;
    sub.lin_steps = lin.lin_steps;
    sub.fully_linear = lin.fully_linear;
    const std::optional<int> k = bound_steps(sub);
    if (!k) continue;
    VertexSet verts;
    for (int v : w.sigma) verts.insert(ideal.var_labels()[static_cast<std::size_t>(v)]);
    const Graph h = induced_subgraph(g, verts);
    const EdgeStats st = degree_stats(h);
    const int m = verts.size();
    const double denominator = std::log(st.d_max / (*k + 1.0)) / std::log((*k + 4) / 2.0) + 3.0;
    // Same floor as the regularity bounds: reg(I(H)) >= 2 always.
    if (denominator < 2.0) ++floored;
    const double lower = m / std::max(denominator, 2.0);
    const double slack = st.D_max.value_or(0) - lower;
    ++checked;
    worst = std::min(worst, slack);
    if (slack < -kBoundSlack) {
      failures.push_back({{"i", w.i}, {"sigma", vertex_list(verts)}, {"m", m}, {"d", st.d_max}, {"k", *k},
                          {"D", st.D_max.value_or(0)}, {"lower", lower}});
    }
  }
  json d{{"witnesses", inv.witnesses.size()}, {"checked", checked}, {"floored", floored}};
  d["worst_slack"] = checked > 0 ? json(worst) : json(nullptr);
  if (!failures.empty()) d["failures"] = failures;
  if (checked == 0) return skipped("witness_edge_degree", "no witness subgraph is 1-step linear");
  return verdict("witness_edge_degree", failures.empty(), d);
}

}  // namespace

BoundReport verify_all_bounds(const Graph& g, InvariantCache& cache, const BettiTable* table) {
  if (!has_edge(g)) throw std::invalid_argument("bound report needs a graph with an edge");
  BoundReport rep;
  rep.graph6 = to_graph6(g);
  const SquarefreeIdeal ideal = edge_ideal(g);
  std::optional<BettiTable> own;
  if (!table) table = &own.emplace(betti_table(ideal, cache.field(), cache.options()));
  const InvariantRecord inv = cache.remember(g, *table);
  rep.invariants = inv;
  rep.stats = degree_stats(g);
  rep.stats.big_height = big_height(ideal);
  rep.gap_free = is_gap_free(g);
  rep.claw_free = is_claw_free(g);
  rep.lin_steps_combinatorial = linearity_steps_combinatorial(g);

  const int n = ideal.n_vars();
  const EdgeStats& st = rep.stats;
  const std::optional<int> k = bound_steps(inv);

  if (k) {
    BoundCheck maxdeg = compare_upper(reg_bound(RegBoundKind::maxdeg, *k, st.d_max), "reg_ideal", inv.reg_ideal, 2.0);
    if (st.d_max < *k + 1) maxdeg.note += maxdeg.note.empty() ? "d < k+1" : "; d < k+1";
    rep.bounds.push_back(std::move(maxdeg));
    rep.bounds.push_back(compare_upper(reg_bound(RegBoundKind::nvertices, *k, n), "reg_ideal", inv.reg_ideal, 2.0));
  } else {
    rep.bounds.push_back(compare_upper(not_applicable(to_string(RegBoundKind::maxdeg), "k >= 1"), "reg_ideal",
                                       inv.reg_ideal, 2.0));
    rep.bounds.push_back(compare_upper(not_applicable(to_string(RegBoundKind::nvertices), "k >= 1"), "reg_ideal",
                                       inv.reg_ideal, 2.0));
  }

  PdBoundParams p;
  p.n = n;
  p.D = st.D_max.value_or(0);
  p.C = st.C_clawfree.value_or(0);
  p.d = st.d_max;
  p.b = st.big_height.value_or(0);
  rep.bounds.push_back(compare_upper(pd_bound(PdBoundKind::edge_degree, p), "pd_quotient", inv.pd_quotient, 0.0));
  rep.bounds.push_back(compare_upper(
      rep.claw_free ? pd_bound(PdBoundKind::clawfree, p) : not_applicable(to_string(PdBoundKind::clawfree), "claw-free"),
      "pd_quotient", inv.pd_quotient, 0.0));
  rep.bounds.push_back(compare_upper(pd_bound(PdBoundKind::maxdeg, p), "pd_quotient", inv.pd_quotient, 0.0));

  // The dual of I(G) is S_k exactly when I(G) is (k-1)-steps linear, and
  // pd(S/I(G)^dual) = reg(I(G)).
  if (k) {
    p.k = *k + 1;
    rep.bounds.push_back(compare_upper(pd_bound(PdBoundKind::s2_main, p), "pd_dual_quotient", inv.reg_ideal, 2.0));
  } else {
    rep.bounds.push_back(compare_upper(not_applicable(to_string(PdBoundKind::s2_main), "k >= 2"), "pd_dual_quotient",
                                       inv.reg_ideal, 2.0));
  }
  rep.bounds.push_back(compare_upper(pd_bound(PdBoundKind::faltings, p), "pd_quotient", inv.pd_quotient, 0.0));

  BoundValue hl = pd_bound(PdBoundKind::hl, p);
  BoundCheck hl_check = compare_upper(hl, "pd_quotient", inv.pd_quotient, 0.0);
  hl_check.satisfied.reset();
  hl_check.note = "informational; its hypotheses are not checked";
  rep.bounds.push_back(std::move(hl_check));

  rep.lemma_checks.emplace("witness_edge_degree", witness_edge_degree(g, ideal, inv, *table));
  return rep;
}

CheckResult verify_bounds(const Graph& g, InvariantCache& cache) {
  if (!has_edge(g)) return skipped("bounds", "edgeless");
  const BoundReport rep = verify_all_bounds(g, cache);
  json bad = json::array();
  for (const BoundCheck& b : rep.bounds) {
    if (b.satisfied && !*b.satisfied) bad.push_back(b);
  }
  for (const auto& [name, r] : rep.lemma_checks) {
    if (r.failed()) bad.push_back(r);
  }
  return verdict("bounds", bad.empty(), bad.empty() ? json::object() : json{{"violated", bad}});
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"recursion", "terai", "linearity", "froberg", "distance2",
                                              "bounds",    "nevo",  "lyu",       "cubic",   "remove_induced"};
  return names;
}

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& n : all_check_names()) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      }
      continue;
    }
    const auto& names = all_check_names();
    if (std::find(names.begin(), names.end(), item) == names.end()) throw InputError("unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw InputError("no checks selected");
  return out;
}

CheckResult run_check(const std::string& name, const Graph& g, InvariantCache& cache) {
  if (name == "recursion") return verify_reg_recursion(g, cache);
  if (name == "terai") return verify_terai(g, cache);
  if (name == "linearity") return verify_linearity(g, cache);
  if (name == "froberg") return verify_froberg(g, cache);
  if (name == "distance2") return verify_distance2(g);
  if (name == "bounds") return verify_bounds(g, cache);
  if (name == "nevo") return verify_nevo(g, cache);
  if (name == "lyu") return verify_lyu_neighborhoods(g, cache);
  if (name == "cubic") return verify_cubic_reg(g, cache);
  if (name == "remove_induced") return verify_remove_induced(g, cache);
  throw InputError("unknown check '" + name + "'");
}

ItemSource graph6_lines(std::istream& in) {
  auto lineno = std::make_shared<std::size_t>(0);
  auto seq = std::make_shared<std::size_t>(0);
  return [&in, lineno, seq]() -> std::optional<CorpusItem> {
    std::string line;
    while (std::getline(in, line)) {
      ++*lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      CorpusItem item;
      item.seq = (*seq)++;
      item.origin = "line " + std::to_string(*lineno);
      try {
        item.graph = from_graph6(line);
      } catch (const std::exception& err) {
        item.error = err.what();
      }
      return item;
    }
    return std::nullopt;
  };
}

ItemSource from_generator(GraphStream stream) {
  auto seq = std::make_shared<std::size_t>(0);
  return [stream = std::move(stream), seq]() -> std::optional<CorpusItem> {
    std::optional<Graph> g = stream();
    if (!g) return std::nullopt;
    CorpusItem item;
    item.seq = (*seq)++;
    item.origin = "#" + std::to_string(item.seq);
    item.graph = std::move(g);
    return item;
  };
}

std::size_t CorpusSummary::failures() const {
  std::size_t f = 0;
  for (const auto& [name, c] : counts) f += c.fail;
  return f;
}

int CorpusSummary::exit_code() const {
  if (input_errors > 0) return 2;
  return failures() > 0 ? 1 : 0;
}

void to_json(json& j, const CorpusSummary& s) {
  json counts = json::object();
  for (const auto& [name, c] : s.counts) counts[name] = {{"pass", c.pass}, {"skip", c.skip}, {"fail", c.fail}};
  j = json{{"corpus", s.corpus},
           {"graphs", s.graphs},
           {"input_errors", s.input_errors},
           {"oversize", s.oversize},
           {"counts", counts},
           {"violations", s.violations.size()}};
}

namespace {

struct ItemOutcome {
  std::vector<CheckResult> results;
  std::string graph6;
  std::string oversize_reason;
};

}  // namespace

CorpusSummary run_corpus(const std::string& name, ItemSource source, InvariantCache& cache,
                         const CorpusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CorpusSummary summary;
  summary.corpus = name;
  for (const auto& c : options.checks) summary.counts[c];

  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  std::vector<CorpusItem> items;
  std::vector<ItemOutcome> outcomes;
  for (;;) {
    items.clear();
    while (items.size() < batch) {
      std::optional<CorpusItem> item = source();
      if (!item) break;
      items.push_back(std::move(*item));
    }
    if (items.empty()) break;

    outcomes.assign(items.size(), {});
    parallel_blocks(items.size(), options.jobs, 1, [&](int, std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        const CorpusItem& item = items[t];
        if (!item.graph) continue;
        ItemOutcome& out = outcomes[t];
        const Graph& g = *item.graph;
        out.graph6 = to_graph6(g);
        const int vars = g.active_vertices().size();
        if (vars > cache.max_vars()) {
          out.oversize_reason = std::to_string(vars) + " variables exceed the guard of " +
                                std::to_string(cache.max_vars());
          continue;
        }
        try {
          for (const auto& c : options.checks) out.results.push_back(run_check(c, g, cache));
        } catch (const GuardError& err) {
          out.results.clear();
          out.oversize_reason = err.what();
        }
      }
    });

    // Ordered reduce.
    for (std::size_t t = 0; t < items.size(); ++t) {
      const CorpusItem& item = items[t];
      if (!item.graph) {
        ++summary.input_errors;
        summary.errors.push_back({{"origin", item.origin}, {"error", item.error}});
        continue;
      }
      ++summary.graphs;
      const ItemOutcome& out = outcomes[t];
      if (!out.oversize_reason.empty()) {
        ++summary.oversize;
        summary.errors.push_back({{"origin", item.origin}, {"graph6", out.graph6}, {"skipped", out.oversize_reason}});
        continue;
      }
      for (const CheckResult& r : out.results) {
        CheckCounts& c = summary.counts[r.name];
        switch (r.status) {
          case CheckStatus::pass: ++c.pass; break;
          case CheckStatus::skip: ++c.skip; break;
          case CheckStatus::fail: {
            ++c.fail;
            json v{{"check", r.name}, {"graph6", out.graph6}, {"details", r.details}};
            if (options.on_violation) options.on_violation(v);
            summary.violations.push_back(std::move(v));
            break;
          }
        }
      }
    }
  }
  summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace edgereg
