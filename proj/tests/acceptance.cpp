// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "edgereg/bounds.hpp"
#include "edgereg/generators.hpp"
#include "edgereg/verifier.hpp"

using namespace edgereg;

namespace {

constexpr double kRealTol = 1e-9;
constexpr double kSpotTol = 1e-12;
constexpr double kBootstrapTol = 1e-9;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

InvariantCache& shared_cache() {
  static InvariantCache cache(Field::gf2);
  return cache;
}

CorpusSummary corpus(const std::string& name, GraphStream stream, std::vector<std::string> checks, int jobs = 1) {
  CorpusOptions opts;
  opts.checks = std::move(checks);
  opts.jobs = jobs;
  return run_corpus(name, from_generator(std::move(stream)), shared_cache(), opts);
}

std::string counts(const CorpusSummary& s, const std::string& check) {
  const CheckCounts& c = s.counts.at(check);
  return check + " " + std::to_string(c.pass) + "/" + std::to_string(c.skip) + "/" + std::to_string(c.fail);
}

std::string fmt_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome bipartite_sharpness() {
  int pairs = 0;
  int bad = 0;
  double worst = 0.0;
  for (int i = 1; i <= 8; ++i) {
    for (int d = 1; i + d <= 9; ++d) {
      ++pairs;
      const int pd = shared_cache().pd(gen::complete_bipartite(i, d));
      const double bound = pd_bound(PdBoundKind::edge_degree, {.n = i + d, .D = i + d}).value;
      worst = std::max(worst, std::abs(bound - (i + d - 1)));
      if (pd != i + d - 1 || std::abs(bound - (i + d - 1)) > kRealTol) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches, max |bound - (i+d-1)| = " +
                        fmt_real(worst)};
}

Outcome disjoint_edges() {
  std::string seen;
  bool ok = true;
  for (int l = 1; l <= 5; ++l) {
    const InvariantRecord r = shared_cache().edge_ideal_invariants(gen::disjoint_edges(l));
    ok = ok && r.reg_ideal == l + 1 && r.pd_quotient == l;
    seen += (l > 1 ? " " : "") + std::to_string(l) + ":(" + std::to_string(r.reg_ideal) + "," +
            std::to_string(r.pd_quotient) + ")";
  }
  return {ok, "l:(reg,pd) " + seen};
}

// The exhaustive n <= 6 run covers both the lemma suite and the
// neighborhood splitting check.
CorpusSummary& exhaustive() {
  static CorpusSummary s = corpus("all_upto:6", gen::all_labeled_upto(6),
                                  {"recursion", "terai", "linearity", "froberg", "distance2", "bounds", "lyu"});
  return s;
}

Outcome lemma_suite() {
  const CorpusSummary& s = exhaustive();
  std::size_t fails = 0;
  std::string detail = std::to_string(s.graphs) + " graphs (pass/skip/fail):";
  for (const char* c : {"recursion", "terai", "linearity", "froberg", "distance2", "bounds"}) {
    fails += s.counts.at(c).fail;
    detail += std::string(" ") + counts(s, c) + ";";
  }
  return {fails == 0 && s.graphs == 33868 && s.oversize == 0, detail};
}

Outcome nevo() {
  const CorpusSummary small = corpus("all_upto:6", gen::all_labeled_upto(6), {"nevo"});
  const CorpusSummary random = corpus("random", gen::random_corpus(10000, 1, 10, 4), {"nevo"});
  const std::size_t fails = small.counts.at("nevo").fail + random.counts.at("nevo").fail;
  return {fails == 0 && random.graphs == 10000,
          "exhaustive " + counts(small, "nevo") + "; random n<=10 " + counts(random, "nevo")};
}

Outcome splitting() {
  const CorpusSummary& s = exhaustive();
  return {s.counts.at("lyu").fail == 0, std::to_string(s.graphs) + " graphs, " + counts(s, "lyu")};
}

Outcome cubic() {
  std::size_t graphs = 0;
  std::size_t checked = 0;
  std::size_t reg_mismatch = 0;
  std::size_t not_linear = 0;
  std::size_t mismatch_outside_reg2 = 0;
  std::size_t max_rule_breaks = 0;
  for (int n = 3; n <= 6; ++n) {
    GraphStream stream = gen::all_labeled(n);
    while (auto g = stream()) {
      if (g->edge_count() == 0) continue;
      ++graphs;
      const CheckResult r = verify_cubic_reg(*g, shared_cache());
      if (r.status == CheckStatus::skip) continue;
      ++checked;
      const json& d = r.details;
      if (!d["reg_equal"].get<bool>()) {
        ++reg_mismatch;
        if (d["reg_edge"] != 2) ++mismatch_outside_reg2;
      }
      if (!d["one_step_linear"].get<bool>()) ++not_linear;
      if (!d["reg_cubic_is_max_reg_edge_3"].get<bool>()) ++max_rule_breaks;
    }
  }
  std::printf("  info: reg(cubic) = max(reg(I(G)), 3) on all %zu checked graphs: %s\n", checked,
              max_rule_breaks == 0 ? "yes" : "no");
  return {reg_mismatch == 0 && not_linear == 0,
          std::to_string(graphs) + " graphs, " + std::to_string(checked) + " with >= 3 variables; reg mismatches " +
              std::to_string(reg_mismatch) + " (" + std::to_string(mismatch_outside_reg2) +
              " with reg(I(G)) != 2); not 1-step linear " + std::to_string(not_linear)};
}

Outcome bootstrap() {
  const std::vector<double> grid = integer_grid(1000000);
  bool ok = true;
  double worst_spot = 0.0;
  double worst_margin = INFINITY;
  for (int k = 1; k <= 5; ++k) {
    const BootstrapReport r = bootstrap_verify(k, grid, kBootstrapTol);
    ok = ok && r.pass;
    worst_spot = std::max(worst_spot, std::abs(r.f_at_1 - 2.0));
    for (const auto& c : r.conditions) worst_margin = std::min(worst_margin, c.worst_margin);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "k=1..5 on 1..1e6, worst margin %.3g, max |f(1)-2| = %.3g", worst_margin, worst_spot);
  return {ok && worst_spot <= kSpotTol, buf};
}

Outcome fixtures() {
  InvariantCache& c = shared_cache();
  const InvariantRecord c4 = c.edge_ideal_invariants(gen::cycle(4));
  const InvariantRecord c5 = c.edge_ideal_invariants(gen::cycle(5));
  const InvariantRecord p3 = c.edge_ideal_invariants(gen::path(3));
  const InvariantRecord c6c = c.edge_ideal_invariants(complement(gen::cycle(6)));
  const bool ok = c4.reg_ideal == 2 && c4.pd_quotient == 3 && c5.reg_ideal == 3 && c5.pd_quotient == 3 &&
                  c5.lin_steps == 1 && p3.reg_ideal == 2 && p3.pd_quotient == 2 && c6c.lin_steps == 2;
  char buf[200];
  std::snprintf(buf, sizeof buf, "C4 (%d,%d) C5 (%d,%d,%d) P3 (%d,%d) C6^c lin %d", c4.reg_ideal, c4.pd_quotient,
                c5.reg_ideal, c5.pd_quotient, c5.lin_steps, p3.reg_ideal, p3.pd_quotient, c6c.lin_steps);
  return {ok, buf};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome performance() {
  auto timed = [](int n, int jobs) {
    const Graph g = gen::gnp(n, 0.4, 12345);
    const auto start = std::chrono::steady_clock::now();
    const BettiTable t = betti_table(edge_ideal(g), Field::gf2, {kDefaultMaxVars, jobs});
    return std::pair{seconds_since(start), t.entries().size()};
  };
  const auto [t12, e12] = timed(12, 1);
  const auto [t14, e14] = timed(14, 8);
  char buf[200];
  std::snprintf(buf, sizeof buf, "n=12 %.2fs (%zu entries, limit 60s); n=14 jobs=8 %.2fs (%zu entries, limit 900s)",
                t12, e12, t14, e14);
  return {t12 < 60.0 && t14 < 900.0, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "complete bipartite pd sharpness, 2 <= i+d <= 9", 120, bipartite_sharpness},
      {2, "disjoint edges reg l+1 and pd l, l = 1..5", 120, disjoint_edges},
      {3, "exhaustive lemma suite n <= 6", 900, lemma_suite},
      {4, "claw-free gap-free graphs have reg <= 3", 600, nevo},
      {5, "neighborhood pd splitting n <= 6", 900, splitting},
      {6, "cubic thickening keeps reg and is 1-step linear, 3 <= n <= 6", 600, cubic},
      {7, "bootstrap conditions and f(1) = 2", 60, bootstrap},
      {8, "regression fixtures", 60, fixtures},
      {9, "Betti table performance", 960, performance},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& err) {
      out = {false, std::string("exception: ") + err.what()};
    }
    const double t = seconds_since(start);
    const bool pass = out.pass && t < c.limit_seconds;
    failed += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.1fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.detail.c_str(), t, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
