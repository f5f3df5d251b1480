#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgereg/bounds.hpp"
#include "edgereg/generators.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/oracle.hpp"
#include "edgereg/serialize.hpp"

namespace edgereg {

enum class CheckStatus { pass, fail, skip };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  json details = json::object();

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }
};

void to_json(json& j, const CheckResult& r);

// For every vertex x: reg(G) <= max{reg(G - st x) + 1, reg(G - x)} and reg(G)
// equals one of the two terms (edgeless graphs count as reg 2).
CheckResult verify_reg_recursion(const Graph& g, InvariantCache& cache);

// reg(I^dual) = pd(S/I) and reg(I) = pd(S/I^dual) for I = I(G).
CheckResult verify_terai(const Graph& g, InvariantCache& cache);

// Betti-table linearity against the induced cycles of the complement.
CheckResult verify_linearity(const Graph& g, InvariantCache& cache);

// reg(I(G)) = 2 iff the complement has no induced cycle of length >= 4.
CheckResult verify_froberg(const Graph& g, InvariantCache& cache);

// In a gap-free graph every non-isolated vertex lies within distance 2 of
// each maximum-degree vertex.
CheckResult verify_distance2(const Graph& g);

// Lambda = [x_1, ..., x_i]: pd(S/I) equals pd(S/((I, x_1..x_{j-1}) : x_j)) for
// some j, or pd(S/(I, x_1..x_i)).
CheckResult verify_pd_splitting(const SquarefreeIdeal& ideal, const std::vector<int>& lambda, InvariantCache& cache);
// Lambda = N(x), ascending, for every non-isolated vertex x.
CheckResult verify_lyu_neighborhoods(const Graph& g, InvariantCache& cache);

// Claw-free and gap-free implies reg <= 3; skipped otherwise.
CheckResult verify_nevo(const Graph& g, InvariantCache& cache);

// reg(cubic thickening) = reg(I(G)) and the cubic ideal is 1-step linear.
CheckResult verify_cubic_reg(const Graph& g, InvariantCache& cache);

// Deleting any induced subgraph keeps k-steps linearity (Betti side) and
// only loses induced cycles of the complement (combinatorial side).
CheckResult verify_remove_induced(const Graph& g, InvariantCache& cache);

struct BoundCheck {
  BoundValue bound;
  std::string invariant;  // what is compared, e.g. "pd_quotient"
  double observed = 0.0;
  bool upper = true;      // invariant <= bound, else invariant >= bound
  // Bound used in the comparison after the trivial floor (reg >= 2).
  double effective = 0.0;
  std::optional<bool> satisfied;  // unset when the bound is not applicable
  std::string note;
};

void to_json(json& j, const BoundCheck& b);

struct BoundReport {
  std::string graph6;
  InvariantRecord invariants;
  EdgeStats stats;
  bool gap_free = false;
  bool claw_free = false;
  std::optional<int> lin_steps_combinatorial;
  std::vector<BoundCheck> bounds;
  std::map<std::string, CheckResult> lemma_checks;

  bool all_satisfied() const;
};

void to_json(json& j, const BoundReport& r);

// `table`, when given, must be the Betti table of I(g) over the cache's
// field; otherwise it is computed.
BoundReport verify_all_bounds(const Graph& g, InvariantCache& cache, const BettiTable* table = nullptr);
// The bound report as a single check (fails if any bound is violated).
CheckResult verify_bounds(const Graph& g, InvariantCache& cache);

// Check names: recursion terai linearity froberg distance2 bounds nevo lyu
// cubic remove_induced.
const std::vector<std::string>& all_check_names();
// Comma-separated list; "all" expands. Throws InputError on unknown names.
std::vector<std::string> parse_checks(const std::string& list);
CheckResult run_check(const std::string& name, const Graph& g, InvariantCache& cache);

struct CorpusItem {
  std::size_t seq = 0;
  std::string origin;  // e.g. "line 12" or "gen #4"
  std::optional<Graph> graph;
  std::string error;   // set when graph is empty
};
using ItemSource = std::function<std::optional<CorpusItem>()>;

ItemSource graph6_lines(std::istream& in);
ItemSource from_generator(GraphStream stream);

struct CheckCounts {
  std::size_t pass = 0;
  std::size_t skip = 0;
  std::size_t fail = 0;
};

struct CorpusSummary {
  std::string corpus;
  std::size_t graphs = 0;
  std::size_t input_errors = 0;
  std::size_t oversize = 0;
  std::map<std::string, CheckCounts> counts;
  std::vector<json> violations;    // {"check", "graph6", "details"}
  std::vector<json> errors;        // {"origin", "error"}
  double wall_time = 0.0;

  std::size_t failures() const;
  // 0 all passed, 1 some check failed, 2 input errors.
  int exit_code() const;
};

// Everything except wall_time.
void to_json(json& j, const CorpusSummary& s);

struct CorpusOptions {
  std::vector<std::string> checks;
  int jobs = 1;
  std::size_t batch = 2048;
  // Called in input order for every graph that produced a violation.
  std::function<void(const json&)> on_violation;
};

CorpusSummary run_corpus(const std::string& name, ItemSource source, InvariantCache& cache,
                         const CorpusOptions& options);

}  // namespace edgereg
