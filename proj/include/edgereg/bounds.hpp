#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

// Slack granted to a bound when compared with an integer invariant.
inline constexpr double kBoundSlack = 1e-9;

struct BoundValue {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> params;
  bool applicable = true;
  std::string violated_hypothesis;  // set when !applicable
};

// Regularity bounds for k-steps linear edge ideals, base b = (k+4)/2:
//   maxdeg:     log_b(d/(k+1)) + 3
//   nvertices:  log_b((n-1) ln b/(k+1) + 2/(k+4)) + 3
// Throws std::invalid_argument for k < 1 or x < 1.
enum class RegBoundKind { maxdeg, nvertices };
BoundValue reg_bound(RegBoundKind kind, int k, int x);

// Projective dimension bounds. Hypothesis violations come back with
// applicable = false rather than as exceptions.
enum class PdBoundKind { edge_degree, clawfree, maxdeg, s2_main, faltings, hl };
struct PdBoundParams {
  int n = 0;
  int D = 0;  // max edge degree
  int C = 0;  // claw-free constant
  int d = 0;  // max vertex degree
  int k = 0;  // Serre S_k index, s2_main only
  int b = 0;  // big height
};
BoundValue pd_bound(PdBoundKind kind, const PdBoundParams& p);

std::string to_string(RegBoundKind kind);
std::string to_string(PdBoundKind kind);

// m / (log_{(k+4)/2}(d/(k+1)) + 3): the least max edge degree a regularity
// witness subgraph on m vertices with max degree d can have.
double edge_degree_lower_bound(int m, int d, int k);

using RegOracle = std::function<int(const Graph&)>;

struct TrimResult {
  Graph trimmed;
  std::vector<int> removed;  // labels of deleted vertices, in order
};

// Repeatedly deletes the smallest-index vertex w with
// reg(G) > reg(G - st w) + 1 until none remains. Each deletion first
// confirms reg(G) <= reg(G - w) and throws std::logic_error otherwise.
TrimResult trim(const Graph& g, const RegOracle& reg);

struct ConditionMargin {
  std::string name;
  bool pass = true;
  double worst_margin = 0.0;  // smallest (allowed - observed); negative fails
  double worst_at = 0.0;
};

struct BootstrapReport {
  int k = 0;
  double f_at_1 = 0.0;
  std::vector<ConditionMargin> conditions;  // nondecreasing, concave, f(1) >= 2, g(1/f' - 1) <= f
  bool pass = true;
};

// The regularity bootstrap for the maximum-degree bound
// g(x) = log_b((x+1)/(k+1)) + 3 and its vertex-count solution
// f(x) = log_b(x ln b/(k+1) + C) + 3 with C = 2/(k+4) - ln b/(k+1).
double bootstrap_g(int k, double x);
double bootstrap_f(int k, double x);
double bootstrap_f_prime(int k, double x);

// The grid must be sorted ascending within [1, inf). Throws
// std::invalid_argument on an empty grid, k < 1 or tol < 0, and
// std::domain_error on a non-finite intermediate.
BootstrapReport bootstrap_verify(int k, std::span<const double> grid, double tol);
// 1, 2, ..., upto
std::vector<double> integer_grid(long upto);

}  // namespace edgereg
