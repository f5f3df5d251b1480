#include "edgereg/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace edgereg {

namespace {

double log_base(double base, double x) { return std::log(x) / std::log(base); }

BoundValue inapplicable(BoundValue v, std::string why) {
  v.applicable = false;
  v.value = std::numeric_limits<double>::quiet_NaN();
  v.violated_hypothesis = std::move(why);
  return v;
}

}  // namespace

std::string to_string(RegBoundKind kind) { return kind == RegBoundKind::maxdeg ? "reg_maxdeg" : "reg_nvertices"; }

std::string to_string(PdBoundKind kind) {
  switch (kind) {
    case PdBoundKind::edge_degree: return "pd_edge_degree";
    case PdBoundKind::clawfree: return "pd_clawfree";
    case PdBoundKind::maxdeg: return "pd_maxdeg";
    case PdBoundKind::s2_main: return "pd_s2_main";
    case PdBoundKind::faltings: return "pd_faltings";
    case PdBoundKind::hl: return "pd_hl";
  }
  return "pd_unknown";
}

BoundValue reg_bound(RegBoundKind kind, int k, int x) {
  if (k < 1) throw std::invalid_argument("regularity bounds need k >= 1");
  if (x < 1) throw std::invalid_argument("regularity bounds need a positive degree or vertex count");
  const double base = (k + 4) / 2.0;
  BoundValue v;
  v.name = to_string(kind);
  v.params = {{"k", k}, {kind == RegBoundKind::maxdeg ? "d" : "n", x}};
  if (kind == RegBoundKind::maxdeg) {
    v.value = log_base(base, x / (k + 1.0)) + 3.0;
  } else {
    v.value = log_base(base, (x - 1) * std::log(base) / (k + 1.0) + 2.0 / (k + 4.0)) + 3.0;
  }
  return v;
}

BoundValue pd_bound(PdBoundKind kind, const PdBoundParams& p) {
  BoundValue v;
  v.name = to_string(kind);
  const double n = p.n;
  if (p.n < 1) return inapplicable(v, "n >= 1");
  switch (kind) {
    case PdBoundKind::edge_degree:
      v.params = {{"n", p.n}, {"D", p.D}};
      if (p.D < 1) return inapplicable(v, "D >= 1");
      v.value = n * (1.0 - 1.0 / p.D);
      break;
    case PdBoundKind::clawfree:
      v.params = {{"n", p.n}, {"C", p.C}};
      if (p.C < 1) return inapplicable(v, "C >= 1");
      v.value = n * (1.0 - 1.0 / p.C);
      break;
    case PdBoundKind::maxdeg:
      v.params = {{"n", p.n}, {"d", p.d}};
      if (p.d < 1) return inapplicable(v, "d >= 1");
      v.value = n * (1.0 - 1.0 / (2.0 * p.d));
      break;
    case PdBoundKind::s2_main: {
      v.params = {{"n", p.n}, {"k", p.k}};
      if (p.k < 2) return inapplicable(v, "k >= 2");
      const double base = (p.k + 3) / 2.0;
      v.value = log_base(base, (n - 1) * std::log(base) / p.k + 2.0 / (p.k + 3.0)) + 3.0;
      break;
    }
    case PdBoundKind::faltings:
      v.params = {{"n", p.n}, {"b", p.b}};
      if (p.b < 1) return inapplicable(v, "b >= 1");
      v.value = static_cast<double>(p.n - (p.n - 1) / p.b);
      break;
    case PdBoundKind::hl:
      v.params = {{"n", p.n}, {"b", p.b}};
      if (p.b < 1) return inapplicable(v, "b >= 1");
      v.value = n - (2.0 * n - 1.0) / (p.b + 1.0);
      break;
  }
  return v;
}

double edge_degree_lower_bound(int m, int d, int k) {
  if (k < 1 || m < 1 || d < 1) throw std::invalid_argument("edge degree lower bound needs m, d, k >= 1");
  const double denominator = log_base((k + 4) / 2.0, d / (k + 1.0)) + 3.0;
  if (!(denominator > 0.0)) throw std::domain_error("edge degree lower bound: nonpositive denominator");
  return m / denominator;
}

TrimResult trim(const Graph& g, const RegOracle& reg) {
  TrimResult result{g, {}};
  for (;;) {
    const Graph& cur = result.trimmed;
    const int r = reg(cur);
    int chosen = -1;
    for (int w = 0; w < cur.order(); ++w) {
      if (r > reg(remove(cur, w, RemoveMode::star)) + 1) {
        chosen = w;
        break;
      }
    }
    if (chosen < 0) return result;
    Graph smaller = remove(cur, chosen, RemoveMode::vertex);
    if (r > reg(smaller)) {
      throw std::logic_error("trim: reg(G) exceeds both reg(G - st w) + 1 and reg(G - w)");
    }
    result.removed.push_back(cur.labels()[static_cast<std::size_t>(chosen)]);
    result.trimmed = std::move(smaller);
  }
}

double bootstrap_g(int k, double x) {
  return log_base((k + 4) / 2.0, (x + 1.0) / (k + 1.0)) + 3.0;
}

double bootstrap_f(int k, double x) {
  const double base = (k + 4) / 2.0;
  return log_base(base, (x - 1.0) * std::log(base) / (k + 1.0) + 2.0 / (k + 4.0)) + 3.0;
}

double bootstrap_f_prime(int k, double x) {
  const double lnb = std::log((k + 4) / 2.0);
  return 1.0 / ((x - 1.0) * lnb + 2.0 * (k + 1.0) / (k + 4.0));
}

std::vector<double> integer_grid(long upto) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(std::max(0L, upto)));
  for (long x = 1; x <= upto; ++x) grid.push_back(static_cast<double>(x));
  return grid;
}

BootstrapReport bootstrap_verify(int k, std::span<const double> grid, double tol) {
  if (k < 1) throw std::invalid_argument("bootstrap check needs k >= 1");
  if (grid.empty()) throw std::invalid_argument("bootstrap check needs a nonempty grid");
  if (tol < 0) throw std::invalid_argument("bootstrap tolerance must be nonnegative");

  BootstrapReport rep;
  rep.k = k;
  ConditionMargin monotone{"nondecreasing", true, std::numeric_limits<double>::infinity(), grid.front()};
  ConditionMargin concave{"concave_down", true, std::numeric_limits<double>::infinity(), grid.front()};
  ConditionMargin base_case{"f(1) >= 2", true, 0.0, 1.0};
  ConditionMargin bootstrap{"g(1/f'(x) - 1) <= f(x)", true, std::numeric_limits<double>::infinity(), grid.front()};

  auto finite = [](double v, const char* what) {
    if (!std::isfinite(v)) throw std::domain_error(std::string("bootstrap check: non-finite ") + what);
    return v;
  };
  auto record = [](ConditionMargin& c, double margin, double at) {
    if (margin < c.worst_margin) {
      c.worst_margin = margin;
      c.worst_at = at;
    }
  };

  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1.0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw std::invalid_argument("bootstrap grid must be strictly increasing within [1, inf)");
    }
    f[i] = finite(bootstrap_f(k, grid[i]), "f");
    const double slope = finite(bootstrap_f_prime(k, grid[i]), "f'");
    const double g = finite(bootstrap_g(k, 1.0 / slope - 1.0), "g");
    record(bootstrap, f[i] - g, grid[i]);
    if (i > 0) record(monotone, f[i] - f[i - 1], grid[i]);
    if (i > 1) {
      const double left = (f[i - 1] - f[i - 2]) / (grid[i - 1] - grid[i - 2]);
      const double right = (f[i] - f[i - 1]) / (grid[i] - grid[i - 1]);
      record(concave, left - right, grid[i - 1]);
    }
  }
  rep.f_at_1 = bootstrap_f(k, 1.0);
  base_case.worst_margin = rep.f_at_1 - 2.0;

  for (ConditionMargin* c : {&monotone, &concave, &base_case, &bootstrap}) {
    if (std::isinf(c->worst_margin)) c->worst_margin = 0.0;  // grid too short to test
    c->pass = c->worst_margin >= -tol;
    rep.pass = rep.pass && c->pass;
    rep.conditions.push_back(*c);
  }
  return rep;
}

}  // namespace edgereg
