#include "edgereg/betti.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "edgereg/parallel.hpp"

namespace edgereg {

namespace {

bool entry_less(const BettiEntry& a, const BettiEntry& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
  return lex_less(a.sigma, b.sigma);
}

}  // namespace

BettiTable::BettiTable(int n_vars, std::vector<BettiEntry> entries) : n_vars_(n_vars), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const BettiEntry& e) { return e.rank == 0; });
  std::sort(entries_.begin(), entries_.end(), entry_less);
}

std::uint64_t BettiTable::at(int i, VertexSet sigma) const {
  const BettiEntry key{i, sigma, 0};
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key, entry_less);
  return it != entries_.end() && it->i == i && it->sigma == sigma ? it->rank : 0;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const BettiEntry& e : entries_) pd = std::max(pd, e.i);
  return pd;
}

std::vector<std::vector<std::uint64_t>> BettiTable::graded() const {
  std::vector<std::vector<std::uint64_t>> g(static_cast<std::size_t>(projective_dimension() + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(n_vars_ + 1), 0));
  for (const BettiEntry& e : entries_) {
    g[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.sigma.size())] += e.rank;
  }
  return g;
}

BettiTable betti_table(const SquarefreeIdeal& ideal, Field field, const BettiOptions& options) {
  if (ideal.is_zero() || ideal.is_unit()) throw std::domain_error("Betti table needs a proper nonzero ideal");
  const int n = ideal.n_vars();
  if (n > options.max_vars) {
    throw GuardError("ideal has " + std::to_string(n) + " variables; the Betti guard is " +
                     std::to_string(options.max_vars));
  }
  const std::vector<VertexSet> gens(ideal.generators().begin(), ideal.generators().end());
  const std::uint64_t count = std::uint64_t{1} << n;
  const int jobs = std::max(1, options.jobs);

  std::vector<std::vector<BettiEntry>> found(static_cast<std::size_t>(jobs));
  parallel_blocks(count, jobs, 256, [&](int worker, std::size_t begin, std::size_t end) {
    auto& out = found[static_cast<std::size_t>(worker)];
    std::vector<VertexSet> inside;
    for (std::size_t t = begin; t < end; ++t) {
      const VertexSet sigma(static_cast<std::uint64_t>(t ^ (t >> 1)));  // Gray code
      if (sigma.empty()) continue;
      inside.clear();
      VertexSet covered;
      for (VertexSet g : gens) {
        if (g.subset_of(sigma)) {
          inside.push_back(g);
          covered |= g;
        }
      }
      // A vertex outside every generator in sigma is a cone point of Delta|_sigma.
      if (covered != sigma) continue;
      const HomologyProfile h = reduced_homology_ranks(enumerate_faces_avoiding(inside, sigma), field);
      for (std::size_t k = 0; k < h.ranks.size(); ++k) {
        if (h.ranks[k] == 0) continue;
        const int d = static_cast<int>(k) - 1;
        out.push_back({sigma.size() - d - 1, sigma, h.ranks[k]});
      }
    }
  });

  std::vector<BettiEntry> entries{{0, VertexSet{}, 1}};
  for (auto& part : found) entries.insert(entries.end(), part.begin(), part.end());
  return BettiTable(n, std::move(entries));
}

BettiTable restrict_table(const BettiTable& table, VertexSet within) {
  std::array<int, kMaxVertices> position{};
  int next = 0;
  for (int v : within) position[static_cast<std::size_t>(v)] = next++;
  std::vector<BettiEntry> entries;
  for (const BettiEntry& e : table.entries()) {
    if (!e.sigma.subset_of(within)) continue;
    VertexSet packed;
    for (int v : e.sigma) packed.insert(position[static_cast<std::size_t>(v)]);
    entries.push_back({e.i, packed, e.rank});
  }
  return BettiTable(within.size(), std::move(entries));
}

Linearity linearity_within(const BettiTable& table, VertexSet within) {
  Linearity out;
  int min_degree = std::numeric_limits<int>::max();
  int max_degree = 0;
  for (const BettiEntry& e : table.entries()) {
    if (e.i == 0 || !e.sigma.subset_of(within)) continue;
    out.pd_quotient = std::max(out.pd_quotient, e.i);
    if (e.i == 1) {
      min_degree = std::min(min_degree, e.sigma.size());
      max_degree = std::max(max_degree, e.sigma.size());
    }
  }
  if (out.pd_quotient == 0) {
    out.fully_linear = true;
    return out;
  }
  // Step i of the resolution of I is homological index i + 1 of S/I.
  const int pd_ideal = out.pd_quotient - 1;
  if (min_degree != max_degree) return out;
  int first_bad = pd_ideal + 1;
  for (const BettiEntry& e : table.entries()) {
    const int step = e.i - 1;
    if (step >= 1 && step < first_bad && e.sigma.subset_of(within) && e.sigma.size() != step + min_degree) {
      first_bad = step;
    }
  }
  if (first_bad > pd_ideal) {
    out.lin_steps = pd_ideal;
    out.fully_linear = true;
  } else {
    out.lin_steps = first_bad - 1;
  }
  return out;
}

namespace {

constexpr std::int8_t kNone = std::numeric_limits<std::int8_t>::max();

// out[mask] = best over submasks, for an associative `better`.
template <typename Better>
void subset_transform(std::vector<std::int8_t>& v, int n, Better better) {
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (m & bit) v[m] = better(v[m], v[m ^ bit]);
    }
  }
}

}  // namespace

LinearityIndex::LinearityIndex(const BettiTable& table) {
  const int n = table.n_vars();
  if (n > kDefaultMaxVars) throw GuardError("linearity index beyond the variable guard");
  const std::size_t size = std::size_t{1} << n;
  auto mx = [](std::int8_t a, std::int8_t b) { return std::max(a, b); };
  auto mn = [](std::int8_t a, std::int8_t b) { return std::min(a, b); };
  pd_.assign(size, 0);
  min_deg_.assign(size, kNone);
  max_deg_.assign(size, 0);
  for (const BettiEntry& e : table.entries()) {
    auto& p = pd_[e.sigma.bits()];
    p = std::max<std::int8_t>(p, static_cast<std::int8_t>(e.i));
    if (e.i == 1) {
      const auto d = static_cast<std::int8_t>(e.sigma.size());
      min_deg_[e.sigma.bits()] = std::min(min_deg_[e.sigma.bits()], d);
      max_deg_[e.sigma.bits()] = std::max(max_deg_[e.sigma.bits()], d);
    }
  }
  first_bad_.assign(static_cast<std::size_t>(n + 1), {});
  for (int d = 1; d <= n; ++d) {
    bool used = false;
    for (const BettiEntry& e : table.entries()) used = used || (e.i == 1 && e.sigma.size() == d);
    if (!used) continue;
    auto& fb = first_bad_[static_cast<std::size_t>(d)];
    fb.assign(size, kNone);
    for (const BettiEntry& e : table.entries()) {
      const int step = e.i - 1;
      if (step >= 1 && e.sigma.size() != step + d) {
        fb[e.sigma.bits()] = std::min(fb[e.sigma.bits()], static_cast<std::int8_t>(step));
      }
    }
    subset_transform(fb, n, mn);
  }
  subset_transform(pd_, n, mx);
  subset_transform(min_deg_, n, mn);
  subset_transform(max_deg_, n, mx);
}

Linearity LinearityIndex::operator()(VertexSet within) const {
  const std::size_t m = within.bits();
  Linearity out;
  out.pd_quotient = pd_[m];
  if (out.pd_quotient == 0) {
    out.fully_linear = true;
    return out;
  }
  const int pd_ideal = out.pd_quotient - 1;
  if (min_deg_[m] != max_deg_[m]) return out;
  const int first_bad = std::min<int>(first_bad_[static_cast<std::size_t>(min_deg_[m])][m], pd_ideal + 1);
  if (first_bad > pd_ideal) {
    out.lin_steps = pd_ideal;
    out.fully_linear = true;
  } else {
    out.lin_steps = first_bad - 1;
  }
  return out;
}

InvariantRecord invariants_from_table(const SquarefreeIdeal& ideal, const BettiTable& table) {
  InvariantRecord rec;
  rec.n_vars = ideal.n_vars();
  int reg_quotient = std::numeric_limits<int>::min();
  for (const BettiEntry& e : table.entries()) {
    if (e.i == 0) continue;
    reg_quotient = std::max(reg_quotient, e.sigma.size() - e.i);
    rec.pd_quotient = std::max(rec.pd_quotient, e.i);
    if (e.i <= 2) rec.low_syzygy_reg = std::max(rec.low_syzygy_reg, e.sigma.size() - e.i);
  }
  rec.reg_ideal = reg_quotient + 1;
  rec.depth_quotient = rec.n_vars - rec.pd_quotient;
  for (const BettiEntry& e : table.entries()) {
    if (e.i > 0 && e.sigma.size() - e.i == reg_quotient) rec.witnesses.push_back({e.i, e.sigma});
  }

  const Linearity lin = linearity_within(table, VertexSet::prefix(rec.n_vars));
  rec.lin_steps = lin.lin_steps;
  rec.fully_linear = lin.fully_linear;
  return rec;
}

InvariantRecord invariants(const SquarefreeIdeal& ideal, Field field, const BettiOptions& options) {
  if (ideal.is_unit()) throw std::domain_error("invariants of the unit ideal are undefined");
  if (ideal.is_zero()) {
    InvariantRecord rec;
    rec.n_vars = ideal.n_vars();
    rec.reg_ideal = 2;
    rec.depth_quotient = rec.n_vars;
    rec.fully_linear = true;
    rec.zero_ideal_convention = true;
    return rec;
  }
  return invariants_from_table(ideal, betti_table(ideal, field, options));
}

TeraiReport terai_check(const SquarefreeIdeal& ideal, Field field, const BettiOptions& options) {
  TeraiReport r;
  r.pd_quotient = invariants(ideal, field, options).pd_quotient;
  r.reg_dual = invariants(alexander_dual(ideal), field, options).reg_ideal;
  r.equal = r.reg_dual == r.pd_quotient;
  return r;
}

LinearityReport linearity_cross_check(const Graph& g, const InvariantRecord& inv) {
  LinearityReport r;
  r.betti_steps = inv.lin_steps;
  r.fully_linear = inv.fully_linear;
  r.reg_ideal = inv.reg_ideal;
  r.combinatorial_steps = linearity_steps_combinatorial(g);
  if (!r.combinatorial_steps) {
    r.agree = inv.fully_linear && inv.reg_ideal == 2;
  } else {
    r.agree = !inv.fully_linear && inv.lin_steps == *r.combinatorial_steps;
  }
  return r;
}

LinearityReport linearity_cross_check(const Graph& g, Field field, const BettiOptions& options) {
  if (g.edge_count() == 0) throw std::invalid_argument("linearity cross-check needs a graph with an edge");
  return linearity_cross_check(g, invariants(edge_ideal(g), field, options));
}

}  // namespace edgereg
