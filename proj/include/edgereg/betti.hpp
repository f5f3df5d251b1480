#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

inline constexpr int kDefaultMaxVars = 22;

struct BettiEntry {
  int i = 0;          // homological index for S/I
  VertexSet sigma;    // squarefree multidegree
  std::uint64_t rank = 0;
  bool operator==(const BettiEntry&) const = default;
};

// Multigraded Betti numbers beta_{i,sigma}(S/I), nonzero entries only,
// ordered by (i, |sigma|, sigma lexicographically).
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int n_vars, std::vector<BettiEntry> entries);

  int n_vars() const { return n_vars_; }
  const std::vector<BettiEntry>& entries() const { return entries_; }
  std::uint64_t at(int i, VertexSet sigma) const;
  // beta_{i,j} = sum of beta_{i,sigma} over |sigma| = j; indexed [i][j].
  std::vector<std::vector<std::uint64_t>> graded() const;
  int projective_dimension() const;

  bool operator==(const BettiTable&) const = default;

 private:
  int n_vars_ = 0;
  std::vector<BettiEntry> entries_;
};

struct BettiOptions {
  int max_vars = kDefaultMaxVars;
  int jobs = 1;
};

// Hochster: beta_{i,sigma}(S/I) = rank H~_{|sigma|-i-1}(Delta|_sigma). Restrictions
// that are cones (some vertex of sigma lies in no generator inside sigma)
// are skipped. Throws std::domain_error on the zero or unit ideal and
// GuardError past options.max_vars variables.
BettiTable betti_table(const SquarefreeIdeal& ideal, Field field, const BettiOptions& options = {});

// Entries with sigma inside `within`, renumbered onto 0..|within|-1. This
// is the table of the ideal generated by the generators inside `within`,
// over the variables of `within`.
BettiTable restrict_table(const BettiTable& table, VertexSet within);

struct Linearity {
  int pd_quotient = 0;
  int lin_steps = 0;
  bool fully_linear = false;
};

// Linearity of the ideal generated by the generators inside `within`, read
// off the entries of `table` supported there (no table is rebuilt). An
// empty restriction is the zero ideal: fully linear, 0 steps.
Linearity linearity_within(const BettiTable& table, VertexSet within);

// Answers linearity_within for every subset at once after an
// O(n 2^n) subset transform of the table.
class LinearityIndex {
 public:
  explicit LinearityIndex(const BettiTable& table);
  Linearity operator()(VertexSet within) const;

 private:
  // Per mask: max i and the min and max generator degree inside it.
  std::vector<std::int8_t> pd_;
  std::vector<std::int8_t> min_deg_;
  std::vector<std::int8_t> max_deg_;
  // first_bad_[d][mask]: smallest step s >= 1 with an entry of index s + 1
  // inside mask whose size differs from s + d.
  std::vector<std::vector<std::int8_t>> first_bad_;
};

struct RegularityWitness {
  int i = 0;
  VertexSet sigma;
  bool operator==(const RegularityWitness&) const = default;
};

struct InvariantRecord {
  int n_vars = 0;
  int reg_ideal = 0;       // reg(I) = reg(S/I) + 1
  int pd_quotient = 0;     // pd(S/I)
  int depth_quotient = 0;  // n_vars - pd(S/I)
  // Largest k with Tor_i(I)_j = 0 for 1 <= i <= k and j != i + (generator
  // degree). When every step of the resolution is linear, this is pd(I)
  // and fully_linear is set.
  int lin_steps = 0;
  bool fully_linear = false;
  // reg of the zero ideal is taken to be 2.
  bool zero_ideal_convention = false;
  // All (i, sigma) with |sigma| - i = reg(S/I).
  std::vector<RegularityWitness> witnesses;
  // max{ j - i : beta_{i,j}(S/I) != 0, i <= 2 }
  int low_syzygy_reg = 0;

  bool operator==(const InvariantRecord&) const = default;
};

InvariantRecord invariants_from_table(const SquarefreeIdeal& ideal, const BettiTable& table);
InvariantRecord invariants(const SquarefreeIdeal& ideal, Field field, const BettiOptions& options = {});

struct TeraiReport {
  int reg_dual = 0;     // reg(I^dual)
  int pd_quotient = 0;  // pd(S/I)
  bool equal = false;
};

// Both sides from independent Betti tables.
TeraiReport terai_check(const SquarefreeIdeal& ideal, Field field, const BettiOptions& options = {});

struct LinearityReport {
  int betti_steps = 0;
  bool fully_linear = false;
  std::optional<int> combinatorial_steps;  // nullopt: no induced C_{>=4} in g^c
  int reg_ideal = 0;
  bool agree = false;
};

// Betti-table linearity against the induced-cycle count of the complement.
// Requires g to have an edge.
LinearityReport linearity_cross_check(const Graph& g, Field field, const BettiOptions& options = {});
LinearityReport linearity_cross_check(const Graph& g, const InvariantRecord& inv);

}  // namespace edgereg
