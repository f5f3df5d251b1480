#pragma once

#include <string>

#include "edgereg/betti.hpp"
#include "edgereg/oracle.hpp"
#include "edgereg/serialize.hpp"
#include "edgereg/verifier.hpp"

namespace edgereg {

enum class Format { json, csv, human };
Format parse_format(const std::string& text);  // throws InputError

// Full single-graph report: invariants, stats, flags, the Betti table and,
// for graphs with an edge, every bound with its gap (effective - observed).
json analyze_graph(const Graph& g, InvariantCache& cache, int jobs);
// Invariants and Betti table of an arbitrary squarefree ideal.
json analyze_ideal(const SquarefreeIdeal& ideal, InvariantCache& cache, int jobs);

// Dual generators plus both directions of reg(I^dual) = pd(S/I).
json dual_report(const SquarefreeIdeal& ideal, InvariantCache& cache);

// Graded Betti numbers of S/I, rows j - i, columns i, zeros as dots.
std::string betti_triangle(const std::vector<std::vector<std::uint64_t>>& graded);

// "path,value" rows over the JSON pointers of the flattened document;
// values are compact JSON scalars. unflatten_csv inverts it.
std::string flatten_csv(const json& doc);
json unflatten_csv(const std::string& csv);

std::string render(const json& doc, Format format, const std::string& human);
std::string human_analysis(const json& report);
std::string human_summary(const json& summary);

}  // namespace edgereg
