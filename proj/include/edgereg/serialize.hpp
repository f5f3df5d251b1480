#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "edgereg/betti.hpp"
#include "edgereg/bounds.hpp"
#include "edgereg/graph.hpp"

namespace edgereg {

using json = nlohmann::json;

json vertex_list(VertexSet s);
VertexSet vertex_set_from_json(const json& j);

// {"n_vars", "entries": [{"i", "sigma", "rank"}], "graded": [[...]]}
void to_json(json& j, const BettiTable& table);
void from_json(const json& j, BettiTable& table);

void to_json(json& j, const InvariantRecord& rec);
void from_json(const json& j, InvariantRecord& rec);

void to_json(json& j, const EdgeStats& stats);
void to_json(json& j, const BoundValue& bound);

// FNV-1a over the compact JSON dump of the table.
std::uint64_t betti_digest(const BettiTable& table);
std::string hex64(std::uint64_t v);

}  // namespace edgereg
