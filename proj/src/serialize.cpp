#include "edgereg/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace edgereg {

json vertex_list(VertexSet s) { return json(s.to_vector()); }

VertexSet vertex_set_from_json(const json& j) {
  VertexSet s;
  for (const json& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw json::out_of_range::create(401, "vertex index out of range", &j);
    s.insert(x);
  }
  return s;
}

void to_json(json& j, const BettiTable& table) {
  json entries = json::array();
  for (const BettiEntry& e : table.entries()) {
    entries.push_back({{"i", e.i}, {"sigma", vertex_list(e.sigma)}, {"rank", e.rank}});
  }
  j = {{"n_vars", table.n_vars()}, {"entries", std::move(entries)}, {"graded", table.graded()}};
}

void from_json(const json& j, BettiTable& table) {
  std::vector<BettiEntry> entries;
  for (const json& e : j.at("entries")) {
    entries.push_back({e.at("i").get<int>(), vertex_set_from_json(e.at("sigma")), e.at("rank").get<std::uint64_t>()});
  }
  table = BettiTable(j.at("n_vars").get<int>(), std::move(entries));
}

void to_json(json& j, const InvariantRecord& rec) {
  json witnesses = json::array();
  for (const RegularityWitness& w : rec.witnesses) witnesses.push_back({{"i", w.i}, {"sigma", vertex_list(w.sigma)}});
  j = {{"n_vars", rec.n_vars},
       {"reg_ideal", rec.reg_ideal},
       {"pd_quotient", rec.pd_quotient},
       {"depth_quotient", rec.depth_quotient},
       {"lin_steps", rec.lin_steps},
       {"fully_linear", rec.fully_linear},
       {"zero_ideal_convention", rec.zero_ideal_convention},
       {"witnesses", std::move(witnesses)},
       {"low_syzygy_reg", rec.low_syzygy_reg}};
}

void from_json(const json& j, InvariantRecord& rec) {
  rec.n_vars = j.at("n_vars").get<int>();
  rec.reg_ideal = j.at("reg_ideal").get<int>();
  rec.pd_quotient = j.at("pd_quotient").get<int>();
  rec.depth_quotient = j.at("depth_quotient").get<int>();
  rec.lin_steps = j.at("lin_steps").get<int>();
  rec.fully_linear = j.at("fully_linear").get<bool>();
  rec.zero_ideal_convention = j.at("zero_ideal_convention").get<bool>();
  rec.low_syzygy_reg = j.at("low_syzygy_reg").get<int>();
  rec.witnesses.clear();
  for (const json& w : j.at("witnesses")) {
    rec.witnesses.push_back({w.at("i").get<int>(), vertex_set_from_json(w.at("sigma"))});
  }
}

void to_json(json& j, const EdgeStats& stats) {
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  j = {{"n", stats.n},
       {"d_max", stats.d_max},
       {"D_max", opt(stats.D_max)},
       {"big_height", opt(stats.big_height)},
       {"C_clawfree", opt(stats.C_clawfree)}};
}

void to_json(json& j, const BoundValue& bound) {
  j = {{"name", bound.name},
       {"value", std::isfinite(bound.value) ? json(bound.value) : json(nullptr)},
       {"params", bound.params},
       {"applicable", bound.applicable}};
  if (!bound.applicable) j["violated_hypothesis"] = bound.violated_hypothesis;
}

std::uint64_t betti_digest(const BettiTable& table) {
  const std::string text = json(table).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace edgereg
