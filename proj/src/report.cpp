#include "edgereg/report.hpp"

#include <algorithm>
#include <sstream>

#include "edgereg/graph_io.hpp"

namespace edgereg {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "human") return Format::human;
  throw InputError("unknown format '" + text + "' (json, csv, human)");
}

namespace {

json flags_of(const Graph& g) {
  const std::optional<int> lin = linearity_steps_combinatorial(g);
  return {{"gap_free", is_gap_free(g)},
          {"claw_free", is_claw_free(g)},
          {"lin_steps_combinatorial", lin ? json(*lin) : json(nullptr)}};
}

}  // namespace

json analyze_graph(const Graph& g, InvariantCache& cache, int jobs) {
  const SquarefreeIdeal ideal = edge_ideal(g);
  json out{{"graph6", to_graph6(g)}, {"field", to_string(cache.field())}, {"vertices", g.order()},
           {"edges", g.edge_count()}};
  BettiOptions options = cache.options();
  options.jobs = jobs;
  std::optional<BettiTable> table;
  if (ideal.is_zero()) {
    out["invariants"] = cache.edge_ideal_invariants(g);
    out["betti"] = json{{"n_vars", 0}, {"entries", json::array({{{"i", 0}, {"sigma", json::array()}, {"rank", 1}}})},
                        {"graded", json::array({json::array({1})})}};
  } else {
    table = betti_table(ideal, cache.field(), options);
    out["invariants"] = cache.remember(g, *table);
    out["betti"] = *table;
  }
  out["variables"] = ideal.var_labels();
  EdgeStats stats = degree_stats(g);
  if (!ideal.is_zero()) stats.big_height = big_height(ideal);
  out["stats"] = stats;
  out["flags"] = flags_of(g);
  json bounds = json::array();
  json lemmas = json::object();
  if (!ideal.is_zero()) {
    const BoundReport rep = verify_all_bounds(g, cache, &*table);
    for (const BoundCheck& b : rep.bounds) {
      json row = b;
      row["gap"] = b.bound.applicable ? json(b.effective - b.observed) : json(nullptr);
      bounds.push_back(std::move(row));
    }
    for (const auto& [name, c] : rep.lemma_checks) lemmas[name] = c;
  }
  out["bounds"] = bounds;
  out["lemma_checks"] = lemmas;
  return out;
}

json analyze_ideal(const SquarefreeIdeal& ideal, InvariantCache& cache, int jobs) {
  if (ideal.is_unit()) throw InputError("the unit ideal has no resolution to analyze");
  json out{{"ideal", ideal.to_string()}, {"field", to_string(cache.field())}, {"n_vars", ideal.n_vars()}};
  BettiOptions options = cache.options();
  options.jobs = jobs;
  if (ideal.is_zero()) {
    out["invariants"] = cache.ideal_invariants(ideal);
    out["betti"] = json{{"n_vars", ideal.n_vars()},
                        {"entries", json::array({{{"i", 0}, {"sigma", json::array()}, {"rank", 1}}})},
                        {"graded", json::array({json::array({1})})}};
    return out;
  }
  const BettiTable table = betti_table(ideal, cache.field(), options);
  out["invariants"] = invariants_from_table(ideal, table);
  out["betti"] = table;
  return out;
}

json dual_report(const SquarefreeIdeal& ideal, InvariantCache& cache) {
  if (ideal.is_zero() || ideal.is_unit()) throw InputError("the dual needs a proper nonzero ideal");
  const SquarefreeIdeal dual = alexander_dual(ideal);
  const InvariantRecord inv = cache.ideal_invariants(ideal);
  const InvariantRecord dinv = cache.ideal_invariants(dual);
  json gens = json::array();
  for (VertexSet g : dual.generators()) gens.push_back(vertex_list(g));
  return {{"ideal", ideal.to_string()},
          {"dual", dual.to_string()},
          {"dual_generators", gens},
          {"variables", ideal.var_labels()},
          {"reg_dual", dinv.reg_ideal},
          {"pd_quotient", inv.pd_quotient},
          {"equal", dinv.reg_ideal == inv.pd_quotient},
          {"reg_ideal", inv.reg_ideal},
          {"pd_dual_quotient", dinv.pd_quotient},
          {"converse_equal", inv.reg_ideal == dinv.pd_quotient}};
}

std::string betti_triangle(const std::vector<std::vector<std::uint64_t>>& graded) {
  // rows[r][i] = beta_{i, i + r}
  int top_row = 0;
  for (std::size_t i = 0; i < graded.size(); ++i) {
    for (std::size_t j = 0; j < graded[i].size(); ++j) {
      if (graded[i][j] != 0) top_row = std::max(top_row, static_cast<int>(j) - static_cast<int>(i));
    }
  }
  const std::size_t cols = graded.size();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top_row + 2), std::vector<std::string>(cols));
  std::vector<std::string> head(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    std::uint64_t total = 0;
    for (std::uint64_t b : graded[i]) total += b;
    head[i] = std::to_string(i);
    cells[0][i] = std::to_string(total);
    for (int r = 0; r <= top_row; ++r) {
      const std::size_t j = i + static_cast<std::size_t>(r);
      const std::uint64_t b = j < graded[i].size() ? graded[i][j] : 0;
      cells[static_cast<std::size_t>(r) + 1][i] = b == 0 ? "." : std::to_string(b);
    }
  }
  std::vector<std::size_t> width(cols, 1);
  for (std::size_t i = 0; i < cols; ++i) {
    width[i] = head[i].size();
    for (const auto& row : cells) width[i] = std::max(width[i], row[i].size());
  }
  std::vector<std::string> labels{"total:"};
  for (int r = 0; r <= top_row; ++r) labels.push_back(std::to_string(r) + ":");
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());

  std::ostringstream out;
  auto line = [&](const std::string& label, const std::vector<std::string>& row) {
    out << std::string(lw - label.size(), ' ') << label;
    for (std::size_t i = 0; i < cols; ++i) out << ' ' << std::string(width[i] - row[i].size(), ' ') << row[i];
    out << '\n';
  };
  line("", head);
  for (std::size_t r = 0; r < cells.size(); ++r) line(labels[r], cells[r]);
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// One record per line; fields may be quoted.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

namespace {

// Like json::flatten, but empty containers stay "[]" / "{}" instead of null.
void flatten_into(const json& j, const json::json_pointer& path, std::string& out) {
  if ((j.is_array() || j.is_object()) && !j.empty()) {
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], path / i, out);
    } else {
      for (const auto& [key, value] : j.items()) flatten_into(value, path / key, out);
    }
    return;
  }
  out += csv_field(path.to_string()) + "," + csv_field(j.dump()) + "\n";
}

}  // namespace

std::string flatten_csv(const json& doc) {
  std::string out = "path,value\n";
  flatten_into(doc, json::json_pointer(), out);
  return out;
}

json unflatten_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "path,value") throw InputError("CSV report lacks the path,value header");
  json doc;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) throw InputError("malformed CSV report line: " + line);
    doc[json::json_pointer(fields[0])] = json::parse(fields[1]);
  }
  return doc;
}

std::string render(const json& doc, Format format, const std::string& human) {
  switch (format) {
    case Format::json: return doc.dump(2) + "\n";
    case Format::csv: return flatten_csv(doc);
    case Format::human: return human;
  }
  return {};
}

std::string human_analysis(const json& r) {
  std::ostringstream out;
  if (r.contains("graph6")) {
    out << "graph " << r["graph6"].get<std::string>() << ": " << r["vertices"] << " vertices, " << r["edges"]
        << " edges\n";
  } else {
    out << "ideal " << r["ideal"].get<std::string>() << "\n";
  }
  const json& inv = r["invariants"];
  out << "field " << r["field"].get<std::string>() << "\n";
  out << "reg(I) = " << inv["reg_ideal"];
  if (inv["zero_ideal_convention"].get<bool>()) out << " (zero ideal convention)";
  out << "\npd(S/I) = " << inv["pd_quotient"] << ", depth(S/I) = " << inv["depth_quotient"] << "\n";
  out << "linear steps = " << inv["lin_steps"] << (inv["fully_linear"].get<bool>() ? " (fully linear)" : "") << "\n";
  if (r.contains("flags")) {
    const json& f = r["flags"];
    out << "gap-free " << f["gap_free"] << ", claw-free " << f["claw_free"] << ", complement cycle steps "
        << (f["lin_steps_combinatorial"].is_null() ? std::string("none") : f["lin_steps_combinatorial"].dump())
        << "\n";
    const json& s = r["stats"];
    out << "max degree " << s["d_max"] << ", max edge degree " << s["D_max"].dump() << ", big height "
        << s["big_height"].dump() << ", claw-free constant " << s["C_clawfree"].dump() << "\n";
  }
  std::vector<std::vector<std::uint64_t>> graded = r["betti"]["graded"];
  out << "\nBetti table of S/I\n" << betti_triangle(graded);
  if (r.contains("bounds") && !r["bounds"].empty()) {
    out << "\nbounds\n";
    for (const json& b : r["bounds"]) {
      out << "  " << b["bound"]["name"].get<std::string>() << " on " << b["invariant"].get<std::string>() << ": ";
      if (!b["bound"]["applicable"].get<bool>()) {
        out << "not applicable (" << b["bound"]["violated_hypothesis"].get<std::string>() << ")\n";
        continue;
      }
      out << b["observed"].get<double>() << " <= " << b["effective"].get<double>() << ", gap "
          << b["gap"].get<double>();
      if (b["satisfied"].is_boolean()) out << (b["satisfied"].get<bool>() ? ", ok" : ", VIOLATED");
      if (b.contains("note")) out << " [" << b["note"].get<std::string>() << "]";
      out << "\n";
    }
    for (const auto& [name, c] : r["lemma_checks"].items()) {
      out << "  " << name << ": " << c["status"].get<std::string>() << "\n";
    }
  }
  return out.str();
}

std::string human_summary(const json& s) {
  std::ostringstream out;
  out << "corpus " << s["corpus"].get<std::string>() << ": " << s["graphs"] << " graphs, " << s["input_errors"]
      << " input errors, " << s["oversize"] << " oversize\n";
  for (const auto& [name, c] : s["counts"].items()) {
    out << "  " << name << ": " << c["pass"] << " pass, " << c["skip"] << " skip, " << c["fail"] << " fail\n";
  }
  out << s["violations"] << " violations";
  if (s.contains("wall_time")) out << ", " << s["wall_time"].get<double>() << " s";
  out << "\n";
  return out.str();
}

}  // namespace edgereg
