#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgereg/graph_io.hpp"
#include "edgereg/report.hpp"

using namespace edgereg;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("edgereg_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(p);
  return p;
}

std::vector<Graph> sample(int count, std::uint64_t seed) {
  std::vector<Graph> out;
  GraphStream s = gen::random_corpus(count, 2, 10, seed);
  while (auto g = s()) out.push_back(std::move(*g));
  return out;
}

std::string full_output(const Graph& g, InvariantCache& cache) {
  std::string out = analyze_graph(g, cache, 1).dump();
  if (g.edge_count() > 0) out += json(verify_all_bounds(g, cache)).dump();
  for (const auto& name : {"terai", "recursion", "lyu"}) out += json(run_check(name, g, cache)).dump();
  return out;
}

}  // namespace

TEST_CASE("Betti triangle") {
  const auto c5 = betti_table(edge_ideal(gen::cycle(5)), Field::gf2).graded();
  CHECK(betti_triangle(c5) ==
        "       0 1 2 3\n"
        "total: 1 5 5 1\n"
        "    0: 1 . . .\n"
        "    1: . 5 5 .\n"
        "    2: . . . 1\n");
}

TEST_CASE("analysis fields") {
  InvariantCache cache(Field::gf2);
  const json k2 = analyze_graph(gen::complete(2), cache, 1);
  CHECK(k2["invariants"]["reg_ideal"] == 2);
  CHECK(k2["invariants"]["pd_quotient"] == 1);
  CHECK(k2["flags"]["gap_free"] == true);
  CHECK(k2["flags"]["claw_free"] == true);

  const json c5 = analyze_graph(gen::cycle(5), cache, 1);
  CHECK(c5["invariants"]["reg_ideal"] == 3);
  CHECK(c5["invariants"]["pd_quotient"] == 3);
  CHECK(c5["invariants"]["lin_steps"] == 1);
  for (const json& b : c5["bounds"]) CHECK(b.contains("gap"));

  const json empty = analyze_graph(Graph(3), cache, 1);
  CHECK(empty["invariants"]["reg_ideal"] == 2);
  CHECK(empty["invariants"]["pd_quotient"] == 0);
  CHECK(empty["invariants"]["zero_ideal_convention"] == true);
}

TEST_CASE("dual reports") {
  InvariantCache cache(Field::gf2);
  const json p3 = dual_report(edge_ideal(gen::path(3)), cache);
  CHECK(p3["dual_generators"] == json::array({json::array({1}), json::array({0, 2})}));
  CHECK(p3["reg_dual"] == 2);
  CHECK(p3["pd_quotient"] == 2);
  CHECK(p3["equal"] == true);

  const json c4 = dual_report(edge_ideal(gen::cycle(4)), cache);
  CHECK(c4["dual_generators"] == json::array({json::array({0, 2}), json::array({1, 3})}));
  CHECK(c4["reg_dual"] == 3);
  CHECK(c4["pd_quotient"] == 3);

  const json k2 = dual_report(edge_ideal(gen::complete(2)), cache);
  CHECK(k2["dual_generators"] == json::array({json::array({0}), json::array({1})}));
  CHECK(k2["reg_dual"] == 1);
  CHECK(k2["pd_quotient"] == 1);
  CHECK_THROWS_AS(dual_report(SquarefreeIdeal::zero(2), cache), InputError);
}

TEST_CASE("CSV carries the same data as JSON") {
  InvariantCache cache(Field::gf2);
  std::vector<json> docs;
  for (const Graph& g : sample(30, 8)) docs.push_back(analyze_graph(g, cache, 1));
  CorpusOptions opts;
  opts.checks = all_check_names();
  docs.push_back(run_corpus("r", from_generator(gen::random_corpus(40, 1, 7, 3)), cache, opts));
  docs.push_back(json{{"empty_list", json::array()}, {"empty_map", json::object()}, {"text", "a,b \"c\""},
                      {"nested", {{"x", nullptr}, {"y", 1.5}}}});
  for (const json& d : docs) {
    const std::string csv = flatten_csv(d);
    CHECK(csv.rfind("path,value\n", 0) == 0);
    CHECK(unflatten_csv(csv) == d);
  }
  CHECK_THROWS_AS(unflatten_csv("nonsense"), InputError);
}

TEST_CASE("cache round trip is byte-identical") {
  const auto path = temp_file("cache.jsonl");
  const std::vector<Graph> graphs = sample(100, 77);
  std::vector<std::string> cold;
  {
    InvariantCache cache(Field::gf2);
    std::ostringstream warnings;
    CHECK(cache.attach_file(path, warnings) == 0);
    for (const Graph& g : graphs) cold.push_back(full_output(g, cache));
    CHECK(warnings.str().empty());
  }
  InvariantCache warm(Field::gf2);
  std::ostringstream warnings;
  CHECK(warm.attach_file(path, warnings) > 0);
  CHECK(warnings.str().empty());
  const std::size_t loaded = warm.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(full_output(graphs[i], warm) == cold[i]);
  CHECK(warm.hits() > 0);
  CHECK(warm.size() == loaded);  // nothing had to be recomputed

  // A cache built for the other field is a different set of keys.
  InvariantCache rational(Field::rational);
  CHECK(rational.edge_key(gen::cycle(4)) != warm.edge_key(gen::cycle(4)));
  std::filesystem::remove(path);
}

TEST_CASE("corrupt cache lines are skipped with a warning") {
  const auto path = temp_file("corrupt.jsonl");
  {
    InvariantCache cache(Field::gf2);
    std::ostringstream w;
    cache.attach_file(path, w);
    cache.edge_ideal_invariants(gen::cycle(5));
    cache.edge_ideal_invariants(gen::cycle(4));
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n" << R"({"key": "x"})" << "\n\n";
  }
  InvariantCache cache(Field::gf2);
  std::ostringstream w;
  CHECK(cache.attach_file(path, w) == 2);
  CHECK(w.str().find(":3:") != std::string::npos);
  CHECK(w.str().find(":4:") != std::string::npos);
  CHECK(cache.reg(gen::cycle(5)) == 3);
  CHECK(cache.hits() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("human") == Format::human);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
  const json doc{{"a", 1}};
  CHECK(render(doc, Format::json, "h").find("\"a\": 1") != std::string::npos);
  CHECK(render(doc, Format::csv, "h") == "path,value\n/a,1\n");
  CHECK(render(doc, Format::human, "h") == "h");
}
