// edgereg: regularity, projective dimension and Betti tables of edge ideals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "edgereg/bounds.hpp"
#include "edgereg/generators.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/oracle.hpp"
#include "edgereg/report.hpp"
#include "edgereg/verifier.hpp"

namespace {

using namespace edgereg;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string field = "gf2";
  int jobs = 1;
  int max_n = kDefaultMaxVars;
  bool force = false;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string cache_path;
};

struct InputConfig {
  std::string path = "-";
  bool edges = false;
  bool ideal = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph read_graph(const InputConfig& in) {
  const std::string text = slurp(in.path);
  if (in.edges) {
    std::istringstream s(text);
    return read_edge_list(s);
  }
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return from_graph6(line);
  }
  throw InputError("no graph6 line in input");
}

SquarefreeIdeal read_ideal_input(const InputConfig& in) {
  std::istringstream s(slurp(in.path));
  return read_ideal(s);
}

BettiOptions betti_options(const RunConfig& cfg) {
  if (cfg.jobs < 1) throw InputError("--jobs must be at least 1");
  if (cfg.max_n < 1) throw InputError("--max-n must be positive");
  if (cfg.max_n > kDefaultMaxVars && !cfg.force) {
    throw InputError("--max-n beyond " + std::to_string(kDefaultMaxVars) + " needs --force");
  }
  return BettiOptions{cfg.max_n, 1};
}

std::unique_ptr<InvariantCache> make_cache(const RunConfig& cfg) {
  auto cache = std::make_unique<InvariantCache>(parse_field(cfg.field), betti_options(cfg));
  if (!cfg.cache_path.empty()) cache->attach_file(cfg.cache_path, std::cerr);
  return cache;
}

int cmd_analyze(const RunConfig& cfg, const InputConfig& in) {
  const Format format = parse_format(cfg.format);
  auto cache = make_cache(cfg);
  json report;
  if (in.ideal) {
    report = analyze_ideal(read_ideal_input(in), *cache, cfg.jobs);
  } else {
    const Graph g = read_graph(in);
    if (g.active_vertices().size() > cfg.max_n) {
      throw InputError("graph has " + std::to_string(g.active_vertices().size()) +
                       " non-isolated vertices; raise --max-n (with --force past 22)");
    }
    report = analyze_graph(g, *cache, cfg.jobs);
  }
  std::cout << render(report, format, human_analysis(report));
  bool violated = false;
  for (const json& b : report.value("bounds", json::array())) violated = violated || b["satisfied"] == false;
  for (const auto& [name, c] : report.value("lemma_checks", json::object()).items()) {
    violated = violated || c["status"] == "fail";
  }
  return violated ? kExitFail : 0;
}

int cmd_dual(const RunConfig& cfg, const InputConfig& in) {
  const Format format = parse_format(cfg.format);
  auto cache = make_cache(cfg);
  const SquarefreeIdeal ideal = in.ideal ? read_ideal_input(in) : edge_ideal(read_graph(in));
  if (ideal.is_zero() || ideal.is_unit()) throw InputError("the dual needs a proper nonzero ideal");
  if (ideal.n_vars() > cfg.max_n) throw InputError("ideal exceeds --max-n variables");
  const json report = dual_report(ideal, *cache);
  std::ostringstream human;
  human << "I      = " << report["ideal"].get<std::string>() << "\n"
        << "I dual = " << report["dual"].get<std::string>() << "\n"
        << "reg(I dual) = " << report["reg_dual"] << ", pd(S/I) = " << report["pd_quotient"]
        << (report["equal"].get<bool>() ? ", equal" : ", DIFFERENT") << "\n"
        << "reg(I) = " << report["reg_ideal"] << ", pd(S/I dual) = " << report["pd_dual_quotient"]
        << (report["converse_equal"].get<bool>() ? ", equal" : ", DIFFERENT") << "\n";
  std::cout << render(report, format, human.str());
  return report["equal"].get<bool>() && report["converse_equal"].get<bool>() ? 0 : kExitFail;
}

int cmd_verify(const RunConfig& cfg, const InputConfig& in, const std::string& gen_spec, const std::string& checks,
               const std::string& violations_path) {
  const Format format = parse_format(cfg.format);
  CorpusOptions options;
  options.checks = parse_checks(checks);
  options.jobs = cfg.jobs;
  auto cache = make_cache(cfg);

  std::ofstream violations_file;
  if (!violations_path.empty()) {
    violations_file.open(violations_path);
    if (!violations_file) throw InputError("cannot write " + violations_path);
  }
  std::ostream& violations = violations_path.empty() ? std::cerr : violations_file;
  options.on_violation = [&](const json& v) { violations << v.dump() << '\n'; };

  std::ifstream file;
  ItemSource source;
  std::string corpus;
  if (!gen_spec.empty()) {
    source = from_generator(gen::parse_spec(gen_spec, cfg.seed));
    corpus = gen_spec;
  } else if (in.path == "-") {
    source = graph6_lines(std::cin);
    corpus = "stdin";
  } else {
    file.open(in.path);
    if (!file) throw InputError("cannot open " + in.path);
    source = graph6_lines(file);
    corpus = in.path;
  }

  const CorpusSummary summary = run_corpus(corpus, std::move(source), *cache, options);
  for (const json& e : summary.errors) {
    std::cerr << "edgereg: " << e["origin"].get<std::string>() << ": "
              << (e.contains("error") ? e["error"].get<std::string>()
                                      : "skipped " + e["graph6"].get<std::string>() + " (" +
                                            e["skipped"].get<std::string>() + ")")
              << "\n";
  }
  json doc = summary;
  doc["wall_time"] = summary.wall_time;
  std::cout << render(doc, format, human_summary(doc));
  return summary.exit_code();
}

int cmd_bootstrap(const RunConfig& cfg, int k_min, int k_max, long grid_max, double tol) {
  const Format format = parse_format(cfg.format);
  if (k_min < 1 || k_max < k_min) throw InputError("bad k range");
  if (grid_max < 1) throw InputError("grid must reach at least 1");
  if (tol < 0) throw InputError("tolerance must be nonnegative");
  const std::vector<double> grid = integer_grid(grid_max);
  json reports = json::array();
  bool pass = true;
  std::ostringstream human;
  for (int k = k_min; k <= k_max; ++k) {
    const BootstrapReport r = bootstrap_verify(k, grid, tol);
    json conds = json::array();
    human << "k = " << k << ": f(1) = " << r.f_at_1 << (r.pass ? ", pass" : ", FAIL") << "\n";
    for (const ConditionMargin& c : r.conditions) {
      conds.push_back({{"name", c.name}, {"pass", c.pass}, {"worst_margin", c.worst_margin}, {"worst_at", c.worst_at}});
      human << "  " << c.name << ": worst margin " << c.worst_margin << " at x = " << c.worst_at
            << (c.pass ? "" : "  FAIL") << "\n";
    }
    reports.push_back({{"k", k}, {"f_at_1", r.f_at_1}, {"pass", r.pass}, {"conditions", conds}});
    pass = pass && r.pass;
  }
  const json doc{{"grid_max", grid_max}, {"tol", tol}, {"reports", reports}, {"pass", pass}};
  std::cout << render(doc, format, human.str());
  return pass ? 0 : kExitFail;
}

int cmd_gen(const RunConfig& cfg, const std::string& spec) {
  GraphStream stream = gen::parse_spec(spec, cfg.seed);
  while (std::optional<Graph> g = stream()) std::cout << to_graph6(*g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity and projective dimension of edge ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--field", cfg.field, "Coefficient field: gf2 or rational")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "Variable guard for Betti computations")->capture_default_str();
  app.add_flag("--force", cfg.force, "Allow --max-n beyond 22");
  app.add_option("--seed", cfg.seed, "Seed for generators without one")->capture_default_str();
  app.add_option("--format", cfg.format, "json, csv or human")->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "Persistent invariant cache (JSON lines)");

  InputConfig in;
  auto add_input = [&](CLI::App* sub, bool ideal) {
    sub->add_option("input", in.path, "Input file, - for stdin")->capture_default_str();
    sub->add_flag("--edges", in.edges, "Input is an edge list instead of graph6");
    if (ideal) sub->add_flag("--ideal", in.ideal, "Input is an ideal file");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Invariants, Betti table and bounds of one graph");
  add_input(analyze, true);

  CLI::App* dual = app.add_subcommand("dual", "Alexander dual and the duality check");
  add_input(dual, true);

  std::string gen_spec, checks = "all", violations_path;
  CLI::App* verify = app.add_subcommand("verify", "Run checks over a graph6 stream or a generator");
  verify->add_option("input", in.path, "graph6 file, - for stdin")->capture_default_str();
  verify->add_option("--gen", gen_spec, "Generator spec, e.g. all_labeled:5");
  verify->add_option("--checks", checks, "Comma-separated checks or all")->capture_default_str();
  verify->add_option("--violations", violations_path, "Write violations here instead of stderr");

  int k_min = 1, k_max = 5;
  long grid_max = 1000000;
  double tol = 1e-9;
  CLI::App* bootstrap = app.add_subcommand("bootstrap-check", "Numeric check of the regularity bootstrap");
  bootstrap->add_option("--k-min", k_min)->capture_default_str();
  bootstrap->add_option("--k-max", k_max)->capture_default_str();
  bootstrap->add_option("--grid", grid_max, "Integer grid 1..N")->capture_default_str();
  bootstrap->add_option("--tol", tol)->capture_default_str();

  std::string spec;
  CLI::App* gen = app.add_subcommand("gen", "Print generated graphs as graph6");
  gen->add_option("spec", spec, "Generator spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, in);
    if (*dual) return cmd_dual(cfg, in);
    if (*verify) return cmd_verify(cfg, in, gen_spec, checks, violations_path);
    if (*bootstrap) return cmd_bootstrap(cfg, k_min, k_max, grid_max, tol);
    if (*gen) return cmd_gen(cfg, spec);
  } catch (const InputError& e) {
    std::cerr << "edgereg: " << e.what() << "\n";
    return kExitInput;
  } catch (const GuardError& e) {
    std::cerr << "edgereg: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "edgereg: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "edgereg: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
