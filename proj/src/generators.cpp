#include "edgereg/generators.hpp"

#include <charconv>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgereg/graph_io.hpp"

namespace edgereg::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete_bipartite(int m, int n) {
  require(m >= 0 && n >= 0, "complete_bipartite needs nonnegative sides");
  std::vector<Edge> es;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) es.push_back({a, m + b});
  }
  return Graph::from_edges(m + n, es);
}

Graph complete(int n) {
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) es.push_back({i, j});
  }
  return Graph::from_edges(n, es);
}

Graph cycle(int k) {
  require(k >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) es.push_back({i, (i + 1) % k});
  return Graph::from_edges(k, es);
}

Graph path(int k) {
  require(k >= 1, "path needs at least 1 vertex");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
  return Graph::from_edges(k, es);
}

Graph disjoint_edges(int l) {
  require(l >= 0 && 2 * l <= kMaxVertices, "disjoint_edges needs 0 <= l <= 32");
  std::vector<Edge> es;
  for (int i = 0; i < l; ++i) es.push_back({2 * i, 2 * i + 1});
  return Graph::from_edges(2 * l, es);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0 && n <= kMaxVertices, "gnp order outside [0, 64]");
  require(p >= 0.0 && p <= 1.0, "gnp probability outside [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng.uniform() < p) es.push_back({i, j});
    }
  }
  return Graph::from_edges(n, es);
}

GraphStream all_labeled(int n) {
  require(n >= 0 && n <= kMaxAllLabeled, "all_labeled is limited to n <= 6");
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  auto mask = std::make_shared<std::uint64_t>(0);
  return [n, pairs, total, mask]() -> std::optional<Graph> {
    if (*mask >= total) return std::nullopt;
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((*mask >> k) & 1U) es.push_back(pairs[k]);
    }
    ++*mask;
    return Graph::from_edges(n, es);
  };
}

GraphStream all_labeled_upto(int n_max) {
  require(n_max >= 0 && n_max <= kMaxAllLabeled, "all_labeled is limited to n <= 6");
  auto n = std::make_shared<int>(0);
  auto current = std::make_shared<GraphStream>(all_labeled(0));
  return [n_max, n, current]() -> std::optional<Graph> {
    for (;;) {
      if (auto g = (*current)()) return g;
      if (++*n > n_max) return std::nullopt;
      *current = all_labeled(*n);
    }
  };
}

GraphStream random_corpus(int count, int n_min, int n_max, std::uint64_t seed) {
  require(count >= 0, "random corpus count must be nonnegative");
  require(0 <= n_min && n_min <= n_max && n_max <= kMaxVertices, "random corpus order range invalid");
  auto rng = std::make_shared<SplitMix64>(seed);
  auto emitted = std::make_shared<int>(0);
  return [=]() -> std::optional<Graph> {
    if (*emitted >= count) return std::nullopt;
    ++*emitted;
    const int n = rng->between(n_min, n_max);
    const double p = rng->uniform();
    return gnp(n, p, rng->next());
  };
}

GraphStream single(Graph g) {
  auto done = std::make_shared<bool>(false);
  return [g = std::move(g), done]() -> std::optional<Graph> {
    if (*done) return std::nullopt;
    *done = true;
    return g;
  };
}

namespace {

std::vector<std::string_view> split_args(std::string_view args) {
  std::vector<std::string_view> out;
  while (!args.empty()) {
    const std::size_t comma = args.find(',');
    out.push_back(args.substr(0, comma));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("generator spec \"" + std::string(spec) + "\": bad number \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace

GraphStream parse_spec(std::string_view spec, std::uint64_t default_seed) {
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::vector<std::string_view> args =
      colon == std::string_view::npos ? std::vector<std::string_view>{} : split_args(spec.substr(colon + 1));
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw InputError("generator spec \"" + std::string(spec) + "\": wrong number of arguments");
    }
  };
  auto integer = [&](std::size_t i) { return parse_number<int>(args[i], spec); };

  try {
    if (kind == "knm") {
      arity(2, 2);
      return single(complete_bipartite(integer(0), integer(1)));
    }
    if (kind == "complete") {
      arity(1, 1);
      return single(complete(integer(0)));
    }
    if (kind == "cycle") {
      arity(1, 1);
      return single(cycle(integer(0)));
    }
    if (kind == "path") {
      arity(1, 1);
      return single(path(integer(0)));
    }
    if (kind == "edges") {
      arity(1, 1);
      return single(disjoint_edges(integer(0)));
    }
    if (kind == "gnp") {
      arity(2, 3);
      const double p = parse_number<double>(args[1], spec);
      const std::uint64_t seed = args.size() == 3 ? parse_number<std::uint64_t>(args[2], spec) : default_seed;
      return single(gnp(integer(0), p, seed));
    }
    if (kind == "all_labeled") {
      arity(1, 1);
      return all_labeled(integer(0));
    }
    if (kind == "all_upto") {
      arity(1, 1);
      return all_labeled_upto(integer(0));
    }
    if (kind == "random") {
      arity(3, 4);
      const std::uint64_t seed = args.size() == 4 ? parse_number<std::uint64_t>(args[3], spec) : default_seed;
      return random_corpus(integer(0), integer(1), integer(2), seed);
    }
  } catch (const std::invalid_argument& err) {
    throw InputError("generator spec \"" + std::string(spec) + "\": " + err.what());
  }
  throw InputError("unknown generator kind \"" + std::string(kind) + "\"");
}

}  // namespace edgereg::gen
