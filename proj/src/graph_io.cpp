#include "edgereg/graph_io.hpp"

#include <sstream>
#include <vector>

namespace edgereg {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty line");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw InputError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                       " outside [63, 126]");
    }
  }
  auto value = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw InputError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw InputError("graph6: truncated size header");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }
  if (n > kMaxVertices) throw InputError("graph6: order " + std::to_string(n) + " exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("edge list: missing header line");
  long n = -1;
  long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) throw InputError("edge list: header must be \"n m\"");
  }
  if (n > kMaxVertices) throw InputError("edge list: order " + std::to_string(n) + " exceeds 64");
  std::vector<Edge> edges;
  for (long e = 0; e < m; ++e) {
    if (!next_line()) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    std::istringstream row(line);
    int u = 0;
    int v = 0;
    if (!(row >> u >> v)) throw InputError("edge list: bad edge line \"" + line + "\"");
    edges.push_back({u, v});
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& err) {
    throw InputError(std::string("edge list: ") + err.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const std::vector<Edge> es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace edgereg
