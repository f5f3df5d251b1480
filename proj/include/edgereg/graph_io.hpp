#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edgereg/graph.hpp"

namespace edgereg {

// Malformed external input (graph6, edge lists, ideal files, CLI specs).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard graph6: size header (one byte 63+n, or '~' plus 18 bits for
// n >= 63), then the upper triangle column by column, 6 bits per byte.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header; trailing CR/LF is ignored.
Graph from_graph6(std::string_view text);

// First line "n m", then m lines "u v" with 0-based endpoints.
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

}  // namespace edgereg
