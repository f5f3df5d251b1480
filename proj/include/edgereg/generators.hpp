#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "edgereg/graph.hpp"

namespace edgereg {

// SplitMix64. Same seed, same sequence on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

namespace gen {

// Sides {0..m-1} and {m..m+n-1}.
Graph complete_bipartite(int m, int n);
Graph complete(int n);
Graph cycle(int k);  // k >= 3
Graph path(int k);   // k vertices
// l disjoint edges on 2l vertices: (0,1), (2,3), ...
Graph disjoint_edges(int l);
// Pairs i < j are visited column by column (j outer), one draw each.
Graph gnp(int n, double p, std::uint64_t seed);

inline constexpr int kMaxAllLabeled = 6;

}  // namespace gen

// Pull-style stream; nullopt marks the end.
using GraphStream = std::function<std::optional<Graph>()>;

namespace gen {

// All 2^(n choose 2) labeled graphs on n <= 6 vertices, edge masks in
// increasing order (bit k = k-th pair in graph6 column order).
GraphStream all_labeled(int n);
// all_labeled(0), ..., all_labeled(n_max) back to back.
GraphStream all_labeled_upto(int n_max);
// `count` graphs; graph i has order uniform in [n_min, n_max] and edge
// probability uniform in [0, 1).
GraphStream random_corpus(int count, int n_min, int n_max, std::uint64_t seed);
GraphStream single(Graph g);

// Parses "kind:args". Kinds: knm:m,n  complete:n  cycle:k  path:k
// edges:l  gnp:n,p[,seed]  all_labeled:n  all_upto:n
// random:count,n_min,n_max[,seed]. Missing seeds take `default_seed`.
// Throws InputError.
GraphStream parse_spec(std::string_view spec, std::uint64_t default_seed);

}  // namespace gen

}  // namespace edgereg
