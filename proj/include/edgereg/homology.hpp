#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgereg/ideal.hpp"
#include "edgereg/vertex_set.hpp"

namespace edgereg {

enum class Field { gf2, rational };

std::string to_string(Field f);
Field parse_field(const std::string& text);  // "gf2" | "rational"; throws InputError

// Raised when a computation would exceed a size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxFaces = std::size_t{1} << 22;

// Ranks of reduced homology H~_d for d = -1 .. dim. Empty for the void
// complex.
struct HomologyProfile {
  std::vector<std::uint64_t> ranks;  // ranks[d + 1]

  std::uint64_t rank(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < ranks.size() ? ranks[i] : 0;
  }
  bool acyclic() const;
  // sum of (-1)^d rank(d)
  std::int64_t euler_characteristic() const;
  bool operator==(const HomologyProfile&) const = default;
};

// Faces grouped by size (index = size, so index 0 holds ∅ for nonvoid
// complexes), each group in lexicographic order of sorted vertex tuples.
using FaceLists = std::vector<std::vector<VertexSet>>;

FaceLists enumerate_faces(const SimplicialComplex& complex);
// Faces are the subsets of `ground` that contain no set of `nonfaces`.
FaceLists enumerate_faces_avoiding(std::span<const VertexSet> nonfaces, VertexSet ground);

// Reduced Euler characteristic from face counts: sum of (-1)^(k-1) f_k over
// face sizes k, the empty face included.
std::int64_t euler_characteristic(const FaceLists& faces);

// Faces of the result are the faces of `complex` inside `sigma`.
SimplicialComplex restrict(const SimplicialComplex& complex, VertexSet sigma);

// Augmented boundary maps with vertex-sorted simplices and alternating
// signs; rank H~_d = (f_d - rank d_d) - rank d_{d+1}. Throws GuardError
// past kMaxFaces faces.
HomologyProfile reduced_homology_ranks(const FaceLists& faces, Field field);
HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex, Field field);

}  // namespace edgereg
