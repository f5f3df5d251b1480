#include "edgereg/homology.hpp"

#include <algorithm>

#include "edgereg/graph_io.hpp"
#include "edgereg/linalg.hpp"

namespace edgereg {

std::string to_string(Field f) { return f == Field::gf2 ? "gf2" : "rational"; }

Field parse_field(const std::string& text) {
  if (text == "gf2") return Field::gf2;
  if (text == "rational") return Field::rational;
  throw InputError("unknown field \"" + text + "\" (expected gf2 or rational)");
}

bool HomologyProfile::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::uint64_t r) { return r == 0; });
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const auto r = static_cast<std::int64_t>(ranks[i]);
    chi += (i % 2 == 1) ? r : -r;  // i = d + 1, sign (-1)^d
  }
  return chi;
}

std::int64_t euler_characteristic(const FaceLists& faces) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const auto f = static_cast<std::int64_t>(faces[k].size());
    chi += (k % 2 == 1) ? f : -f;  // dimension k - 1
  }
  return chi;
}

namespace {

void guard(std::size_t count) {
  if (count > kMaxFaces) {
    throw GuardError("complex has more than " + std::to_string(kMaxFaces) + " faces");
  }
}

void trim_trailing_empty(FaceLists& faces) {
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
}

}  // namespace

FaceLists enumerate_faces_avoiding(std::span<const VertexSet> nonfaces, VertexSet ground) {
  FaceLists faces;
  for (VertexSet nf : nonfaces) {
    if (nf.empty()) return faces;  // void
  }
  const std::vector<int> verts = ground.to_vector();
  // For each vertex, the rest of every nonface through it that lies in ground.
  std::array<std::vector<VertexSet>, kMaxVertices> blockers;
  std::array<VertexSet, kMaxVertices> single_blockers{};
  for (VertexSet nf : nonfaces) {
    if (!nf.subset_of(ground)) continue;
    for (int v : nf) {
      const VertexSet rest = nf.without(v);
      if (rest.size() == 1) {
        single_blockers[static_cast<std::size_t>(v)] |= rest;
      } else {
        blockers[static_cast<std::size_t>(v)].push_back(rest);
      }
    }
  }
  faces.resize(verts.size() + 1);
  std::size_t total = 0;
  auto admits = [&](VertexSet face, int v) {
    if (face.intersects(single_blockers[static_cast<std::size_t>(v)])) return false;
    const auto& rests = blockers[static_cast<std::size_t>(v)];
    return std::none_of(rests.begin(), rests.end(), [&](VertexSet r) { return r.subset_of(face); });
  };
  auto walk = [&](auto&& self, VertexSet face, std::size_t next) -> void {
    faces[static_cast<std::size_t>(face.size())].push_back(face);
    guard(++total);
    for (std::size_t i = next; i < verts.size(); ++i) {
      const int v = verts[i];
      if (admits(face, v)) self(self, face.with(v), i + 1);
    }
  };
  walk(walk, VertexSet{}, 0);
  trim_trailing_empty(faces);
  return faces;
}

FaceLists enumerate_faces(const SimplicialComplex& complex) {
  FaceLists faces;
  if (complex.is_void()) return faces;
  VertexSet ground;
  for (VertexSet f : complex.facets()) ground |= f;
  const std::vector<int> verts = ground.to_vector();
  faces.resize(verts.size() + 1);
  std::size_t total = 0;
  auto walk = [&](auto&& self, VertexSet face, std::size_t next) -> void {
    faces[static_cast<std::size_t>(face.size())].push_back(face);
    guard(++total);
    for (std::size_t i = next; i < verts.size(); ++i) {
      const VertexSet bigger = face.with(verts[i]);
      if (complex.contains(bigger)) self(self, bigger, i + 1);
    }
  };
  walk(walk, VertexSet{}, 0);
  trim_trailing_empty(faces);
  return faces;
}

SimplicialComplex restrict(const SimplicialComplex& complex, VertexSet sigma) {
  if (complex.is_void()) return complex;
  std::vector<VertexSet> faces;
  for (VertexSet f : complex.facets()) faces.push_back(f & sigma);
  return SimplicialComplex::from_facets(complex.n_vars(), std::move(faces));
}

namespace {

std::size_t face_index(const std::vector<VertexSet>& sorted, VertexSet face) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), face, lex_less);
  return static_cast<std::size_t>(it - sorted.begin());
}

// Rank of the boundary map from faces of size k to faces of size k - 1.
std::size_t boundary_rank_gf2(const FaceLists& faces, std::size_t k) {
  const auto& upper = faces[k];
  const auto& lower = faces[k - 1];
  linalg::BitMatrix m(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (int v : upper[r]) m.set(r, face_index(lower, upper[r].without(v)));
  }
  return m.rank_in_place();
}

std::size_t boundary_rank_rational(const FaceLists& faces, std::size_t k) {
  const auto& upper = faces[k];
  const auto& lower = faces[k - 1];
  std::vector<std::vector<mpz_class>> m(upper.size(), std::vector<mpz_class>(lower.size()));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int position = 0;
    for (int v : upper[r]) {
      m[r][face_index(lower, upper[r].without(v))] = (position % 2 == 0) ? 1 : -1;
      ++position;
    }
  }
  return linalg::rational_rank(std::move(m));
}

}  // namespace

HomologyProfile reduced_homology_ranks(const FaceLists& faces, Field field) {
  HomologyProfile profile;
  if (faces.empty()) return profile;
  const std::size_t sizes = faces.size();  // face sizes 0 .. sizes-1
  // rank_of[k]: rank of the boundary from size-k faces; rank_of[0] = 0.
  std::vector<std::size_t> rank_of(sizes + 1, 0);
  for (std::size_t k = 1; k < sizes; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    rank_of[k] = field == Field::gf2 ? boundary_rank_gf2(faces, k) : boundary_rank_rational(faces, k);
  }
  profile.ranks.resize(sizes);
  for (std::size_t k = 0; k < sizes; ++k) {
    profile.ranks[k] = faces[k].size() - rank_of[k] - rank_of[k + 1];
  }
  return profile;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex, Field field) {
  return reduced_homology_ranks(enumerate_faces(complex), field);
}

}  // namespace edgereg
