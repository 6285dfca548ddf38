#include "metaplex/simplex.hpp"

#include "metaplex/error.hpp"

#include <algorithm>

namespace metaplex {

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != i) out.push_back(vertices_[k]);
  }
  return from_sorted(std::move(out));
}

Simplex Simplex::with(VertexId v) const {
  std::vector<VertexId> out = vertices_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return from_sorted(std::move(out));
}

Simplex make_simplex(std::vector<VertexId> vertices) {
  if (vertices.empty()) {
    throw MetaplexError(ErrorCode::EmptyVertexList, "a simplex needs at least one vertex");
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end()) {
    throw MetaplexError(ErrorCode::DuplicateVertex,
                        "vertex " + std::to_string(*it) + " listed more than once");
  }
  return Simplex::from_sorted(std::move(vertices));
}

std::vector<Simplex> boundary(const Simplex& sigma) {
  if (sigma.dim() < 1) {
    throw MetaplexError(ErrorCode::ZeroDimensionalSimplex,
                        "boundary of vertex " + label(sigma) + " is not taken");
  }
  std::vector<Simplex> faces;
  faces.reserve(sigma.size());
  // Dropping the last vertex first yields lexicographic order.
  for (std::size_t i = sigma.size(); i-- > 0;) faces.push_back(sigma.without(i));
  return faces;
}

std::string label(const Simplex& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(sigma[i]);
  }
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (VertexId v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace metaplex
