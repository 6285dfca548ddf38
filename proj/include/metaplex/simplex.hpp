#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace metaplex {

using VertexId = std::uint32_t;

/// A simplex in canonical form: distinct vertex ids in ascending order.
/// Ordering is lexicographic on that sequence, so a face sorts before any
/// simplex it is a prefix of.
class Simplex {
 public:
  Simplex() = default;

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }

  bool contains(VertexId v) const;
  /// Non-strict inclusion: every vertex of `this` is a vertex of `other`.
  bool is_face_of(const Simplex& other) const;
  bool is_proper_face_of(const Simplex& other) const {
    return size() < other.size() && is_face_of(other);
  }

  /// The face obtained by dropping the vertex at position `i`.
  Simplex without(std::size_t i) const;
  /// Adds a vertex not already present; keeps canonical order.
  Simplex with(VertexId v) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

  /// Builds from an already canonical sequence. Callers guarantee the order.
  static Simplex from_sorted(std::vector<VertexId> vertices) {
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
  }

 private:
  std::vector<VertexId> vertices_;
};

/// Canonicalises a vertex list. Throws EmptyVertexList or DuplicateVertex.
Simplex make_simplex(std::vector<VertexId> vertices);
inline Simplex make_simplex(std::initializer_list<VertexId> vertices) {
  return make_simplex(std::vector<VertexId>(vertices));
}

/// The q+1 codimension-one faces of a q-simplex, in lexicographic order.
/// Throws ZeroDimensionalSimplex for a vertex.
std::vector<Simplex> boundary(const Simplex& sigma);

/// Vertex ids joined by '-', e.g. "0-1-3".
std::string label(const Simplex& sigma);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace metaplex
