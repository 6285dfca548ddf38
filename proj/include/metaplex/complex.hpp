#pragma once

#include "metaplex/simplex.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace metaplex {

/// A finite abstract simplicial complex over the vertex universe
/// `0..vertex_count()-1`.
///
/// Each level `S_q` is kept as a lexicographically sorted vector, so the
/// position of a simplex in `level(q)` is its canonical index at that level
/// (the row/column used by every matrix built over the level). The facet
/// list is rebuilt after every mutation; a constructed complex is never
/// mutated behind a const reference and is safe to share between readers.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}

  /// Builds a complex holding exactly `simplices`, without adding faces.
  /// Only meant for checking externally supplied data with validate_closure.
  static SimplicialComplex from_simplices_unchecked(std::size_t vertex_count,
                                                    std::span<const Simplex> simplices);

  /// Inserts `sigma` together with all of its non-empty faces.
  /// Throws VertexOutOfRange. Inserting a present simplex is a no-op.
  void insert(const Simplex& sigma);
  /// Batched insert with a single facet rebuild.
  void insert_all(std::span<const Simplex> simplices);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Highest populated dimension, -1 for the empty complex.
  int dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  bool empty() const noexcept { return levels_.empty(); }
  std::size_t size() const noexcept;

  std::span<const Simplex> level(int q) const;
  std::size_t level_size(int q) const { return level(q).size(); }

  bool contains(const Simplex& sigma) const { return index_of(sigma).has_value(); }
  /// Canonical index of `sigma` within `level(sigma.dim())`.
  std::optional<std::size_t> index_of(const Simplex& sigma) const;

  /// Maximal simplices in lexicographic order.
  std::span<const Simplex> facets() const noexcept { return facets_; }
  bool is_facet(const Simplex& sigma) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.levels_ == b.levels_;
  }

 private:
  void check_range(const Simplex& sigma) const;
  void merge(std::vector<std::set<Simplex>>& pending);
  void refresh_facets();

  std::size_t vertex_count_;
  std::vector<std::vector<Simplex>> levels_;
  std::vector<Simplex> facets_;
};

/// Value-returning form of SimplicialComplex::insert.
SimplicialComplex insert_with_closure(SimplicialComplex complex, const Simplex& sigma);

inline std::span<const Simplex> facets(const SimplicialComplex& complex) { return complex.facets(); }

/// The (q+1)-simplices of the complex that contain the q-simplex `sigma`.
/// Throws SimplexNotInComplex.
std::vector<Simplex> cofaces(const SimplicialComplex& complex, const Simplex& sigma);

/// Number of (q+1)-simplices containing `sigma`. Throws SimplexNotInComplex.
std::size_t upper_degree(const SimplicialComplex& complex, const Simplex& sigma);

/// All simplices of dimension at most `d`.
SimplicialComplex skeleton(const SimplicialComplex& complex, int d);

struct ClosureViolation {
  Simplex simplex;
  Simplex missing_face;
};

struct ClosureReport {
  std::vector<ClosureViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Lists every codimension-one face that is absent from the complex.
ClosureReport validate_closure(const SimplicialComplex& complex);

/// A simple undirected graph on vertices `0..vertex_count()-1`.
class Graph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  explicit Graph(std::size_t vertex_count = 0) : vertex_count_(vertex_count), adjacency_(vertex_count) {}

  /// Adds {u, v}. Throws DuplicateVertex for a loop and VertexOutOfRange for
  /// an unknown vertex; repeated edges are absorbed.
  void add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges as (min, max) pairs in lexicographic order.
  const std::set<Edge>& edges() const noexcept { return edges_; }
  const std::set<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }

 private:
  std::size_t vertex_count_;
  std::vector<std::set<VertexId>> adjacency_;
  std::set<Edge> edges_;
};

/// Maximal cliques (Bron-Kerbosch with pivoting), each canonical, sorted.
std::vector<Simplex> maximal_cliques(const Graph& graph);

/// Clique complex truncated at `max_dim`. Every vertex of the graph appears.
/// Throws InvalidConfig when max_dim < 1.
SimplicialComplex clique_complex(const Graph& graph, int max_dim);

/// The graph as a complex of dimension at most one.
SimplicialComplex one_skeleton_complex(const Graph& graph);

}  // namespace metaplex
