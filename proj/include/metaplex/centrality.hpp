#pragma once

#include "metaplex/complex.hpp"
#include "metaplex/concentration.hpp"
#include "metaplex/rational.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace metaplex {

/// Facet-mediated adjacency among the q-simplices of a weighted complex.
/// Rows and columns follow `order`, the canonical enumeration of S_q.
struct AdjacencyView {
  int q = 0;
  std::vector<Simplex> order;
  Eigen::MatrixXi binary;
  RationalMatrix strengths;
  /// a(sigma_j) in view order.
  RationalVector weights;
  /// Lexicographically smallest facet attaining strengths(i, j), keyed i < j.
  std::map<std::pair<std::size_t, std::size_t>, Simplex> mediators;

  std::size_t size() const noexcept { return order.size(); }
  /// Throws SimplexNotInComplex.
  std::size_t index_of(const Simplex& sigma) const;
};

/// True iff some facet properly contains both simplices; false for i == j.
/// Throws DimensionMismatch when the dimensions differ.
bool facet_adjacent(const SimplicialComplex& complex, const Simplex& a, const Simplex& b);

/// Largest facet weight over facets containing both; 0 when not adjacent.
Rational strength(const SimplicialComplex& complex, const ConcentrationAssignment& assignment,
                  const Simplex& a, const Simplex& b);

/// Throws EmptyLevel when S_q is empty.
AdjacencyView adjacency_matrices(const SimplicialComplex& complex,
                                 const ConcentrationAssignment& assignment, int q);

/// Row sums of a binary adjacency matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> row_degrees(
    const Eigen::MatrixBase<Derived>& adjacency) {
  return adjacency.rowwise().sum();
}

/// D = W a: strengths (or any coupling matrix) applied to a weight vector.
/// Passing a vector of ones gives vertex strength; passing the binary matrix
/// gives the vertex-weighted degree.
template <typename DerivedW, typename DerivedA>
Eigen::Matrix<typename DerivedW::Scalar, Eigen::Dynamic, 1> coupled_degrees(
    const Eigen::MatrixBase<DerivedW>& coupling, const Eigen::MatrixBase<DerivedA>& weights) {
  return coupling * weights;
}

long simplicial_degree(const AdjacencyView& view, const Simplex& sigma);
Rational weighted_degree(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                         const Simplex& sigma);

/// k^(1-alpha) D^alpha; exactly k at alpha 0, exactly D at alpha 1, and 0
/// when k is 0.
double combined_degree(long k, const Rational& weighted, double alpha);
double combined_degree(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                       const Simplex& sigma, double alpha);

/// (1 / (strength(i,j) a(sigma_j)))^alpha for adjacent view indices.
/// Throws NotAdjacent.
double step_cost(const AdjacencyView& view, const ConcentrationAssignment& assignment, std::size_t i,
                 std::size_t j, double alpha);

inline constexpr double unreachable = std::numeric_limits<double>::infinity();

/// Directed all-pairs distances d^alpha; `unreachable` where no walk exists.
struct DistanceTable {
  double alpha = 1.0;
  Eigen::MatrixXd dist;
};

/// Dijkstra from every source over the directed step-cost graph.
/// Throws InvalidConfig for alpha < 0.
DistanceTable shortest_distances(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                                 double alpha);

struct Components {
  /// Component id per view index; ids numbered by smallest member.
  std::vector<std::size_t> id;
  std::size_t count = 0;
  std::vector<std::vector<std::size_t>> members() const;
};

Components connected_components(const AdjacencyView& view);

/// Sum of d(i, j) over the other members of i's component. Pass
/// `dist.transpose()` to sum incoming distances instead.
template <typename Derived>
typename Derived::Scalar farness(const Eigen::MatrixBase<Derived>& dist, const Components& components,
                                 Eigen::Index i) {
  typename Derived::Scalar total = 0;
  for (Eigen::Index j = 0; j < dist.cols(); ++j) {
    if (j != i && components.id[static_cast<std::size_t>(j)] == components.id[static_cast<std::size_t>(i)]) {
      total += dist(i, j);
    }
  }
  return total;
}

/// Reciprocal farness; 0 for a simplex alone in its component.
template <typename Derived>
typename Derived::Scalar closeness(const Eigen::MatrixBase<Derived>& dist, const Components& components,
                                   Eigen::Index i) {
  const auto f = farness(dist, components, i);
  return f > 0 ? 1 / f : 0;
}

/// Sum of 1/d(i, j) over j != i; unreachable pairs add nothing.
template <typename Derived>
typename Derived::Scalar harmonic(const Eigen::MatrixBase<Derived>& dist, Eigen::Index i) {
  typename Derived::Scalar total = 0;
  for (Eigen::Index j = 0; j < dist.cols(); ++j) {
    if (j != i && std::isfinite(dist(i, j)) && dist(i, j) > 0) total += 1 / dist(i, j);
  }
  return total;
}

struct CentralityRow {
  Simplex simplex;
  long degree = 0;
  Rational weighted_degree;
  double combined_degree = 0;
  double closeness = 0;
  double harmonic = 0;
  double farness = 0;
  std::size_t component = 0;
};

struct CentralityReport {
  int q = 0;
  double alpha = 1.0;
  bool incoming = false;
  std::vector<CentralityRow> rows;
};

/// Every index at level q. alpha must lie in [0, 1] (InvalidConfig).
CentralityReport centrality_report(const SimplicialComplex& complex, const ConcentrationAssignment& assignment,
                                   int q, double alpha, bool incoming = false);

enum class CentralityColumn { Simplex, Degree, WeightedDegree, CombinedDegree, Closeness, Harmonic, Farness };

/// Stable ordering by one column, ties broken by simplex order.
void sort_rows(CentralityReport& report, CentralityColumn column, bool descending);

}  // namespace metaplex
