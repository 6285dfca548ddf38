#include "metaplex/centrality.hpp"

#include "metaplex/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

namespace metaplex {

std::size_t AdjacencyView::index_of(const Simplex& sigma) const {
  auto it = std::lower_bound(order.begin(), order.end(), sigma);
  if (it == order.end() || *it != sigma) {
    throw MetaplexError(ErrorCode::SimplexNotInComplex, label(sigma) + " is not at level " + std::to_string(q));
  }
  return static_cast<std::size_t>(it - order.begin());
}

namespace {

void check_same_dim(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) {
    throw MetaplexError(ErrorCode::DimensionMismatch, label(a) + " vs " + label(b));
  }
}

// Sets of size q+1 drawn from `gamma`, in lexicographic order.
void q_faces(const Simplex& gamma, std::size_t size, std::size_t start, std::vector<VertexId>& acc,
             std::vector<Simplex>& out) {
  if (acc.size() == size) {
    out.push_back(Simplex::from_sorted(acc));
    return;
  }
  for (std::size_t i = start; i + (size - acc.size()) <= gamma.size(); ++i) {
    acc.push_back(gamma[i]);
    q_faces(gamma, size, i + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

bool facet_adjacent(const SimplicialComplex& complex, const Simplex& a, const Simplex& b) {
  check_same_dim(a, b);
  if (a == b) return false;
  return std::ranges::any_of(complex.facets(), [&](const Simplex& gamma) {
    return a.is_proper_face_of(gamma) && b.is_proper_face_of(gamma);
  });
}

Rational strength(const SimplicialComplex& complex, const ConcentrationAssignment& assignment,
                  const Simplex& a, const Simplex& b) {
  check_same_dim(a, b);
  Rational best = 0;
  if (a == b) return best;
  for (const Simplex& gamma : complex.facets()) {
    if (a.is_proper_face_of(gamma) && b.is_proper_face_of(gamma)) best = std::max(best, assignment.at(gamma));
  }
  return best;
}

AdjacencyView adjacency_matrices(const SimplicialComplex& complex,
                                 const ConcentrationAssignment& assignment, int q) {
  const auto level = complex.level(q);
  if (level.empty()) {
    throw MetaplexError(ErrorCode::EmptyLevel, "no simplices of dimension " + std::to_string(q));
  }
  AdjacencyView view;
  view.q = q;
  view.order.assign(level.begin(), level.end());
  const auto n = static_cast<Eigen::Index>(level.size());
  view.binary = Eigen::MatrixXi::Zero(n, n);
  view.strengths = RationalMatrix::Constant(n, n, Rational(0));
  view.weights = assignment.level_vector(complex, q);

  std::vector<VertexId> acc;
  for (const Simplex& gamma : complex.facets()) {
    if (gamma.dim() <= q) continue;
    const Rational& w = assignment.at(gamma);
    std::vector<Simplex> faces;
    q_faces(gamma, static_cast<std::size_t>(q) + 1, 0, acc, faces);
    std::vector<std::size_t> idx;
    idx.reserve(faces.size());
    for (const Simplex& f : faces) idx.push_back(view.index_of(f));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const auto i = static_cast<Eigen::Index>(idx[a]);
        const auto j = static_cast<Eigen::Index>(idx[b]);
        view.binary(i, j) = view.binary(j, i) = 1;
        // Facets arrive in lexicographic order, so a strict improvement keeps
        // the smallest maximiser as mediator.
        if (w > view.strengths(i, j)) {
          view.strengths(i, j) = view.strengths(j, i) = w;
          view.mediators[{idx[a], idx[b]}] = gamma;
        }
      }
    }
  }
  return view;
}

long simplicial_degree(const AdjacencyView& view, const Simplex& sigma) {
  return view.binary.row(static_cast<Eigen::Index>(view.index_of(sigma))).sum();
}

Rational weighted_degree(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                         const Simplex& sigma) {
  const auto i = static_cast<Eigen::Index>(view.index_of(sigma));
  Rational total = 0;
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(view.size()); ++j) {
    if (view.binary(i, j)) total += assignment.at(view.order[static_cast<std::size_t>(j)]) * view.strengths(i, j);
  }
  return total;
}

double combined_degree(long k, const Rational& weighted, double alpha) {
  if (k == 0) return 0.0;
  if (alpha == 0.0) return static_cast<double>(k);
  if (alpha == 1.0) return to_double(weighted);
  return std::pow(static_cast<double>(k), 1.0 - alpha) * std::pow(to_double(weighted), alpha);
}

double combined_degree(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                       const Simplex& sigma, double alpha) {
  return combined_degree(simplicial_degree(view, sigma), weighted_degree(view, assignment, sigma), alpha);
}

namespace {

double cost_from(const Rational& strength_value, const Rational& destination_weight, double alpha) {
  if (alpha == 0.0) return 1.0;
  const Rational inverse = 1 / (strength_value * destination_weight);
  if (alpha == 1.0) return to_double(inverse);
  return std::pow(to_double(inverse), alpha);
}

}  // namespace

double step_cost(const AdjacencyView& view, const ConcentrationAssignment& assignment, std::size_t i,
                 std::size_t j, double alpha) {
  const auto r = static_cast<Eigen::Index>(i);
  const auto c = static_cast<Eigen::Index>(j);
  if (i >= view.size() || j >= view.size() || view.binary(r, c) == 0) {
    throw MetaplexError(ErrorCode::NotAdjacent, "no facet-mediated step between view indices " +
                                                    std::to_string(i) + " and " + std::to_string(j));
  }
  return cost_from(view.strengths(r, c), assignment.at(view.order[j]), alpha);
}

DistanceTable shortest_distances(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                                 double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw MetaplexError(ErrorCode::InvalidConfig, "alpha must be a finite non-negative number");
  }
  const auto n = static_cast<Eigen::Index>(view.size());
  std::vector<std::vector<std::pair<Eigen::Index, double>>> out_edges(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (view.binary(i, j)) {
        out_edges[static_cast<std::size_t>(i)].emplace_back(
            j, step_cost(view, assignment, static_cast<std::size_t>(i), static_cast<std::size_t>(j), alpha));
      }
    }
  }

  DistanceTable table{alpha, Eigen::MatrixXd::Constant(n, n, unreachable)};
  using Entry = std::pair<double, Eigen::Index>;
  for (Eigen::Index source = 0; source < n; ++source) {
    auto dist = table.dist.row(source);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    dist(source) = 0.0;
    frontier.emplace(0.0, source);
    while (!frontier.empty()) {
      const auto [d, u] = frontier.top();
      frontier.pop();
      if (d > dist(u)) continue;
      for (const auto& [v, c] : out_edges[static_cast<std::size_t>(u)]) {
        if (d + c < dist(v)) {
          dist(v) = d + c;
          frontier.emplace(dist(v), v);
        }
      }
    }
  }
  return table;
}

std::vector<std::vector<std::size_t>> Components::members() const {
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t i = 0; i < id.size(); ++i) out[id[i]].push_back(i);
  return out;
}

Components connected_components(const AdjacencyView& view) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components c;
  c.id.assign(view.size(), unset);
  for (std::size_t start = 0; start < view.size(); ++start) {
    if (c.id[start] != unset) continue;
    std::vector<std::size_t> stack{start};
    c.id[start] = c.count;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < view.size(); ++v) {
        if (c.id[v] == unset && view.binary(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v))) {
          c.id[v] = c.count;
          stack.push_back(v);
        }
      }
    }
    ++c.count;
  }
  return c;
}

CentralityReport centrality_report(const SimplicialComplex& complex, const ConcentrationAssignment& assignment,
                                   int q, double alpha, bool incoming) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw MetaplexError(ErrorCode::InvalidConfig, "alpha must lie in [0, 1] for the combined degree");
  }
  const AdjacencyView view = adjacency_matrices(complex, assignment, q);
  const DistanceTable table = shortest_distances(view, assignment, alpha);
  const Components components = connected_components(view);
  const Eigen::MatrixXd dist = incoming ? Eigen::MatrixXd(table.dist.transpose()) : table.dist;

  const Eigen::VectorXi k = row_degrees(view.binary);
  const RationalVector d = coupled_degrees(view.strengths, view.weights);

  CentralityReport report{q, alpha, incoming, {}};
  for (std::size_t i = 0; i < view.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    CentralityRow row;
    row.simplex = view.order[i];
    row.degree = k(r);
    row.weighted_degree = d(r);
    row.combined_degree = combined_degree(row.degree, row.weighted_degree, alpha);
    row.farness = farness(dist, components, r);
    row.closeness = closeness(dist, components, r);
    row.harmonic = harmonic(dist, r);
    row.component = components.id[i];
    report.rows.push_back(std::move(row));
  }
  return report;
}

void sort_rows(CentralityReport& report, CentralityColumn column, bool descending) {
  auto key = [column](const CentralityRow& r) -> double {
    switch (column) {
      case CentralityColumn::Degree: return static_cast<double>(r.degree);
      case CentralityColumn::WeightedDegree: return to_double(r.weighted_degree);
      case CentralityColumn::CombinedDegree: return r.combined_degree;
      case CentralityColumn::Closeness: return r.closeness;
      case CentralityColumn::Harmonic: return r.harmonic;
      case CentralityColumn::Farness: return r.farness;
      case CentralityColumn::Simplex: break;
    }
    return 0.0;
  };
  std::stable_sort(report.rows.begin(), report.rows.end(), [&](const CentralityRow& a, const CentralityRow& b) {
    if (column == CentralityColumn::WeightedDegree && a.weighted_degree != b.weighted_degree) {
      return descending ? a.weighted_degree > b.weighted_degree : a.weighted_degree < b.weighted_degree;
    }
    const double ka = key(a);
    const double kb = key(b);
    if (column != CentralityColumn::WeightedDegree && ka != kb) return descending ? ka > kb : ka < kb;
    return a.simplex < b.simplex;
  });
}

}  // namespace metaplex
