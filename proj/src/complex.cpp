#include "metaplex/complex.hpp"

#include "metaplex/error.hpp"

#include <algorithm>
#include <iterator>

namespace metaplex {

SimplicialComplex SimplicialComplex::from_simplices_unchecked(std::size_t vertex_count,
                                                              std::span<const Simplex> simplices) {
  SimplicialComplex complex(vertex_count);
  std::vector<std::set<Simplex>> pending;
  for (const Simplex& s : simplices) {
    complex.check_range(s);
    const auto q = static_cast<std::size_t>(s.dim());
    if (pending.size() <= q) pending.resize(q + 1);
    pending[q].insert(s);
  }
  complex.merge(pending);
  complex.refresh_facets();
  return complex;
}

void SimplicialComplex::check_range(const Simplex& sigma) const {
  if (sigma.size() == 0) {
    throw MetaplexError(ErrorCode::EmptyVertexList, "cannot insert an empty simplex");
  }
  if (sigma.back() >= vertex_count_) {
    throw MetaplexError(ErrorCode::VertexOutOfRange,
                        "vertex " + std::to_string(sigma.back()) + " outside 0.." +
                            std::to_string(vertex_count_));
  }
}

void SimplicialComplex::insert(const Simplex& sigma) { insert_all(std::span(&sigma, 1)); }

void SimplicialComplex::insert_all(std::span<const Simplex> simplices) {
  for (const Simplex& s : simplices) check_range(s);
  std::vector<std::set<Simplex>> pending;
  for (const Simplex& s : simplices) {
    if (contains(s)) continue;
    const std::size_t n = s.size();
    if (pending.size() < n) pending.resize(n);
    // Every non-empty subset, indexed by bitmask.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) face.push_back(s[i]);
      }
      const std::size_t q = face.size() - 1;
      pending[q].insert(Simplex::from_sorted(std::move(face)));
    }
  }
  merge(pending);
  refresh_facets();
}

void SimplicialComplex::merge(std::vector<std::set<Simplex>>& pending) {
  if (levels_.size() < pending.size()) levels_.resize(pending.size());
  for (std::size_t q = 0; q < pending.size(); ++q) {
    if (pending[q].empty()) continue;
    std::vector<Simplex> merged;
    merged.reserve(levels_[q].size() + pending[q].size());
    std::set_union(levels_[q].begin(), levels_[q].end(), pending[q].begin(), pending[q].end(),
                   std::back_inserter(merged));
    levels_[q] = std::move(merged);
  }
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
}

void SimplicialComplex::refresh_facets() {
  std::vector<std::vector<char>> covered(levels_.size());
  for (std::size_t q = 0; q < levels_.size(); ++q) covered[q].assign(levels_[q].size(), 0);
  for (std::size_t q = 1; q < levels_.size(); ++q) {
    for (const Simplex& s : levels_[q]) {
      for (const Simplex& face : boundary(s)) {
        const auto& lower = levels_[q - 1];
        auto it = std::lower_bound(lower.begin(), lower.end(), face);
        if (it != lower.end() && *it == face) covered[q - 1][it - lower.begin()] = 1;
      }
    }
  }
  facets_.clear();
  for (std::size_t q = 0; q < levels_.size(); ++q) {
    for (std::size_t i = 0; i < levels_[q].size(); ++i) {
      if (!covered[q][i]) facets_.push_back(levels_[q][i]);
    }
  }
  std::sort(facets_.begin(), facets_.end());
}

std::size_t SimplicialComplex::size() const noexcept {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

std::span<const Simplex> SimplicialComplex::level(int q) const {
  if (q < 0 || q >= static_cast<int>(levels_.size())) return {};
  return levels_[static_cast<std::size_t>(q)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& sigma) const {
  const auto l = level(sigma.dim());
  auto it = std::lower_bound(l.begin(), l.end(), sigma);
  if (it == l.end() || *it != sigma) return std::nullopt;
  return static_cast<std::size_t>(it - l.begin());
}

bool SimplicialComplex::is_facet(const Simplex& sigma) const {
  return std::binary_search(facets_.begin(), facets_.end(), sigma);
}

SimplicialComplex insert_with_closure(SimplicialComplex complex, const Simplex& sigma) {
  complex.insert(sigma);
  return complex;
}

std::vector<Simplex> cofaces(const SimplicialComplex& complex, const Simplex& sigma) {
  if (!complex.contains(sigma)) {
    throw MetaplexError(ErrorCode::SimplexNotInComplex, label(sigma));
  }
  std::vector<Simplex> out;
  for (const Simplex& tau : complex.level(sigma.dim() + 1)) {
    if (sigma.is_face_of(tau)) out.push_back(tau);
  }
  return out;
}

std::size_t upper_degree(const SimplicialComplex& complex, const Simplex& sigma) {
  return cofaces(complex, sigma).size();
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int d) {
  std::vector<Simplex> kept;
  for (int q = 0; q <= std::min(d, complex.dim()); ++q) {
    const auto l = complex.level(q);
    kept.insert(kept.end(), l.begin(), l.end());
  }
  return SimplicialComplex::from_simplices_unchecked(complex.vertex_count(), kept);
}

ClosureReport validate_closure(const SimplicialComplex& complex) {
  ClosureReport report;
  for (int q = 1; q <= complex.dim(); ++q) {
    for (const Simplex& s : complex.level(q)) {
      for (Simplex& face : boundary(s)) {
        if (!complex.contains(face)) report.violations.push_back({s, std::move(face)});
      }
    }
  }
  return report;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) {
    throw MetaplexError(ErrorCode::DuplicateVertex, "loop at vertex " + std::to_string(u));
  }
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw MetaplexError(ErrorCode::VertexOutOfRange,
                        "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  edges_.insert({std::min(u, v), std::max(u, v)});
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return edges_.contains({std::min(u, v), std::max(u, v)});
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<VertexId>& clique, std::set<VertexId> candidates,
                   std::set<VertexId> excluded, std::vector<Simplex>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) out.push_back(make_simplex(clique));
    return;
  }
  // Pivot on the vertex with most neighbours among the candidates.
  VertexId pivot = *candidates.begin();
  std::size_t best = 0;
  for (const auto* pool : {&candidates, &excluded}) {
    for (VertexId u : *pool) {
      std::size_t hits = 0;
      for (VertexId w : g.neighbors(u)) hits += candidates.contains(w);
      if (hits >= best) {
        best = hits;
        pivot = u;
      }
    }
  }
  std::vector<VertexId> branch;
  for (VertexId v : candidates) {
    if (!g.neighbors(pivot).contains(v)) branch.push_back(v);
  }
  for (VertexId v : branch) {
    std::set<VertexId> next_candidates;
    std::set<VertexId> next_excluded;
    for (VertexId w : g.neighbors(v)) {
      if (candidates.contains(w)) next_candidates.insert(w);
      if (excluded.contains(w)) next_excluded.insert(w);
    }
    clique.push_back(v);
    bron_kerbosch(g, clique, std::move(next_candidates), std::move(next_excluded), out);
    clique.pop_back();
    candidates.erase(v);
    excluded.insert(v);
  }
}

void k_subsets(const Simplex& s, std::size_t k, std::size_t start, std::vector<VertexId>& acc,
               std::vector<Simplex>& out) {
  if (acc.size() == k) {
    out.push_back(Simplex::from_sorted(acc));
    return;
  }
  for (std::size_t i = start; i + (k - acc.size()) <= s.size(); ++i) {
    acc.push_back(s[i]);
    k_subsets(s, k, i + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Simplex> maximal_cliques(const Graph& graph) {
  std::vector<Simplex> out;
  std::vector<VertexId> clique;
  std::set<VertexId> all;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) all.insert(v);
  bron_kerbosch(graph, clique, std::move(all), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex clique_complex(const Graph& graph, int max_dim) {
  if (max_dim < 1) {
    throw MetaplexError(ErrorCode::InvalidConfig, "clique complex needs max_dim >= 1");
  }
  const auto cap = static_cast<std::size_t>(max_dim) + 1;
  std::vector<Simplex> generators;
  for (const Simplex& c : maximal_cliques(graph)) {
    if (c.size() <= cap) {
      generators.push_back(c);
    } else {
      std::vector<VertexId> acc;
      k_subsets(c, cap, 0, acc, generators);
    }
  }
  SimplicialComplex complex(graph.vertex_count());
  complex.insert_all(generators);
  return complex;
}

SimplicialComplex one_skeleton_complex(const Graph& graph) {
  std::vector<Simplex> simplices;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) simplices.push_back(Simplex::from_sorted({v}));
  for (const auto& [u, v] : graph.edges()) simplices.push_back(Simplex::from_sorted({u, v}));
  SimplicialComplex complex(graph.vertex_count());
  complex.insert_all(simplices);
  return complex;
}

}  // namespace metaplex
