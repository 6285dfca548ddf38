#include "metaplex/testkit.hpp"

#include "metaplex/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace metaplex::testkit {

namespace {

std::vector<Simplex> all_simplices(const SimplicialComplex& complex) {
  std::vector<Simplex> out;
  for (int q = 0; q <= complex.dim(); ++q) {
    const auto l = complex.level(q);
    out.insert(out.end(), l.begin(), l.end());
  }
  if (out.size() > max_oracle_simplices) {
    throw MetaplexError(ErrorCode::InstanceTooLarge, std::to_string(out.size()) + " simplices");
  }
  return out;
}

bool subset(const Simplex& small, const Simplex& big) {
  for (VertexId v : small.vertices()) {
    if (std::find(big.vertices().begin(), big.vertices().end(), v) == big.vertices().end()) return false;
  }
  return true;
}

}  // namespace

std::vector<Simplex> oracle_facets(const SimplicialComplex& complex) {
  const auto simplices = all_simplices(complex);
  std::vector<Simplex> out;
  for (const Simplex& a : simplices) {
    bool maximal = true;
    for (const Simplex& b : simplices) {
      if (a.size() < b.size() && subset(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConcentrationAssignment oracle_extend(const SimplicialComplex& complex, const ConcentrationMap& concentrations,
                                      const ContributionScheme& scheme) {
  const auto simplices = all_simplices(complex);

  auto fraction = [&](const Simplex& tau, const Simplex& sigma) -> Rational {
    if (scheme.kind() == ContributionScheme::Kind::ExplicitTable) {
      auto it = scheme.table().find({tau, sigma});
      return it == scheme.table().end() ? Rational(0) : it->second;
    }
    long cofaces = 0;
    for (const Simplex& rho : simplices) {
      if (rho.size() == tau.size() + 1 && subset(tau, rho)) ++cofaces;
    }
    return Rational(1, cofaces);
  };

  std::function<Rational(const Simplex&)> weight = [&](const Simplex& sigma) -> Rational {
    if (sigma.size() == 1) {
      auto it = concentrations.find(sigma[0]);
      if (it == concentrations.end()) {
        throw MetaplexError(ErrorCode::MissingConcentration, "vertex " + std::to_string(sigma[0]));
      }
      return it->second;
    }
    Rational total = 0;
    for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
      std::vector<VertexId> face;
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        if (k != drop) face.push_back(sigma[k]);
      }
      const Simplex tau = Simplex::from_sorted(std::move(face));
      total += fraction(tau, sigma) * weight(tau);
    }
    return total;
  };

  ConcentrationAssignment out(scheme.descriptor());
  for (const Simplex& s : simplices) out.set(s, weight(s));
  return out;
}

namespace {

void check_level_size(const AdjacencyView& view) {
  if (view.size() > max_oracle_level) {
    throw MetaplexError(ErrorCode::InstanceTooLarge, std::to_string(view.size()) + " simplices at level");
  }
}

// Depth-first enumeration of simple paths; `cost` prices one directed step.
template <typename Cost, typename Value>
std::optional<Value> best_simple_path(const AdjacencyView& view, std::size_t from, std::size_t to, Cost cost) {
  check_level_size(view);
  if (from == to) return Value{0};
  std::optional<Value> best;
  std::vector<char> visited(view.size(), 0);
  std::function<void(std::size_t, Value)> walk = [&](std::size_t u, Value acc) {
    if (u == to) {
      if (!best || acc < *best) best = acc;
      return;
    }
    visited[u] = 1;
    for (std::size_t v = 0; v < view.size(); ++v) {
      if (!visited[v] && view.binary(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) == 1) {
        walk(v, acc + cost(u, v));
      }
    }
    visited[u] = 0;
  };
  walk(from, Value{0});
  return best;
}

}  // namespace

std::optional<double> oracle_shortest(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                                      std::size_t i, std::size_t j, double alpha) {
  return best_simple_path<std::function<double(std::size_t, std::size_t)>, double>(
      view, i, j, [&](std::size_t u, std::size_t v) {
        if (alpha == 0.0) return 1.0;
        const Rational& s = view.strengths(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
        const Rational& a = assignment.at(view.order[v]);
        return std::pow(1.0 / (s * a).convert_to<double>(), alpha);
      });
}

std::optional<std::size_t> oracle_hops(const AdjacencyView& view, std::size_t i, std::size_t j) {
  return best_simple_path<std::function<std::size_t(std::size_t, std::size_t)>, std::size_t>(
      view, i, j, [](std::size_t, std::size_t) { return std::size_t{1}; });
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::int64_t floor_of(const Rational& r) {
  auto n = numerator(r);
  auto d = denominator(r);
  auto f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f.convert_to<std::int64_t>();
}

std::int64_t ceil_of(const Rational& r) {
  const std::int64_t f = floor_of(r);
  return Rational(f) == r ? f : f + 1;
}

}  // namespace

RandomCM generate_random_cm(const RandomCMSpec& spec) {
  if (spec.vertex_count > 10) {
    throw MetaplexError(ErrorCode::InstanceTooLarge, "random instances are limited to 10 vertices");
  }
  if (spec.concentration_max < spec.concentration_min || spec.concentration_max <= 0 ||
      spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
    throw MetaplexError(ErrorCode::InvalidConfig, "bad random instance parameters");
  }
  Rng rng(spec.seed);
  RandomCM out{Graph(spec.vertex_count), {}};
  for (VertexId u = 0; u < spec.vertex_count; ++u) {
    for (VertexId v = u + 1; v < spec.vertex_count; ++v) {
      if (rng.uniform() < spec.edge_probability) out.graph.add_edge(u, v);
    }
  }
  for (VertexId v = 0; v < spec.vertex_count; ++v) {
    bool drawn = false;
    for (int attempt = 0; attempt < 256 && !drawn; ++attempt) {
      const std::int64_t den = rng.between(1, 64);
      const std::int64_t lo = std::max<std::int64_t>(ceil_of(spec.concentration_min * den), 1);
      const std::int64_t hi = floor_of(spec.concentration_max * den);
      if (lo > hi) continue;
      out.concentrations[v] = Rational(rng.between(lo, hi), den);
      drawn = true;
    }
    if (!drawn) {
      throw MetaplexError(ErrorCode::InvalidConfig, "concentration range holds no p/q with q <= 64");
    }
  }
  return out;
}

}  // namespace metaplex::testkit
