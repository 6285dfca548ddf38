#pragma once

// Brute-force references and seeded instance generators. Nothing here calls
// into the algorithms it is meant to check; only the domain types are shared.

#include "metaplex/centrality.hpp"
#include "metaplex/complex.hpp"
#include "metaplex/concentration.hpp"
#include "metaplex/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace metaplex::testkit {

inline constexpr std::size_t max_oracle_simplices = 1024;
inline constexpr std::size_t max_oracle_level = 12;

/// Pairwise inclusion scan. Throws InstanceTooLarge above 1024 simplices.
std::vector<Simplex> oracle_facets(const SimplicialComplex& complex);

/// Direct recursive evaluation of every weight, with coface counts and
/// fractions recomputed from scratch at each step.
ConcentrationAssignment oracle_extend(const SimplicialComplex& complex, const ConcentrationMap& concentrations,
                                      const ContributionScheme& scheme);

/// Minimum summed step cost over all simple paths from i to j, or nullopt
/// when j is unreachable. Throws InstanceTooLarge when the level has more
/// than 12 simplices.
std::optional<double> oracle_shortest(const AdjacencyView& view, const ConcentrationAssignment& assignment,
                                      std::size_t i, std::size_t j, double alpha);

/// Minimum number of steps over simple paths, same limits as above.
std::optional<std::size_t> oracle_hops(const AdjacencyView& view, std::size_t i, std::size_t j);

struct RandomCMSpec {
  std::size_t vertex_count = 6;
  double edge_probability = 0.5;
  Rational concentration_min = 1;
  Rational concentration_max = 10;
  std::uint64_t seed = 0;
  int max_dim = 3;
};

struct RandomCM {
  Graph graph;
  ConcentrationMap concentrations;
};

/// Seeded instance: independent edges, concentrations p/q with q <= 64 drawn
/// from the closed interval (strictly positive). Throws InstanceTooLarge for
/// more than 10 vertices and InvalidConfig for an empty or non-positive range.
RandomCM generate_random_cm(const RandomCMSpec& spec);

/// splitmix-style generator with a portable output sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

}  // namespace metaplex::testkit
