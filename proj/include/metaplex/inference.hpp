#pragma once

#include "metaplex/complex.hpp"
#include "metaplex/concentration.hpp"
#include "metaplex/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace metaplex {

struct InferenceConfig {
  int max_dim = 3;
  ContributionScheme scheme = ContributionScheme::uniform();
  /// Replaces the default factor q+1 in the threshold when set.
  std::optional<Rational> threshold_multiplier;
  /// Admit on W > theta; when false, on W >= theta.
  bool strict = true;

  /// Throws InvalidConfig for max_dim < 2 or a non-positive multiplier.
  void validate() const;
  Rational multiplier_for(int q) const { return threshold_multiplier.value_or(Rational(q + 1)); }
};

struct Candidate {
  Simplex simplex;
  Rational boundary_weight;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// What happened at one dimension of the inference loop.
struct InferenceLevel {
  int q = 0;
  std::vector<Candidate> candidates;
  Rational reference_mean;
  Rational multiplier;
  Rational threshold;
  std::vector<Simplex> admitted;
  std::vector<Simplex> rejected;

  friend bool operator==(const InferenceLevel&, const InferenceLevel&) = default;
};

struct InferenceTrace {
  std::vector<InferenceLevel> levels;
  friend bool operator==(const InferenceTrace&, const InferenceTrace&) = default;
};

/// Vertex sets of size q+1, not yet in the complex, whose every (q-1)-face is
/// in S_{q-1}; lexicographic order. Throws DimensionMismatch for q < 1.
std::vector<Simplex> enumerate_candidates(const SimplicialComplex& complex, int q);

/// Sum of a(tau) over the boundary of `sigma`. Throws WeightNotAssigned.
Rational aggregated_boundary_weight(const Simplex& sigma, const ConcentrationAssignment& assignment);

/// Mean weight over S_{q-1}. Throws EmptyLevel.
Rational reference_level(const ConcentrationAssignment& assignment, const SimplicialComplex& complex, int q);

/// multiplier * mean weight over S_{q-1}. Throws EmptyLevel.
Rational threshold(const ConcentrationAssignment& assignment, const SimplicialComplex& complex, int q,
                   const InferenceConfig& config);

/// Applies the inclusion rule to every candidate; the returned level lists
/// admitted and rejected simplices in candidate order.
InferenceLevel admit(std::span<const Simplex> candidates, const ConcentrationAssignment& assignment,
                     const SimplicialComplex& complex, int q, const InferenceConfig& config);

struct InferredMetaplex {
  SimplicialComplex complex;
  ConcentrationAssignment assignment;
  InferenceTrace trace;
};

/// Builds the complex from the graph's 1-skeleton, alternating admission at
/// dimension q with extension of the weights onto the admitted simplices.
/// Stops when no candidate exists, nothing is admitted, or max_dim is reached.
/// Throws MissingConcentration, InvalidConfig, SchemeInvalid.
InferredMetaplex infer_metaplex(const Graph& graph, const ConcentrationMap& concentrations,
                                const InferenceConfig& config);

}  // namespace metaplex
