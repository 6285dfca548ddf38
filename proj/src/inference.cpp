#include "metaplex/inference.hpp"

#include "metaplex/error.hpp"

namespace metaplex {

void InferenceConfig::validate() const {
  if (max_dim < 2) {
    throw MetaplexError(ErrorCode::InvalidConfig, "max_dim must be at least 2, got " + std::to_string(max_dim));
  }
  if (threshold_multiplier && *threshold_multiplier <= 0) {
    throw MetaplexError(ErrorCode::InvalidConfig,
                        "threshold multiplier must be positive, got " + to_string(*threshold_multiplier));
  }
}

std::vector<Simplex> enumerate_candidates(const SimplicialComplex& complex, int q) {
  if (q < 1) {
    throw MetaplexError(ErrorCode::DimensionMismatch, "candidates start at dimension 1");
  }
  std::vector<Simplex> out;
  const auto n = static_cast<VertexId>(complex.vertex_count());
  // Each candidate is generated once, from the face that drops its last vertex.
  for (const Simplex& base : complex.level(q - 1)) {
    for (VertexId v = base.back() + 1; v < n; ++v) {
      Simplex sigma = base.with(v);
      if (complex.contains(sigma)) continue;
      bool feasible = true;
      for (std::size_t i = 0; i + 1 < sigma.size() && feasible; ++i) {
        feasible = complex.contains(sigma.without(i));
      }
      if (feasible) out.push_back(std::move(sigma));
    }
  }
  return out;
}

Rational aggregated_boundary_weight(const Simplex& sigma, const ConcentrationAssignment& assignment) {
  Rational total = 0;
  for (const Simplex& tau : boundary(sigma)) total += assignment.at(tau);
  return total;
}

Rational reference_level(const ConcentrationAssignment& assignment, const SimplicialComplex& complex, int q) {
  const auto lower = complex.level(q - 1);
  if (lower.empty()) {
    throw MetaplexError(ErrorCode::EmptyLevel, "no simplices of dimension " + std::to_string(q - 1));
  }
  Rational total = 0;
  for (const Simplex& tau : lower) total += assignment.at(tau);
  return total / static_cast<long>(lower.size());
}

Rational threshold(const ConcentrationAssignment& assignment, const SimplicialComplex& complex, int q,
                   const InferenceConfig& config) {
  return config.multiplier_for(q) * reference_level(assignment, complex, q);
}

InferenceLevel admit(std::span<const Simplex> candidates, const ConcentrationAssignment& assignment,
                     const SimplicialComplex& complex, int q, const InferenceConfig& config) {
  InferenceLevel level;
  level.q = q;
  level.reference_mean = reference_level(assignment, complex, q);
  level.multiplier = config.multiplier_for(q);
  level.threshold = level.multiplier * level.reference_mean;
  for (const Simplex& sigma : candidates) {
    Rational w = aggregated_boundary_weight(sigma, assignment);
    const bool accepted = config.strict ? w > level.threshold : w >= level.threshold;
    (accepted ? level.admitted : level.rejected).push_back(sigma);
    level.candidates.push_back({sigma, std::move(w)});
  }
  return level;
}

InferredMetaplex infer_metaplex(const Graph& graph, const ConcentrationMap& concentrations,
                                const InferenceConfig& config) {
  config.validate();
  InferredMetaplex result{one_skeleton_complex(graph), {}, {}};
  auto& complex = result.complex;
  result.assignment = extend_full(complex, concentrations, config.scheme);

  for (int q = 2; q <= config.max_dim; ++q) {
    if (complex.level_size(q - 1) == 0) break;
    const auto candidates = enumerate_candidates(complex, q);
    InferenceLevel level = admit(candidates, result.assignment, complex, q, config);
    const bool grew = !level.admitted.empty();
    if (grew) {
      complex.insert_all(level.admitted);
      extend_one_level(complex, result.assignment, config.scheme, q);
    }
    result.trace.levels.push_back(std::move(level));
    if (!grew) break;
  }
  return result;
}

}  // namespace metaplex
