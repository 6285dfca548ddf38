#include "metaplex/concentration.hpp"

#include "metaplex/error.hpp"

#include <numeric>

namespace metaplex {

Rational concentration_from_internal(const InternalStructure& structure) {
  Rational total = 0;
  for (const auto& [element, weight] : structure.elements) {
    if (weight < 0) {
      throw MetaplexError(ErrorCode::NegativeWeight, "element '" + element + "' has weight " + to_string(weight));
    }
    total += weight;
  }
  if (total == 0) {
    throw MetaplexError(ErrorCode::AllZeroWeights, "internal structure has no positive weight");
  }
  return total;
}

Rational ContributionScheme::fraction(const SimplicialComplex& complex, const Simplex& tau,
                                      const Simplex& sigma) const {
  if (kind_ == Kind::ExplicitTable) {
    auto it = table_.find({tau, sigma});
    return it == table_.end() ? Rational(0) : it->second;
  }
  if (sigma.dim() != tau.dim() + 1 || !tau.is_face_of(sigma) || !complex.contains(sigma) ||
      !complex.contains(tau)) {
    return 0;
  }
  return Rational(1, static_cast<long>(upper_degree(complex, tau)));
}

namespace {

using Triplet = Eigen::Triplet<Rational>;

void check_level(int q) {
  if (q < 1) {
    throw MetaplexError(ErrorCode::DimensionMismatch,
                        "fraction maps start at level 1, got " + std::to_string(q));
  }
}

// Row index (in S_{q-1}) of every boundary face of every column simplex.
std::vector<std::vector<std::size_t>> boundary_rows(const SimplicialComplex& complex, int q) {
  const auto upper = complex.level(q);
  std::vector<std::vector<std::size_t>> rows(upper.size());
  for (std::size_t j = 0; j < upper.size(); ++j) {
    for (const Simplex& face : boundary(upper[j])) {
      if (auto i = complex.index_of(face)) rows[j].push_back(*i);
    }
  }
  return rows;
}

}  // namespace

SparseRationalMatrix uniform_fractions(const SimplicialComplex& complex, int q) {
  check_level(q);
  const auto rows = boundary_rows(complex, q);
  std::vector<long> degree(complex.level_size(q - 1), 0);
  for (const auto& r : rows) {
    for (std::size_t i : r) ++degree[i];
  }
  std::vector<Triplet> entries;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i : rows[j]) {
      entries.emplace_back(static_cast<int>(i), static_cast<int>(j), Rational(1, degree[i]));
    }
  }
  SparseRationalMatrix m(static_cast<Eigen::Index>(complex.level_size(q - 1)),
                         static_cast<Eigen::Index>(complex.level_size(q)));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseRationalMatrix fraction_matrix(const ContributionScheme& scheme,
                                     const SimplicialComplex& complex, int q) {
  check_level(q);
  if (scheme.kind() == ContributionScheme::Kind::Uniform) return uniform_fractions(complex, q);

  const auto lower = complex.level(q - 1);
  const auto upper = complex.level(q);
  const auto rows = boundary_rows(complex, q);
  std::vector<Triplet> entries;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i : rows[j]) {
      Rational f = scheme.fraction(complex, lower[i], upper[j]);
      if (f != 0) entries.emplace_back(static_cast<int>(i), static_cast<int>(j), std::move(f));
    }
  }
  SparseRationalMatrix m(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SchemeReport validate_scheme(const ContributionScheme& scheme, const SimplicialComplex& complex, int q) {
  check_level(q);
  SchemeReport report;
  report.q = q;

  // Axiom (i): tabulated mass outside the incidence relation.
  for (const auto& [pair, value] : scheme.table()) {
    const auto& [tau, sigma] = pair;
    if (sigma.dim() != q) continue;
    const bool incident = tau.dim() == q - 1 && tau.is_face_of(sigma);
    if (!incident && value != 0) report.violations.push_back({1, tau, sigma, value});
  }

  // Axioms (ii) and (iii) over the actual incidences of the complex.
  for (const Simplex& tau : complex.level(q - 1)) {
    const auto up = cofaces(complex, tau);
    Rational total = 0;
    for (const Simplex& sigma : up) {
      Rational f = scheme.fraction(complex, tau, sigma);
      if (f <= 0 || f > 1) report.violations.push_back({2, tau, sigma, f});
      total += f;
    }
    if (!up.empty() && total != 1) report.violations.push_back({3, tau, std::nullopt, total});
  }
  return report;
}

const Rational& ConcentrationAssignment::at(const Simplex& sigma) const {
  auto it = weights_.find(sigma);
  if (it == weights_.end()) throw MetaplexError(ErrorCode::WeightNotAssigned, label(sigma));
  return it->second;
}

void ConcentrationAssignment::set(const Simplex& sigma, Rational weight) {
  if (weight <= 0) {
    throw MetaplexError(ErrorCode::NonPositiveConcentration,
                        label(sigma) + " would get weight " + to_string(weight));
  }
  weights_[sigma] = std::move(weight);
}

RationalVector ConcentrationAssignment::level_vector(const SimplicialComplex& complex, int q) const {
  const auto l = complex.level(q);
  RationalVector v(static_cast<Eigen::Index>(l.size()));
  for (std::size_t i = 0; i < l.size(); ++i) v[static_cast<Eigen::Index>(i)] = at(l[i]);
  return v;
}

Rational contribution_number(const ContributionScheme& scheme, const SimplicialComplex& complex,
                             const Simplex& tau, const Simplex& sigma,
                             const ConcentrationAssignment& assignment) {
  return scheme.fraction(complex, tau, sigma) * assignment.at(tau);
}

RationalVector extend_one_level(const SimplicialComplex& complex, const RationalVector& lower,
                                const ContributionScheme& scheme, int q) {
  check_level(q);
  if (lower.size() != static_cast<Eigen::Index>(complex.level_size(q - 1))) {
    throw MetaplexError(ErrorCode::DimensionMismatch,
                        "level " + std::to_string(q - 1) + " has " +
                            std::to_string(complex.level_size(q - 1)) + " simplices but " +
                            std::to_string(lower.size()) + " weights");
  }
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (lower[i] <= 0) {
      throw MetaplexError(ErrorCode::WeightNotAssigned,
                          label(complex.level(q - 1)[static_cast<std::size_t>(i)]) +
                              " has non-positive weight");
    }
  }
  if (const auto report = validate_scheme(scheme, complex, q); !report.ok()) {
    const auto& v = report.violations.front();
    throw MetaplexError(ErrorCode::SchemeInvalid, "axiom (" + std::to_string(v.axiom) + ") fails at " +
                                                      label(v.tau) + " on level " + std::to_string(q));
  }
  const SparseRationalMatrix fractions = fraction_matrix(scheme, complex, q);
  return fractions.transpose() * lower;
}

void extend_one_level(const SimplicialComplex& complex, ConcentrationAssignment& assignment,
                      const ContributionScheme& scheme, int q) {
  const RationalVector upper = extend_one_level(complex, assignment.level_vector(complex, q - 1), scheme, q);
  const auto l = complex.level(q);
  for (std::size_t j = 0; j < l.size(); ++j) assignment.set(l[j], upper[static_cast<Eigen::Index>(j)]);
}

ConcentrationAssignment extend_full(const SimplicialComplex& complex,
                                    const ConcentrationMap& concentrations,
                                    const ContributionScheme& scheme) {
  ConcentrationAssignment assignment(scheme.descriptor());
  std::string missing;
  for (const Simplex& v : complex.level(0)) {
    auto it = concentrations.find(v.front());
    if (it == concentrations.end()) {
      missing += (missing.empty() ? "" : ", ") + std::to_string(v.front());
      continue;
    }
    if (it->second <= 0) {
      throw MetaplexError(ErrorCode::NonPositiveConcentration,
                          "vertex " + std::to_string(v.front()) + " has concentration " + to_string(it->second));
    }
    assignment.set(v, it->second);
  }
  if (!missing.empty()) {
    throw MetaplexError(ErrorCode::MissingConcentration, "no concentration for vertices [" + missing + "]");
  }
  for (int q = 1; q <= complex.dim(); ++q) extend_one_level(complex, assignment, scheme, q);
  return assignment;
}

SparseRationalMatrix compose_schemes(const ContributionScheme& lower_scheme,
                                     const ContributionScheme& upper_scheme,
                                     const SimplicialComplex& complex, int q) {
  for (const auto& [scheme, level] : {std::pair{&lower_scheme, q}, std::pair{&upper_scheme, q + 1}}) {
    if (const auto report = validate_scheme(*scheme, complex, level); !report.ok()) {
      throw MetaplexError(ErrorCode::SchemeInvalid, "scheme violates an axiom at level " + std::to_string(level));
    }
  }
  const SparseRationalMatrix lower = fraction_matrix(lower_scheme, complex, q);
  const SparseRationalMatrix upper = fraction_matrix(upper_scheme, complex, q + 1);
  return SparseRationalMatrix(lower * upper);
}

namespace {

Rational level_sum(const ConcentrationAssignment& a, const SimplicialComplex& complex, int q) {
  Rational total = 0;
  for (const Simplex& s : complex.level(q)) total += a.at(s);
  return total;
}

Rational facet_sum(const ConcentrationAssignment& a, const SimplicialComplex& complex, int lo, int hi) {
  Rational total = 0;
  for (const Simplex& f : complex.facets()) {
    if (f.dim() >= lo && f.dim() <= hi) total += a.at(f);
  }
  return total;
}

}  // namespace

ConservationReport validate_level_conservation(const ConcentrationAssignment& assignment,
                                               const SimplicialComplex& complex, int q) {
  check_level(q);
  Rational non_facets = 0;
  for (const Simplex& s : complex.level(q - 1)) {
    if (!complex.is_facet(s)) non_facets += assignment.at(s);
  }
  return {"level", q, level_sum(assignment, complex, q), non_facets};
}

ConservationReport validate_facet_decomposition(const ConcentrationAssignment& assignment,
                                                const SimplicialComplex& complex, int q) {
  check_level(q);
  return {"facet", q, level_sum(assignment, complex, q) + facet_sum(assignment, complex, q - 1, q - 1),
          level_sum(assignment, complex, q - 1)};
}

ConservationReport validate_cumulative_decomposition(const ConcentrationAssignment& assignment,
                                                     const SimplicialComplex& complex, int q) {
  check_level(q);
  return {"cumulative", q, level_sum(assignment, complex, q) + facet_sum(assignment, complex, 0, q - 1),
          level_sum(assignment, complex, 0)};
}

ConservationReport validate_global_conservation(const ConcentrationAssignment& assignment,
                                                const SimplicialComplex& complex) {
  return {"global", complex.dim(), facet_sum(assignment, complex, 0, complex.dim()),
          level_sum(assignment, complex, 0)};
}

std::vector<ConservationReport> validate_all_conservation(const ConcentrationAssignment& assignment,
                                                          const SimplicialComplex& complex) {
  std::vector<ConservationReport> out;
  for (int q = 1; q <= complex.dim(); ++q) {
    out.push_back(validate_level_conservation(assignment, complex, q));
    out.push_back(validate_facet_decomposition(assignment, complex, q));
    out.push_back(validate_cumulative_decomposition(assignment, complex, q));
  }
  out.push_back(validate_global_conservation(assignment, complex));
  return out;
}

}  // namespace metaplex
