#pragma once

#include "metaplex/complex.hpp"
#include "metaplex/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metaplex {

/// A vertex's internal finite weighted set. Labels are opaque.
struct InternalStructure {
  std::vector<std::pair<std::string, Rational>> elements;
};

/// Total measure of the internal set. Throws NegativeWeight for a negative
/// element and AllZeroWeights when nothing is strictly positive.
Rational concentration_from_internal(const InternalStructure& structure);

/// Vertex concentrations, all strictly positive.
using ConcentrationMap = std::map<VertexId, Rational>;

/// A fractional weight contribution map, evaluated on a concrete complex.
///
/// Uniform splits the weight of a (q-1)-simplex evenly over its q-cofaces.
/// ExplicitTable reads fractions from a (face, coface) table; missing pairs
/// read as zero. The same scheme object serves every level.
class ContributionScheme {
 public:
  enum class Kind { Uniform, ExplicitTable };
  using Table = std::map<std::pair<Simplex, Simplex>, Rational>;

  static ContributionScheme uniform() { return ContributionScheme(Kind::Uniform, {}); }
  static ContributionScheme explicit_table(Table table) {
    return ContributionScheme(Kind::ExplicitTable, std::move(table));
  }

  Kind kind() const noexcept { return kind_; }
  const Table& table() const noexcept { return table_; }
  std::string descriptor() const { return kind_ == Kind::Uniform ? "uniform" : "table"; }

  /// a_q(tau, sigma) where q = sigma.dim().
  Rational fraction(const SimplicialComplex& complex, const Simplex& tau, const Simplex& sigma) const;

 private:
  ContributionScheme(Kind kind, Table table) : kind_(kind), table_(std::move(table)) {}

  Kind kind_;
  Table table_;
};

/// The level-q fraction map as an n_{q-1} x n_q matrix over the canonical
/// level orders. Throws DimensionMismatch for q < 1.
SparseRationalMatrix fraction_matrix(const ContributionScheme& scheme,
                                     const SimplicialComplex& complex, int q);

/// Uniform 1/k split at level q.
SparseRationalMatrix uniform_fractions(const SimplicialComplex& complex, int q);

struct AxiomViolation {
  int axiom;  // 1, 2 or 3
  Simplex tau;
  std::optional<Simplex> sigma;
  Rational value;
};

struct SchemeReport {
  int q = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the three contribution-map axioms at level q with exact arithmetic.
SchemeReport validate_scheme(const ContributionScheme& scheme, const SimplicialComplex& complex, int q);

/// Exact weights a(sigma) for the simplices of a complex.
class ConcentrationAssignment {
 public:
  ConcentrationAssignment() = default;
  explicit ConcentrationAssignment(std::string scheme) : scheme_(std::move(scheme)) {}

  /// Throws WeightNotAssigned.
  const Rational& at(const Simplex& sigma) const;
  bool contains(const Simplex& sigma) const { return weights_.contains(sigma); }
  /// Throws NonPositiveConcentration for a weight <= 0.
  void set(const Simplex& sigma, Rational weight);

  const std::map<Simplex, Rational>& weights() const noexcept { return weights_; }
  const std::string& scheme() const noexcept { return scheme_; }
  void set_scheme(std::string scheme) { scheme_ = std::move(scheme); }

  /// Weights of level q in canonical order. Throws WeightNotAssigned.
  RationalVector level_vector(const SimplicialComplex& complex, int q) const;

  friend bool operator==(const ConcentrationAssignment&, const ConcentrationAssignment&) = default;

 private:
  std::map<Simplex, Rational> weights_;
  std::string scheme_ = "uniform";
};

/// n_tau^sigma = a_q(tau, sigma) * a(tau). Throws WeightNotAssigned.
Rational contribution_number(const ContributionScheme& scheme, const SimplicialComplex& complex,
                             const Simplex& tau, const Simplex& sigma,
                             const ConcentrationAssignment& assignment);

/// Weights on S_q from weights on S_{q-1} (canonical order). Throws
/// SchemeInvalid when the scheme breaks an axiom at q, DimensionMismatch when
/// `lower` does not match S_{q-1} and WeightNotAssigned for a non-positive entry.
RationalVector extend_one_level(const SimplicialComplex& complex, const RationalVector& lower,
                                const ContributionScheme& scheme, int q);

/// Writes level-q weights into `assignment`, reading level q-1 from it.
void extend_one_level(const SimplicialComplex& complex, ConcentrationAssignment& assignment,
                      const ContributionScheme& scheme, int q);

/// Vertex weights from `concentrations`, then level by level to dim(complex).
/// Throws MissingConcentration (listing the vertices) or
/// NonPositiveConcentration; propagates extend_one_level errors.
ConcentrationAssignment extend_full(const SimplicialComplex& complex,
                                    const ConcentrationMap& concentrations,
                                    const ContributionScheme& scheme);

/// (a_{q+1} o a_q) as an n_{q-1} x n_{q+1} matrix. Throws SchemeInvalid.
SparseRationalMatrix compose_schemes(const ContributionScheme& lower_scheme,
                                     const ContributionScheme& upper_scheme,
                                     const SimplicialComplex& complex, int q);

/// Both sides of an exact weight identity.
struct ConservationReport {
  std::string check;
  int q = 0;
  Rational lhs;
  Rational rhs;
  bool ok() const { return lhs == rhs; }
  Rational discrepancy() const { return lhs - rhs; }
};

/// sum over S_q == sum over non-facet (q-1)-simplices.
ConservationReport validate_level_conservation(const ConcentrationAssignment& assignment,
                                               const SimplicialComplex& complex, int q);
/// sum over S_q + sum over (q-1)-facets == sum over S_{q-1}.
ConservationReport validate_facet_decomposition(const ConcentrationAssignment& assignment,
                                                const SimplicialComplex& complex, int q);
/// sum over S_q + sum over facets of dimension < q == sum over S_0.
ConservationReport validate_cumulative_decomposition(const ConcentrationAssignment& assignment,
                                                     const SimplicialComplex& complex, int q);
/// sum over all facets == sum over S_0.
ConservationReport validate_global_conservation(const ConcentrationAssignment& assignment,
                                                const SimplicialComplex& complex);

/// Every identity above at every level 1..dim, then the global one.
std::vector<ConservationReport> validate_all_conservation(const ConcentrationAssignment& assignment,
                                                          const SimplicialComplex& complex);

}  // namespace metaplex
