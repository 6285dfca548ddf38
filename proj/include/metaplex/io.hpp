#pragma once

#include "metaplex/centrality.hpp"
#include "metaplex/complex.hpp"
#include "metaplex/concentration.hpp"
#include "metaplex/inference.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace metaplex::io {

/// Maps external vertex labels to dense ids. Ids follow numeric order when
/// every label is a non-negative integer and string order otherwise, so the
/// mapping depends only on the label set.
class VertexLabels {
 public:
  VertexLabels() = default;
  explicit VertexLabels(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(VertexId id) const { return labels_.at(id); }
  std::optional<VertexId> find(const std::string& label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Vertex labels joined by '-', e.g. "0-1-3".
  std::string label(const Simplex& sigma) const;
  std::vector<std::string> label_list(const Simplex& sigma) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, VertexId> ids_;
};

struct InputPaths {
  std::optional<std::filesystem::path> graph;
  std::optional<std::filesystem::path> complex;
  std::optional<std::filesystem::path> concentrations;
  std::optional<std::filesystem::path> internal;
  std::optional<std::filesystem::path> scheme_table;
};

/// Everything a command needs, validated.
struct InputBundle {
  VertexLabels labels;
  std::optional<Graph> graph;
  std::optional<SimplicialComplex> complex;
  /// Weights read from a metaplex document, when it carried them.
  std::optional<ConcentrationAssignment> weights;
  std::optional<ConcentrationMap> concentrations;
  ContributionScheme scheme = ContributionScheme::uniform();
};

/// Reads and validates the inputs. Throws ParseError (with file, line and
/// column), MissingConcentration (listing the uncovered vertex labels) or
/// SchemeAxiomViolation.
InputBundle load_bundle(const InputPaths& paths);

// Parsers over in-memory text; `source` names the input in diagnostics.
struct EdgeList {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};
EdgeList parse_edge_list(std::string_view text, const std::string& source = "<edges>");
std::map<std::string, Rational> parse_concentrations(std::string_view text, const std::string& source = "<concentrations>");
std::map<std::string, InternalStructure> parse_internal_structures(std::string_view text,
                                                                   const std::string& source = "<internal>");

struct ComplexDocument {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  /// Every simplex with its weight when the document lists them.
  std::vector<std::pair<std::vector<std::string>, std::optional<Rational>>> simplices;
  std::string scheme;
};
ComplexDocument parse_complex_document(std::string_view text, const std::string& source = "<complex>");

struct SchemeEntry {
  std::vector<std::string> tau;
  std::vector<std::string> sigma;
  Rational fraction;
};
std::vector<SchemeEntry> parse_scheme_table(std::string_view text, const std::string& source = "<scheme>");

/// Resolves labels and rejects entries outside the codimension-one incidence
/// or outside (0, 1] with SchemeAxiomViolation.
ContributionScheme build_scheme_table(std::span<const SchemeEntry> entries, const VertexLabels& labels);

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& name);

/// The full complex with every simplex and (when given) its exact weight.
std::string write_metaplex(const VertexLabels& labels, const SimplicialComplex& complex,
                           const ConcentrationAssignment* assignment);
std::string write_trace(const VertexLabels& labels, const InferenceTrace& trace, bool strict, Format format);
std::string write_report(const VertexLabels& labels, const CentralityReport& report, Format format);
/// Comma-separated matrix with simplex labels as row and column headers.
std::string write_matrix_csv(const VertexLabels& labels, const AdjacencyView& view, bool weighted);

/// Loads a metaplex document written by write_metaplex back into memory.
struct LoadedMetaplex {
  VertexLabels labels;
  SimplicialComplex complex;
  std::optional<ConcentrationAssignment> assignment;
};
LoadedMetaplex read_metaplex(std::string_view text, const std::string& source = "<metaplex>");

std::string read_file(const std::filesystem::path& path);

struct CommandOptions {
  std::string command;
  int max_dim = 3;
  double alpha = 1.0;
  int q = 0;
  std::optional<Rational> multiplier;
  bool strict = true;
  bool incoming = false;
  bool weighted = false;
  std::uint64_t seed = 0;
  std::size_t vertices = 8;
  double edge_probability = 0.5;
  std::string sort_by;
  Format format = Format::Text;
  std::optional<std::filesystem::path> out_dir;
};

enum ExitStatus : int { Success = 0, ValidationFailure = 1, InputError = 2 };

/// Runs one subcommand (infer, weights, centrality, matrix, validate, clique,
/// generate). Primary output goes to `out`, diagnostics to `err`; with an
/// output directory the artifacts are written there as files.
int run_command(const InputBundle& bundle, const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace metaplex::io
