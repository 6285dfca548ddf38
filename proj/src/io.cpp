#include "metaplex/io.hpp"

#include "metaplex/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace metaplex::io {

using ordered_json = nlohmann::ordered_json;

namespace {

bool is_index(const std::string& s) {
  return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, std::size_t column, const std::string& what) {
  throw MetaplexError(ErrorCode::ParseError,
                      source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

struct Token {
  std::string text;
  std::size_t column;
};

// Whitespace-separated tokens of one line, with '#' starting a comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(line_no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

ordered_json parse_json(std::string_view text, const std::string& source) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail(source, line, column, "malformed JSON");
  }
}

[[noreturn]] void json_fail(const std::string& source, const std::string& where, const std::string& what) {
  throw MetaplexError(ErrorCode::ParseError, source + ": " + where + ": " + what);
}

std::string json_label(const ordered_json& v, const std::string& source, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return std::to_string(v.get<std::int64_t>());
  json_fail(source, where, "vertex labels must be strings or non-negative integers");
}

std::vector<std::string> json_simplex(const ordered_json& v, const std::string& source, const std::string& where) {
  if (!v.is_array() || v.empty()) json_fail(source, where, "expected a non-empty array of vertex labels");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(json_label(e, source, where));
  return out;
}

Rational json_rational(const ordered_json& v, const std::string& source, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const MetaplexError& e) {
    json_fail(source, where, e.what());
  }
  json_fail(source, where, "rationals are written as \"p/q\" strings or integers");
}

ordered_json real_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_real(x).c_str(), nullptr);
}

Simplex resolve(const std::vector<std::string>& names, const VertexLabels& labels, const std::string& source) {
  std::vector<VertexId> ids;
  for (const auto& n : names) {
    auto id = labels.find(n);
    if (!id) throw MetaplexError(ErrorCode::ParseError, source + ": unknown vertex '" + n + "'");
    ids.push_back(*id);
  }
  try {
    return make_simplex(std::move(ids));
  } catch (const MetaplexError& e) {
    throw MetaplexError(ErrorCode::ParseError, source + ": " + e.what());
  }
}

}  // namespace

VertexLabels::VertexLabels(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (std::all_of(labels_.begin(), labels_.end(), is_index)) {
    std::sort(labels_.begin(), labels_.end(), [](const std::string& a, const std::string& b) {
      return std::stoull(a) < std::stoull(b) || (std::stoull(a) == std::stoull(b) && a < b);
    });
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) ids_.emplace(labels_[i], static_cast<VertexId>(i));
}

std::optional<VertexId> VertexLabels::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string VertexLabels::label(const Simplex& sigma) const {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += '-';
    out += label(sigma[i]);
  }
  return out;
}

std::vector<std::string> VertexLabels::label_list(const Simplex& sigma) const {
  std::vector<std::string> out;
  for (VertexId v : sigma.vertices()) out.push_back(label(v));
  return out;
}

EdgeList parse_edge_list(std::string_view text, const std::string& source) {
  EdgeList out;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    const auto tokens = tokenize(content);
    if (tokens.empty()) return;
    if (tokens.size() > 2) parse_fail(source, line, tokens[2].column, "expected 'u v' or a lone vertex");
    if (tokens.size() == 1) {
      out.vertices.push_back(tokens[0].text);
      return;
    }
    if (tokens[0].text == tokens[1].text) parse_fail(source, line, tokens[1].column, "self-loop");
    out.edges.emplace_back(tokens[0].text, tokens[1].text);
  });
  return out;
}

std::map<std::string, Rational> parse_concentrations(std::string_view text, const std::string& source) {
  std::map<std::string, Rational> out;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    const auto tokens = tokenize(content);
    if (tokens.empty()) return;
    if (tokens.size() != 2) {
      parse_fail(source, line, tokens.size() > 2 ? tokens[2].column : tokens[0].column, "expected 'vertex rational'");
    }
    Rational value;
    try {
      value = parse_rational(tokens[1].text);
    } catch (const MetaplexError&) {
      parse_fail(source, line, tokens[1].column, "'" + tokens[1].text + "' is not a rational");
    }
    if (!out.emplace(tokens[0].text, value).second) {
      parse_fail(source, line, tokens[0].column, "vertex '" + tokens[0].text + "' listed twice");
    }
  });
  return out;
}

std::map<std::string, InternalStructure> parse_internal_structures(std::string_view text, const std::string& source) {
  const auto doc = parse_json(text, source);
  if (!doc.is_object()) json_fail(source, "top level", "expected an object mapping vertex to [[label, weight], ...]");
  std::map<std::string, InternalStructure> out;
  for (const auto& [vertex, elements] : doc.items()) {
    if (!elements.is_array()) json_fail(source, vertex, "expected an array of [label, weight] pairs");
    InternalStructure s;
    for (const auto& e : elements) {
      if (!e.is_array() || e.size() != 2) json_fail(source, vertex, "each element is a [label, weight] pair");
      s.elements.emplace_back(json_label(e[0], source, vertex), json_rational(e[1], source, vertex));
    }
    out.emplace(vertex, std::move(s));
  }
  return out;
}

ComplexDocument parse_complex_document(std::string_view text, const std::string& source) {
  const auto doc = parse_json(text, source);
  if (!doc.is_object()) json_fail(source, "top level", "expected an object");
  ComplexDocument out;
  out.scheme = doc.value("scheme", std::string("uniform"));
  if (doc.contains("vertices")) {
    for (const auto& v : doc.at("vertices")) out.vertices.push_back(json_label(v, source, "vertices"));
  }
  if (doc.contains("facets")) {
    for (const auto& f : doc.at("facets")) out.facets.push_back(json_simplex(f, source, "facets"));
  }
  if (doc.contains("simplices")) {
    for (const auto& s : doc.at("simplices")) {
      if (s.is_array()) {
        out.simplices.emplace_back(json_simplex(s, source, "simplices"), std::nullopt);
        continue;
      }
      if (!s.is_object() || !s.contains("simplex")) json_fail(source, "simplices", "expected {\"simplex\": [...]}");
      std::optional<Rational> w;
      if (s.contains("weight")) w = json_rational(s.at("weight"), source, "simplices");
      out.simplices.emplace_back(json_simplex(s.at("simplex"), source, "simplices"), std::move(w));
    }
  }
  if (out.facets.empty() && out.simplices.empty() && out.vertices.empty()) {
    json_fail(source, "top level", "needs \"facets\", \"simplices\" or \"vertices\"");
  }
  return out;
}

std::vector<SchemeEntry> parse_scheme_table(std::string_view text, const std::string& source) {
  const auto doc = parse_json(text, source);
  if (!doc.is_array()) json_fail(source, "top level", "expected an array of {tau, sigma, fraction}");
  std::vector<SchemeEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& e = doc[i];
    const std::string where = "entry " + std::to_string(i);
    if (!e.is_object() || !e.contains("tau") || !e.contains("sigma") || !e.contains("fraction")) {
      json_fail(source, where, "expected {\"tau\", \"sigma\", \"fraction\"}");
    }
    out.push_back({json_simplex(e.at("tau"), source, where), json_simplex(e.at("sigma"), source, where),
                   json_rational(e.at("fraction"), source, where)});
  }
  return out;
}

ContributionScheme build_scheme_table(std::span<const SchemeEntry> entries, const VertexLabels& labels) {
  ContributionScheme::Table table;
  for (const auto& e : entries) {
    const Simplex tau = resolve(e.tau, labels, "scheme table");
    const Simplex sigma = resolve(e.sigma, labels, "scheme table");
    if (sigma.dim() != tau.dim() + 1 || !tau.is_face_of(sigma)) {
      throw MetaplexError(ErrorCode::SchemeAxiomViolation,
                          "axiom (i): " + labels.label(tau) + " is not a facet-boundary face of " + labels.label(sigma));
    }
    if (e.fraction <= 0 || e.fraction > 1) {
      throw MetaplexError(ErrorCode::SchemeAxiomViolation, "axiom (ii): fraction " + to_string(e.fraction) + " for (" +
                                                               labels.label(tau) + ", " + labels.label(sigma) +
                                                               ") is outside (0, 1]");
    }
    if (!table.emplace(std::pair{tau, sigma}, e.fraction).second) {
      throw MetaplexError(ErrorCode::ParseError,
                          "scheme table lists (" + labels.label(tau) + ", " + labels.label(sigma) + ") twice");
    }
  }
  return ContributionScheme::explicit_table(std::move(table));
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw MetaplexError(ErrorCode::InvalidConfig, "unknown format '" + name + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MetaplexError(ErrorCode::ParseError, path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

// Topology plus optional stored weights from a complex document.
LoadedMetaplex build_from_document(const ComplexDocument& doc, const std::string& source) {
  std::vector<std::string> names = doc.vertices;
  for (const auto& f : doc.facets) names.insert(names.end(), f.begin(), f.end());
  for (const auto& [s, w] : doc.simplices) names.insert(names.end(), s.begin(), s.end());
  LoadedMetaplex out{VertexLabels(std::move(names)), SimplicialComplex(), std::nullopt};
  out.complex = SimplicialComplex(out.labels.size());

  if (!doc.simplices.empty()) {
    std::vector<Simplex> simplices;
    std::size_t weighted = 0;
    for (const auto& [s, w] : doc.simplices) {
      simplices.push_back(resolve(s, out.labels, source));
      weighted += w.has_value();
    }
    out.complex = SimplicialComplex::from_simplices_unchecked(out.labels.size(), simplices);
    if (weighted != 0 && weighted != simplices.size()) {
      throw MetaplexError(ErrorCode::ParseError, source + ": either every simplex carries a weight or none does");
    }
    if (weighted) {
      ConcentrationAssignment a(doc.scheme);
      for (std::size_t i = 0; i < simplices.size(); ++i) a.set(simplices[i], *doc.simplices[i].second);
      out.assignment = std::move(a);
    }
    return out;
  }
  std::vector<Simplex> generators;
  for (const auto& f : doc.facets) generators.push_back(resolve(f, out.labels, source));
  for (const auto& v : doc.vertices) generators.push_back(resolve({v}, out.labels, source));
  out.complex.insert_all(generators);
  return out;
}

}  // namespace

LoadedMetaplex read_metaplex(std::string_view text, const std::string& source) {
  return build_from_document(parse_complex_document(text, source), source);
}

InputBundle load_bundle(const InputPaths& paths) {
  if (paths.graph && paths.complex) {
    throw MetaplexError(ErrorCode::InvalidConfig, "give either a graph or a complex, not both");
  }
  InputBundle bundle;
  if (paths.graph) {
    const EdgeList edges = parse_edge_list(read_file(*paths.graph), paths.graph->string());
    std::vector<std::string> names = edges.vertices;
    for (const auto& [u, v] : edges.edges) {
      names.push_back(u);
      names.push_back(v);
    }
    bundle.labels = VertexLabels(std::move(names));
    Graph g(bundle.labels.size());
    for (const auto& [u, v] : edges.edges) g.add_edge(*bundle.labels.find(u), *bundle.labels.find(v));
    bundle.graph = std::move(g);
  } else if (paths.complex) {
    LoadedMetaplex loaded = read_metaplex(read_file(*paths.complex), paths.complex->string());
    bundle.labels = std::move(loaded.labels);
    bundle.complex = std::move(loaded.complex);
    bundle.weights = std::move(loaded.assignment);
  }

  if (paths.concentrations || paths.internal) {
    std::map<std::string, Rational> values;
    if (paths.concentrations) values = parse_concentrations(read_file(*paths.concentrations), paths.concentrations->string());
    if (paths.internal) {
      for (auto& [vertex, structure] : parse_internal_structures(read_file(*paths.internal), paths.internal->string())) {
        Rational c;
        try {
          c = concentration_from_internal(structure);
        } catch (const MetaplexError& e) {
          throw MetaplexError(e.code(), paths.internal->string() + ": vertex '" + vertex + "': " + e.what());
        }
        if (!values.emplace(vertex, c).second) {
          throw MetaplexError(ErrorCode::ParseError, "vertex '" + vertex + "' has both a concentration and an internal structure");
        }
      }
    }
    ConcentrationMap concentrations;
    std::string missing;
    for (VertexId v = 0; v < bundle.labels.size(); ++v) {
      auto it = values.find(bundle.labels.label(v));
      if (it == values.end()) {
        missing += (missing.empty() ? "" : ", ") + bundle.labels.label(v);
        continue;
      }
      if (it->second <= 0) {
        throw MetaplexError(ErrorCode::NonPositiveConcentration,
                            "vertex '" + it->first + "' has concentration " + to_string(it->second));
      }
      concentrations.emplace(v, it->second);
    }
    if (!missing.empty()) {
      throw MetaplexError(ErrorCode::MissingConcentration, "no concentration for vertices [" + missing + "]");
    }
    bundle.concentrations = std::move(concentrations);
  }

  if (paths.scheme_table) {
    const auto entries = parse_scheme_table(read_file(*paths.scheme_table), paths.scheme_table->string());
    bundle.scheme = build_scheme_table(entries, bundle.labels);
    // Check every level that is already known before any weight is computed.
    const SimplicialComplex known = bundle.complex ? *bundle.complex
                                    : bundle.graph ? one_skeleton_complex(*bundle.graph)
                                                   : SimplicialComplex();
    for (int q = 1; q <= known.dim(); ++q) {
      const auto report = validate_scheme(bundle.scheme, known, q);
      if (!report.ok()) {
        const auto& v = report.violations.front();
        throw MetaplexError(ErrorCode::SchemeAxiomViolation, "axiom (" + std::to_string(v.axiom) + ") fails at " +
                                                                 bundle.labels.label(v.tau) + " on level " +
                                                                 std::to_string(q));
      }
    }
  }
  return bundle;
}

std::string write_metaplex(const VertexLabels& labels, const SimplicialComplex& complex,
                           const ConcentrationAssignment* assignment) {
  ordered_json doc;
  doc["vertices"] = labels.labels();
  if (assignment) doc["scheme"] = assignment->scheme();
  doc["facets"] = ordered_json::array();
  for (const Simplex& f : complex.facets()) doc["facets"].push_back(labels.label_list(f));
  doc["simplices"] = ordered_json::array();
  for (int q = 0; q <= complex.dim(); ++q) {
    for (const Simplex& s : complex.level(q)) {
      ordered_json entry;
      entry["simplex"] = labels.label_list(s);
      if (assignment) entry["weight"] = to_string(assignment->at(s));
      doc["simplices"].push_back(std::move(entry));
    }
  }
  return doc.dump(2) + "\n";
}

std::string write_trace(const VertexLabels& labels, const InferenceTrace& trace, bool strict, Format format) {
  if (format == Format::Json) {
    ordered_json doc;
    doc["rule"] = strict ? "strict" : "non-strict";
    doc["levels"] = ordered_json::array();
    for (const auto& level : trace.levels) {
      ordered_json l;
      l["q"] = level.q;
      l["reference_mean"] = to_string(level.reference_mean);
      l["multiplier"] = to_string(level.multiplier);
      l["threshold"] = to_string(level.threshold);
      l["candidates"] = ordered_json::array();
      for (const auto& c : level.candidates) {
        const bool admitted = std::binary_search(level.admitted.begin(), level.admitted.end(), c.simplex);
        l["candidates"].push_back(
            {{"simplex", labels.label(c.simplex)}, {"boundary_weight", to_string(c.boundary_weight)}, {"admitted", admitted}});
      }
      l["admitted"] = ordered_json::array();
      for (const auto& s : level.admitted) l["admitted"].push_back(labels.label(s));
      l["rejected"] = ordered_json::array();
      for (const auto& s : level.rejected) l["rejected"].push_back(labels.label(s));
      doc["levels"].push_back(std::move(l));
    }
    return doc.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out = "q,simplex,boundary_weight,threshold,admitted\n";
    for (const auto& level : trace.levels) {
      for (const auto& c : level.candidates) {
        const bool admitted = std::binary_search(level.admitted.begin(), level.admitted.end(), c.simplex);
        out += std::to_string(level.q) + "," + labels.label(c.simplex) + "," + to_string(c.boundary_weight) + "," +
               to_string(level.threshold) + "," + (admitted ? "1" : "0") + "\n";
      }
    }
    return out;
  }
  std::string out = "rule " + std::string(strict ? "strict" : "non-strict") + "\n";
  for (const auto& level : trace.levels) {
    out += "q=" + std::to_string(level.q) + " mean=" + to_string(level.reference_mean) +
           " multiplier=" + to_string(level.multiplier) + " threshold=" + to_string(level.threshold) +
           " candidates=" + std::to_string(level.candidates.size()) + " admitted=" + std::to_string(level.admitted.size()) +
           " rejected=" + std::to_string(level.rejected.size()) + "\n";
    for (const auto& c : level.candidates) {
      const bool admitted = std::binary_search(level.admitted.begin(), level.admitted.end(), c.simplex);
      out += "  " + labels.label(c.simplex) + " W=" + to_string(c.boundary_weight) + (admitted ? " admitted" : " rejected") + "\n";
    }
  }
  return out;
}

std::string write_report(const VertexLabels& labels, const CentralityReport& report, Format format) {
  if (format == Format::Json) {
    ordered_json doc;
    doc["q"] = report.q;
    doc["alpha"] = real_json(report.alpha);
    doc["distances"] = report.incoming ? "incoming" : "outgoing";
    doc["rows"] = ordered_json::array();
    for (const auto& r : report.rows) {
      doc["rows"].push_back({{"simplex", labels.label(r.simplex)},
                             {"component", r.component},
                             {"k", r.degree},
                             {"D", to_string(r.weighted_degree)},
                             {"D_alpha", real_json(r.combined_degree)},
                             {"farness", real_json(r.farness)},
                             {"CC_alpha", real_json(r.closeness)},
                             {"HC_alpha", real_json(r.harmonic)}});
    }
    return doc.dump(2) + "\n";
  }
  const std::vector<std::string> header{"simplex", "component", "k", "D", "D_alpha", "farness", "CC_alpha", "HC_alpha"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : report.rows) {
    cells.push_back({labels.label(r.simplex), std::to_string(r.component), std::to_string(r.degree),
                     to_string(r.weighted_degree), format_real(r.combined_degree), format_real(r.farness),
                     format_real(r.closeness), format_real(r.harmonic)});
  }
  std::string out;
  if (format == Format::Csv) {
    auto join = [](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + row[i];
      return line + "\n";
    };
    out = join(header);
    for (const auto& row : cells) out += join(row);
    return out;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  };
  out = "# q=" + std::to_string(report.q) + " alpha=" + format_real(report.alpha) +
        (report.incoming ? " incoming" : " outgoing") + "\n";
  emit(header);
  for (const auto& row : cells) emit(row);
  return out;
}

std::string write_matrix_csv(const VertexLabels& labels, const AdjacencyView& view, bool weighted) {
  std::string out;
  for (const Simplex& s : view.order) out += "," + labels.label(s);
  out += "\n";
  for (std::size_t i = 0; i < view.size(); ++i) {
    out += labels.label(view.order[i]);
    for (std::size_t j = 0; j < view.size(); ++j) {
      const auto r = static_cast<Eigen::Index>(i);
      const auto c = static_cast<Eigen::Index>(j);
      out += "," + (weighted ? to_string(view.strengths(r, c)) : std::to_string(view.binary(r, c)));
    }
    out += "\n";
  }
  return out;
}

}  // namespace metaplex::io
