#include "metaplex/error.hpp"
#include "metaplex/io.hpp"
#include "metaplex/testkit.hpp"

#include <fstream>
#include <ostream>

namespace metaplex::io {

namespace {

struct WeightedComplex {
  SimplicialComplex complex;
  ConcentrationAssignment assignment;
};

const char* extension(Format f) {
  switch (f) {
    case Format::Json: return ".json";
    case Format::Csv: return ".csv";
    case Format::Text: break;
  }
  return ".txt";
}

void write_artifact(const CommandOptions& options, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(*options.out_dir);
  const auto path = *options.out_dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MetaplexError(ErrorCode::ParseError, path.string() + ": cannot write");
  out << content;
}

void emit(const CommandOptions& options, std::ostream& out, const std::string& name, const std::string& content) {
  if (options.out_dir) {
    write_artifact(options, name, content);
  } else {
    out << content;
  }
}

InferenceConfig config_from(const InputBundle& bundle, const CommandOptions& options) {
  InferenceConfig config;
  config.max_dim = options.max_dim;
  config.scheme = bundle.scheme;
  config.threshold_multiplier = options.multiplier;
  config.strict = options.strict;
  return config;
}

const ConcentrationMap& require_concentrations(const InputBundle& bundle) {
  if (!bundle.concentrations) {
    throw MetaplexError(ErrorCode::MissingConcentration, "no concentration source given (--concentrations or --internal)");
  }
  return *bundle.concentrations;
}

void require_closed(const InputBundle& bundle, const SimplicialComplex& complex) {
  const auto report = validate_closure(complex);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw MetaplexError(ErrorCode::ParseError, "complex is not closed: " + bundle.labels.label(v.simplex) +
                                                   " lacks face " + bundle.labels.label(v.missing_face));
  }
}

// Graph inputs go through inference; complexes keep stored weights or are
// extended from the vertex concentrations.
WeightedComplex resolve(const InputBundle& bundle, const CommandOptions& options) {
  if (bundle.graph) {
    auto inferred = infer_metaplex(*bundle.graph, require_concentrations(bundle), config_from(bundle, options));
    return {std::move(inferred.complex), std::move(inferred.assignment)};
  }
  if (!bundle.complex) throw MetaplexError(ErrorCode::InvalidConfig, "no topology given (--graph or --complex)");
  require_closed(bundle, *bundle.complex);
  if (bundle.weights) return {*bundle.complex, *bundle.weights};
  return {*bundle.complex, extend_full(*bundle.complex, require_concentrations(bundle), bundle.scheme)};
}

int cmd_infer(const InputBundle& bundle, const CommandOptions& options, std::ostream& out) {
  if (!bundle.graph) throw MetaplexError(ErrorCode::InvalidConfig, "infer needs --graph");
  const auto inferred = infer_metaplex(*bundle.graph, require_concentrations(bundle), config_from(bundle, options));
  const std::string trace = write_trace(bundle.labels, inferred.trace, options.strict, options.format);
  if (options.out_dir) {
    write_artifact(options, std::string("trace") + extension(options.format), trace);
    write_artifact(options, "metaplex.json", write_metaplex(bundle.labels, inferred.complex, &inferred.assignment));
  }
  out << trace;
  return Success;
}

int cmd_weights(const InputBundle& bundle, const CommandOptions& options, std::ostream& out) {
  SimplicialComplex complex;
  if (bundle.graph) {
    complex = one_skeleton_complex(*bundle.graph);
  } else if (bundle.complex) {
    complex = *bundle.complex;
    require_closed(bundle, complex);
  } else {
    throw MetaplexError(ErrorCode::InvalidConfig, "weights needs --graph or --complex");
  }
  const auto assignment = extend_full(complex, require_concentrations(bundle), bundle.scheme);
  if (options.format == Format::Json || options.out_dir) {
    emit(options, out, "metaplex.json", write_metaplex(bundle.labels, complex, &assignment));
    return Success;
  }
  std::string text = options.format == Format::Csv ? "simplex,dim,weight\n" : "";
  for (int q = 0; q <= complex.dim(); ++q) {
    for (const Simplex& s : complex.level(q)) {
      text += options.format == Format::Csv
                  ? bundle.labels.label(s) + "," + std::to_string(q) + "," + to_string(assignment.at(s)) + "\n"
                  : bundle.labels.label(s) + " " + to_string(assignment.at(s)) + "\n";
    }
  }
  out << text;
  return Success;
}

CentralityColumn column_named(const std::string& name) {
  if (name == "simplex") return CentralityColumn::Simplex;
  if (name == "k") return CentralityColumn::Degree;
  if (name == "D") return CentralityColumn::WeightedDegree;
  if (name == "D_alpha") return CentralityColumn::CombinedDegree;
  if (name == "CC_alpha") return CentralityColumn::Closeness;
  if (name == "HC_alpha") return CentralityColumn::Harmonic;
  if (name == "farness") return CentralityColumn::Farness;
  throw MetaplexError(ErrorCode::InvalidConfig, "unknown sort column '" + name + "'");
}

int cmd_centrality(const InputBundle& bundle, const CommandOptions& options, std::ostream& out) {
  const auto wc = resolve(bundle, options);
  auto report = centrality_report(wc.complex, wc.assignment, options.q, options.alpha, options.incoming);
  if (!options.sort_by.empty()) sort_rows(report, column_named(options.sort_by), options.sort_by != "simplex");
  emit(options, out, "centrality_q" + std::to_string(options.q) + extension(options.format),
       write_report(bundle.labels, report, options.format));
  return Success;
}

int cmd_matrix(const InputBundle& bundle, const CommandOptions& options, std::ostream& out) {
  const auto wc = resolve(bundle, options);
  const auto view = adjacency_matrices(wc.complex, wc.assignment, options.q);
  emit(options, out,
       "adjacency_q" + std::to_string(options.q) + (options.weighted ? "_weighted" : "") + ".csv",
       write_matrix_csv(bundle.labels, view, options.weighted));
  return Success;
}

struct CheckLine {
  std::string name;
  int q;
  bool ok;
  std::string detail;
};

int cmd_validate(const InputBundle& bundle, const CommandOptions& options, std::ostream& out) {
  std::vector<CheckLine> checks;
  WeightedComplex wc;
  if (bundle.complex) {
    const auto closure = validate_closure(*bundle.complex);
    checks.push_back({"closure", -1, closure.ok(), std::to_string(closure.violations.size()) + " missing faces"});
    for (const auto& v : closure.violations) {
      checks.push_back({"closure", v.simplex.dim(), false,
                        bundle.labels.label(v.simplex) + " lacks " + bundle.labels.label(v.missing_face)});
    }
    if (!closure.ok()) {
      for (const auto& c : checks) out << (c.ok ? "PASS " : "FAIL ") << c.name << " " << c.detail << "\n";
      return ValidationFailure;
    }
    wc = resolve(bundle, options);
  } else {
    wc = resolve(bundle, options);
    checks.push_back({"closure", -1, validate_closure(wc.complex).ok(), "inferred complex"});
  }

  for (int q = 1; q <= wc.complex.dim(); ++q) {
    const auto report = validate_scheme(bundle.scheme, wc.complex, q);
    checks.push_back({"scheme", q, report.ok(), std::to_string(report.violations.size()) + " axiom violations"});
  }
  for (const auto& r : validate_all_conservation(wc.assignment, wc.complex)) {
    checks.push_back({r.check, r.q, r.ok(), to_string(r.lhs) + " = " + to_string(r.rhs)});
  }
  // Stored weights must be what the scheme produces from the vertex weights.
  ConcentrationMap vertex_weights;
  for (const Simplex& v : wc.complex.level(0)) vertex_weights.emplace(v.front(), wc.assignment.at(v));
  bool consistent = false;
  try {
    consistent = extend_full(wc.complex, vertex_weights, bundle.scheme).weights() == wc.assignment.weights();
  } catch (const MetaplexError&) {
    consistent = false;
  }
  checks.push_back({"extension", -1, consistent, "weights reproduce from vertex concentrations"});

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;
  if (options.format == Format::Json) {
    out << "{\n  \"ok\": " << (all_ok ? "true" : "false") << ",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      out << "    {\"check\": \"" << c.name << "\", \"q\": " << c.q << ", \"ok\": " << (c.ok ? "true" : "false")
          << ", \"detail\": \"" << c.detail << "\"}" << (i + 1 < checks.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
  } else {
    for (const auto& c : checks) {
      out << (c.ok ? "PASS " : "FAIL ") << c.name;
      if (c.q >= 0) out << " q=" << c.q;
      out << " " << c.detail << "\n";
    }
  }
  return all_ok ? Success : ValidationFailure;
}

int cmd_clique(const InputBundle& bundle, const CommandOptions& options, std::ostream& out) {
  if (!bundle.graph) throw MetaplexError(ErrorCode::InvalidConfig, "clique needs --graph");
  const auto complex = clique_complex(*bundle.graph, options.max_dim);
  if (options.format == Format::Json || options.out_dir) {
    emit(options, out, "clique_complex.json", write_metaplex(bundle.labels, complex, nullptr));
    return Success;
  }
  for (const Simplex& f : complex.facets()) out << bundle.labels.label(f) << "\n";
  return Success;
}

int cmd_generate(const CommandOptions& options, std::ostream& out) {
  testkit::RandomCMSpec spec;
  spec.vertex_count = options.vertices;
  spec.edge_probability = options.edge_probability;
  spec.seed = options.seed;
  const auto cm = testkit::generate_random_cm(spec);
  std::string edges;
  for (VertexId v = 0; v < cm.graph.vertex_count(); ++v) {
    if (cm.graph.neighbors(v).empty()) edges += std::to_string(v) + "\n";
  }
  for (const auto& [u, v] : cm.graph.edges()) edges += std::to_string(u) + " " + std::to_string(v) + "\n";
  std::string concentrations;
  for (const auto& [v, c] : cm.concentrations) concentrations += std::to_string(v) + " " + to_string(c) + "\n";
  if (options.out_dir) {
    write_artifact(options, "graph.edges", edges);
    write_artifact(options, "concentrations.txt", concentrations);
  } else {
    out << "# graph.edges\n" << edges << "# concentrations.txt\n" << concentrations;
  }
  return Success;
}

}  // namespace

int run_command(const InputBundle& bundle, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.command == "infer") return cmd_infer(bundle, options, out);
    if (options.command == "weights") return cmd_weights(bundle, options, out);
    if (options.command == "centrality") return cmd_centrality(bundle, options, out);
    if (options.command == "matrix") return cmd_matrix(bundle, options, out);
    if (options.command == "validate") return cmd_validate(bundle, options, out);
    if (options.command == "clique") return cmd_clique(bundle, options, out);
    if (options.command == "generate") return cmd_generate(options, out);
    err << "error: unknown command '" << options.command << "'\n";
    return InputError;
  } catch (const MetaplexError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
}

}  // namespace metaplex::io
