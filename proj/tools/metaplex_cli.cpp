#include "metaplex/error.hpp"
#include "metaplex/io.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace metaplex;

  CLI::App app{"Combinatorial metaplex toolkit: weight extension, inference and centrality"};
  app.option_defaults()->always_capture_default();

  io::CommandOptions options;
  io::InputPaths paths;
  std::string multiplier;
  std::string scheme = "uniform";
  std::string format = "text";
  std::string out_dir;
  bool non_strict = false;

  app.add_option("command", options.command, "infer | weights | centrality | matrix | validate | clique | generate")
      ->required()
      ->check(CLI::IsMember({"infer", "weights", "centrality", "matrix", "validate", "clique", "generate"}));
  app.add_option("--graph", paths.graph, "Edge list: 'u v' per line, a lone label adds an isolated vertex");
  app.add_option("--complex", paths.complex, "JSON complex document (facets and/or simplices)");
  app.add_option("--concentrations", paths.concentrations, "Two-column 'vertex rational' text");
  app.add_option("--internal", paths.internal, "JSON internal structures: vertex -> [[label, rational], ...]");
  app.add_option("--max-dim", options.max_dim, "Highest simplex dimension to build")->check(CLI::Range(1, 64));
  app.add_option("--alpha", options.alpha, "Interpolation between structure (0) and weights (1)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--q", options.q, "Simplex dimension for centrality and matrix export")->check(CLI::NonNegativeNumber);
  app.add_option("--multiplier", multiplier, "Threshold multiplier p/q (default q+1)");
  app.add_flag("--non-strict", non_strict, "Admit candidates whose boundary weight equals the threshold");
  app.add_option("--scheme", scheme, "uniform | table:PATH");
  app.add_flag("--incoming", options.incoming, "Closeness and harmonic from incoming distances");
  app.add_flag("--weighted", options.weighted, "Export the strength matrix instead of the 0/1 adjacency");
  app.add_option("--sort", options.sort_by, "Sort report rows: simplex, k, D, D_alpha, farness, CC_alpha, HC_alpha");
  app.add_option("--seed", options.seed, "Seed for generate");
  app.add_option("--vertices", options.vertices, "Vertex count for generate")->check(CLI::Range(1, 10));
  app.add_option("--edge-probability", options.edge_probability, "Edge probability for generate")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_dir, "Write artifacts into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : io::InputError;
  }

  try {
    options.strict = !non_strict;
    options.format = io::parse_format(format);
    if (!multiplier.empty()) options.multiplier = parse_rational(multiplier);
    if (!out_dir.empty()) options.out_dir = out_dir;
    if (scheme.rfind("table:", 0) == 0) {
      paths.scheme_table = scheme.substr(6);
    } else if (scheme != "uniform") {
      throw MetaplexError(ErrorCode::InvalidConfig, "--scheme must be 'uniform' or 'table:PATH'");
    }
    const io::InputBundle bundle = options.command == "generate" ? io::InputBundle{} : io::load_bundle(paths);
    return io::run_command(bundle, options, std::cout, std::cerr);
  } catch (const MetaplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io::InputError;
  }
}
