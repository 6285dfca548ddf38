#include "helpers.hpp"

#include "metaplex/io.hpp"
#include "metaplex/testkit.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace metaplex;
using fixtures::check_throws_code;
using fixtures::r;

namespace {

const std::filesystem::path fixture_dir = METAPLEX_FIXTURES;

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "metaplex_io_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

io::InputBundle k4_bundle() {
  io::InputPaths paths;
  paths.graph = fixture_dir / "k4.edges";
  paths.concentrations = fixture_dir / "k4.conc";
  return io::load_bundle(paths);
}

std::pair<int, std::string> run(const io::InputBundle& bundle, io::CommandOptions options) {
  std::ostringstream out, err;
  const int code = io::run_command(bundle, options, out, err);
  return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("edge list and concentrations") {
  io::InputPaths paths;
  paths.graph = scratch("p3.edges", "0 1\n0 2\n");
  paths.concentrations = scratch("p3.conc", "0 1\n1 2\n2 3\n");
  const auto bundle = io::load_bundle(paths);
  REQUIRE(bundle.graph);
  CHECK(bundle.graph->vertex_count() == 3);
  CHECK(bundle.graph->edge_count() == 2);
  CHECK(bundle.graph->has_edge(0, 2));
  CHECK_FALSE(bundle.graph->has_edge(1, 2));

  CHECK(io::parse_concentrations("0 10/3\n").at("0") == r(10, 3));

  paths.concentrations = scratch("p3_missing.conc", "0 1\n1 2\n");
  try {
    io::load_bundle(paths);
    FAIL("expected MissingConcentration");
  } catch (const MetaplexError& e) {
    CHECK(e.code() == ErrorCode::MissingConcentration);
    CHECK(std::string(e.what()).find("[2]") != std::string::npos);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    io::parse_concentrations("0 1\n1 x\n", "c.txt");
    FAIL("expected ParseError");
  } catch (const MetaplexError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("c.txt:2:3") != std::string::npos);
  }
  check_throws_code([] { io::parse_edge_list("0 1 2\n"); }, ErrorCode::ParseError);
  check_throws_code([] { io::parse_edge_list("0 0\n"); }, ErrorCode::ParseError);
  check_throws_code([] { io::parse_complex_document("{"); }, ErrorCode::ParseError);
  check_throws_code([] { io::parse_scheme_table("[{\"tau\": [\"0\"]}]"); }, ErrorCode::ParseError);
  const auto edges = io::parse_edge_list("# header\n\na b # trailing\nc\n");
  CHECK(edges.edges.size() == 1);
  CHECK(edges.vertices == std::vector<std::string>{"c"});
}

TEST_CASE("vertex labels order numerically when possible") {
  const io::VertexLabels numeric({"10", "2", "1"});
  CHECK(numeric.labels() == std::vector<std::string>{"1", "2", "10"});
  const io::VertexLabels names({"b", "a", "10"});
  CHECK(names.labels() == std::vector<std::string>{"10", "a", "b"});
  CHECK(names.find("a") == VertexId{1});
  CHECK(names.label(make_simplex({0, 2})) == "10-b");
}

TEST_CASE("internal structures reduce to concentrations") {
  io::InputPaths paths;
  paths.graph = scratch("pair.edges", "x y\n");
  paths.internal = scratch("pair.json", R"({"x": [["p", "1/2"], ["q", "3/2"]], "y": [["p", "5"]]})");
  const auto bundle = io::load_bundle(paths);
  CHECK(bundle.concentrations->at(0) == 2);
  CHECK(bundle.concentrations->at(1) == 5);

  paths.internal = scratch("zero.json", R"({"x": [["p", "0"]], "y": [["p", "5"]]})");
  check_throws_code([&] { io::load_bundle(paths); }, ErrorCode::AllZeroWeights);
}

TEST_CASE("scheme tables are validated on load") {
  io::InputPaths paths;
  paths.complex = fixture_dir / "tri_pendant.json";
  paths.concentrations = fixture_dir / "tri_pendant.conc";
  paths.scheme_table = fixture_dir / "tri_pendant_table.json";
  const auto bundle = io::load_bundle(paths);
  CHECK(bundle.scheme.kind() == ContributionScheme::Kind::ExplicitTable);

  paths.scheme_table = scratch("bad_sum.json", R"([
    {"tau": ["0"], "sigma": ["0", "1"], "fraction": "1/2"},
    {"tau": ["0"], "sigma": ["0", "2"], "fraction": "1/2"},
    {"tau": ["0"], "sigma": ["0", "3"], "fraction": "1/2"}])");
  check_throws_code([&] { io::load_bundle(paths); }, ErrorCode::SchemeAxiomViolation);
  paths.scheme_table = scratch("not_incident.json", R"([{"tau": ["3"], "sigma": ["0", "1"], "fraction": "1"}])");
  check_throws_code([&] { io::load_bundle(paths); }, ErrorCode::SchemeAxiomViolation);
}

TEST_CASE("round trip of a weighted complex") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    testkit::RandomCMSpec spec;
    spec.vertex_count = 2 + seed % 7;
    spec.seed = seed;
    const auto cm = testkit::generate_random_cm(spec);
    const auto inferred = infer_metaplex(cm.graph, cm.concentrations, {});
    std::vector<std::string> names;
    for (std::size_t v = 0; v < spec.vertex_count; ++v) names.push_back(std::to_string(v));
    const io::VertexLabels labels(names);
    const std::string text = io::write_metaplex(labels, inferred.complex, &inferred.assignment);
    const auto loaded = io::read_metaplex(text);
    CAPTURE(seed);
    CHECK(loaded.complex == inferred.complex);
    REQUIRE(loaded.assignment);
    CHECK(*loaded.assignment == inferred.assignment);
    CHECK(io::write_metaplex(loaded.labels, loaded.complex, &*loaded.assignment) == text);
  }
}

TEST_CASE("K4 trace serialisation matches the fixtures byte for byte") {
  const auto bundle = k4_bundle();
  io::CommandOptions options;
  options.command = "infer";
  options.format = io::Format::Json;
  CHECK(run(bundle, options).second == io::read_file(fixture_dir / "k4_trace.json"));
  options.format = io::Format::Text;
  CHECK(run(bundle, options).second == io::read_file(fixture_dir / "k4_trace.txt"));
}

TEST_CASE("commands") {
  const auto bundle = k4_bundle();
  io::CommandOptions options;
  options.command = "centrality";
  options.q = 1;
  options.format = io::Format::Csv;
  const auto [code, csv] = run(bundle, options);
  CHECK(code == 0);
  CHECK(csv.find("\n0-3,0,4,32,32,") != std::string::npos);

  options.command = "matrix";
  options.weighted = false;
  const auto matrix = run(bundle, options).second;
  CHECK(matrix.rfind(",0-1,0-2,0-3,1-2,1-3,2-3\n", 0) == 0);
  CHECK(matrix.find("0-3,1,1,0,0,1,1\n") != std::string::npos);

  options.command = "clique";
  options.format = io::Format::Text;
  CHECK(run(bundle, options).second == "0-1-2-3\n");

  options.command = "nonsense";
  CHECK(run(bundle, options).first == io::InputError);

  options.command = "centrality";
  options.q = 4;
  CHECK(run(bundle, options).first == io::InputError);
}

TEST_CASE("validate accepts inferred output and flags tampering") {
  const auto bundle = k4_bundle();
  const auto inferred = infer_metaplex(*bundle.graph, *bundle.concentrations, {});
  const std::string doc = io::write_metaplex(bundle.labels, inferred.complex, &inferred.assignment);

  io::InputPaths paths;
  paths.complex = scratch("k4_metaplex.json", doc);
  io::CommandOptions options;
  options.command = "validate";
  CHECK(run(io::load_bundle(paths), options).first == io::Success);

  std::string tampered = doc;
  const auto at = tampered.find("\"weight\": \"4\"");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 13, "\"weight\": \"5\"");
  paths.complex = scratch("k4_tampered.json", tampered);
  const auto [code, text] = run(io::load_bundle(paths), options);
  CHECK(code == io::ValidationFailure);
  CHECK(text.find("FAIL global") != std::string::npos);

  paths.complex = fixture_dir / "open_complex.json";
  CHECK(run(io::load_bundle(paths), options).first == io::ValidationFailure);
}

TEST_CASE("generate is seeded") {
  io::CommandOptions options;
  options.command = "generate";
  options.seed = 11;
  options.vertices = 6;
  const auto first = run({}, options);
  CHECK(first.first == 0);
  CHECK(first == run({}, options));
  options.seed = 12;
  CHECK(first != run({}, options));
}
