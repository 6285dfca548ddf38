#include "helpers.hpp"

#include "metaplex/rational.hpp"

using namespace metaplex;
using fixtures::check_throws_code;

TEST_CASE("make_simplex sorts and rejects repeats") {
  const Simplex s = make_simplex({2, 0, 1});
  CHECK(s == Simplex::from_sorted({0, 1, 2}));
  CHECK(s.dim() == 2);
  CHECK(make_simplex({7}).dim() == 0);
  check_throws_code([] { make_simplex({1, 1, 2}); }, ErrorCode::DuplicateVertex);
  check_throws_code([] { make_simplex(std::vector<VertexId>{}); }, ErrorCode::EmptyVertexList);
}

TEST_CASE("boundary lists codimension-one faces in order") {
  const auto b = boundary(make_simplex({0, 1, 2}));
  REQUIRE(b.size() == 3);
  CHECK(b[0] == make_simplex({0, 1}));
  CHECK(b[1] == make_simplex({0, 2}));
  CHECK(b[2] == make_simplex({1, 2}));
  const auto e = boundary(make_simplex({0, 1}));
  CHECK(e == std::vector<Simplex>{make_simplex({0}), make_simplex({1})});
  check_throws_code([] { boundary(make_simplex({3})); }, ErrorCode::ZeroDimensionalSimplex);
}

TEST_CASE("face relations and editing") {
  const Simplex t = make_simplex({0, 1, 3});
  CHECK(make_simplex({0, 3}).is_face_of(t));
  CHECK(make_simplex({0, 3}).is_proper_face_of(t));
  CHECK(t.is_face_of(t));
  CHECK_FALSE(t.is_proper_face_of(t));
  CHECK_FALSE(make_simplex({2}).is_face_of(t));
  CHECK(t.without(1) == make_simplex({0, 3}));
  CHECK(make_simplex({0, 3}).with(1) == t);
  CHECK(label(t) == "0-1-3");
  CHECK(make_simplex({0, 1}) < make_simplex({0, 2}));
  CHECK(make_simplex({0, 1}) < make_simplex({0, 1, 2}));
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("10/3") == Rational(10, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "1/2/3", " 1"}) {
    CAPTURE(bad);
    check_throws_code([&] { parse_rational(bad); }, ErrorCode::ParseError);
  }
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
}
