#pragma once

#include "metaplex/centrality.hpp"
#include "metaplex/complex.hpp"
#include "metaplex/concentration.hpp"
#include "metaplex/error.hpp"
#include "metaplex/inference.hpp"

#include "doctest.h"

#include <initializer_list>

namespace fixtures {

using namespace metaplex;

inline Rational r(long p, long q = 1) { return Rational(p, q); }

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline ConcentrationMap k4_concentrations() { return {{0, r(1)}, {1, r(1)}, {2, r(1)}, {3, r(9)}}; }

inline InferredMetaplex k4_inferred() { return infer_metaplex(complete_graph(4), k4_concentrations(), {}); }

inline SimplicialComplex closure_of(std::size_t n, std::initializer_list<std::initializer_list<VertexId>> simplices) {
  SimplicialComplex c(n);
  for (auto s : simplices) c.insert(make_simplex(s));
  return c;
}

template <typename F>
void check_throws_code(F&& f, ErrorCode code) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const MetaplexError& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace fixtures
