#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rcorona/error.hpp"
#include "rcorona/generators.hpp"

using namespace rcorona;

TEST_SUITE("graph-core") {
  TEST_CASE("catalog parameters") {
    CHECK(gen::complete(3) == Graph::build(3, {{0, 1}, {0, 2}, {1, 2}}));

    const auto p = gen::petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(degree_profile(p).regular_degree == 3);
    CHECK(is_connected(p));

    const auto q3 = gen::hypercube(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(degree_profile(q3).regular_degree == 3);

    const std::size_t half[] = {3};
    const auto c6 = gen::circulant(6, half);
    CHECK(c6.edge_count() == 3);  // perfect matching
    CHECK(degree_profile(c6).regular_degree == 1);

    const auto k33 = gen::complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    CHECK(degree_profile(k33).regular_degree == 3);

    CHECK(gen::path(1).vertex_count() == 1);
    CHECK(gen::null_graph().is_null());
  }

  TEST_CASE("shrikhande and rook4x4 are both srg(16,6,2,2)") {
    for (const auto& g : {gen::shrikhande(), gen::rook4x4()}) {
      const auto p = oracle::srg_parameters(g);
      CHECK(p.strongly_regular);
      CHECK(p.v == 16);
      CHECK(p.k == 6);
      CHECK(p.lambda == 2);
      CHECK(p.mu == 2);
      CHECK(g.edge_count() == 48);
    }
    CHECK(degree_profile(gen::shrikhande()).degrees == degree_profile(gen::rook4x4()).degrees);
    std::set<std::pair<std::size_t, std::size_t>> a, b;
    for (const auto& e : gen::shrikhande().edges()) a.emplace(e.u, e.v);
    for (const auto& e : gen::rook4x4().edges()) b.emplace(e.u, e.v);
    CHECK(a != b);
  }

  TEST_CASE("generate dispatch and parameter errors") {
    const long long three[] = {3};
    CHECK(gen::generate("complete", three) == gen::complete(3));
    const long long circ[] = {8, 1, 2};
    CHECK(gen::generate("circulant", circ).edge_count() == 16);
    CHECK(gen::generate("petersen", {}).vertex_count() == 10);

    const long long two[] = {2};
    CHECK_THROWS_AS(gen::generate("cycle", two), GraphError);
    CHECK_THROWS_AS(gen::generate("dodecahedron", {}), GraphError);
    CHECK_THROWS_AS(gen::generate("petersen", three), GraphError);
    const long long bad_circ[] = {6, 4};
    CHECK_THROWS_AS(gen::generate("circulant", bad_circ), GraphError);
    const long long neg[] = {-1};
    CHECK_THROWS_AS(gen::generate("complete", neg), GraphError);
  }

  TEST_CASE("handshake identity across the catalog") {
    for (const auto& [name, g] : oracle::regular_catalog()) {
      CAPTURE(name);
      std::size_t sum = 0;
      for (auto d : degree_profile(g).degrees) sum += d;
      CHECK(sum == 2 * g.edge_count());
    }
  }
}
