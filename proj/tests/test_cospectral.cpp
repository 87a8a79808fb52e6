#include "doctest.h"
#include "oracles.hpp"
#include "rcorona/cospectral.hpp"
#include "rcorona/error.hpp"
#include "rcorona/generators.hpp"

using namespace rcorona;

TEST_SUITE("cospectral") {
  TEST_CASE("adjacency cospectrality") {
    CHECK(adjacency_cospectral(gen::shrikhande(), gen::rook4x4()));
    CHECK_FALSE(adjacency_cospectral(gen::complete(3), gen::cycle(4)));
    CHECK(adjacency_cospectral(gen::petersen(), gen::petersen()));
    // 2C3 has eigenvalue 2 twice; C6 has -2
    CHECK_FALSE(adjacency_cospectral(gen::cycle(6), gen::disjoint_union(gen::cycle(3), gen::cycle(3))));
  }

  TEST_CASE("adjacency spectrum of an SRG(16,6,2,2)") {
    for (const auto& g : {gen::shrikhande(), gen::rook4x4()}) {
      const auto s = adjacency_spectrum(g);
      CHECK(s.count_near(6.0, 1e-9) == 1);
      CHECK(s.count_near(2.0, 1e-9) == 6);
      CHECK(s.count_near(-2.0, 1e-9) == 9);
    }
  }

  TEST_CASE("normalized Laplacian cospectrality") {
    CHECK(nl_cospectral(gen::shrikhande(), gen::rook4x4()));
    CHECK_FALSE(nl_cospectral(gen::path(2), gen::complete(3)));
    CHECK(nl_cospectral(gen::cycle(7), gen::cycle(7)));
    CHECK_THROWS_AS(nl_cospectral(gen::complete(1), gen::complete(1)), InputError);
  }

  TEST_CASE("lemma27_check") {
    CHECK(lemma27_check(gen::shrikhande(), gen::rook4x4()));
    CHECK(lemma27_check(gen::cycle(6), gen::disjoint_union(gen::cycle(3), gen::cycle(3))));
    CHECK(lemma27_check(gen::cycle(4), gen::cycle(5)));
    CHECK_THROWS_AS(lemma27_check(gen::path(3), gen::cycle(3)), InputError);
  }

  TEST_CASE("adjacency and NL verdicts agree on every regular catalog pair") {
    const auto catalog = oracle::regular_catalog();
    std::size_t positive = 0, negative = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i)
      for (std::size_t j = i; j < catalog.size(); ++j) {
        CAPTURE(catalog[i].name);
        CAPTURE(catalog[j].name);
        CHECK(lemma27_check(catalog[i].graph, catalog[j].graph));
        (adjacency_cospectral(catalog[i].graph, catalog[j].graph) ? positive : negative)++;
      }
    CHECK(positive == catalog.size() + 1);
    CHECK(negative >= 10);
  }

  TEST_CASE("certificate for the SRG seed pair") {
    const auto k1 = gen::complete(1);
    const auto cert = theorem28_build(gen::shrikhande(), gen::rook4x4(), k1, k1, k1, k1);
    CHECK(cert.first.vertex_count() == 128);
    CHECK(cert.second.vertex_count() == 128);
    CHECK(cert.cospectral());
    CHECK(cert.numeric.max_deviation <= 1e-8);
    CHECK(cert.closed_form.match);
    CHECK(cert.non_regular());
    CHECK(cert.degree_profiles_equal);
    CHECK(cert.edge_sets_differ);
    CHECK(cert.recipe.kind == CoronaKind::Double);
  }

  TEST_CASE("vertex and edge corona certificates") {
    const auto p2 = gen::path(2), k3 = gen::complete(3);
    const auto v = theorem28_build(gen::shrikhande(), gen::rook4x4(), p2, p2, Graph{}, Graph{});
    CHECK(v.recipe.kind == CoronaKind::Vertex);
    CHECK(v.first.vertex_count() == 96);
    CHECK(v.cospectral());
    CHECK(v.non_regular());
    const auto e = theorem28_build(gen::shrikhande(), gen::rook4x4(), Graph{}, Graph{}, k3, k3);
    CHECK(e.recipe.kind == CoronaKind::Edge);
    CHECK(e.first.vertex_count() == 208);
    CHECK(e.cospectral());
    CHECK(e.closed_form.match);
  }

  TEST_CASE("cospectral joined graphs may differ") {
    const auto cert = theorem28_build(gen::cycle(5), gen::cycle(5), gen::shrikhande(), gen::rook4x4(), Graph{}, Graph{});
    CHECK(cert.first.vertex_count() == 5 + 5 + 5 * 16);
    CHECK(cert.cospectral());
    CHECK(cert.edge_sets_differ);
  }

  TEST_CASE("identical inputs are trivially cospectral") {
    const auto cert = theorem28_build(gen::petersen(), gen::petersen(), gen::cycle(4), gen::cycle(4),
                                      gen::complete(1), gen::complete(1));
    CHECK(cert.cospectral());
    CHECK(cert.numeric.max_deviation == 0.0);
    CHECK_FALSE(cert.edge_sets_differ);
  }

  TEST_CASE("seed hypotheses") {
    const auto k1 = gen::complete(1);
    CHECK_THROWS_AS(theorem28_build(gen::complete(3), gen::cycle(4), k1, k1, k1, k1), HypothesisError);
    CHECK_THROWS_AS(theorem28_build(gen::cycle(6), gen::disjoint_union(gen::cycle(3), gen::cycle(3)), k1, k1, k1, k1),
                    HypothesisError);
    CHECK_THROWS_AS(theorem28_build(gen::path(3), gen::path(3), k1, k1, k1, k1), HypothesisError);
    CHECK_THROWS_AS(theorem28_build(gen::cycle(5), gen::cycle(5), k1, Graph{}, k1, k1), HypothesisError);
    CHECK_THROWS_AS(theorem28_build(gen::cycle(5), gen::cycle(5), gen::path(2), gen::complete(3), k1, k1),
                    HypothesisError);
    CHECK_THROWS_AS(theorem28_build(gen::cycle(5), gen::cycle(5), Graph{}, Graph{}, Graph{}, Graph{}),
                    HypothesisError);
  }

  TEST_CASE("recipe survives a JSON round trip and replays") {
    const auto p2 = gen::path(2);
    const auto cert = theorem28_build(gen::cycle(5), gen::cycle(5), p2, p2, Graph{}, Graph{}, 1e-9,
                                      {"a", "b", "c", "d", "e", "f"});
    const auto j = certificate_to_json(cert);
    CHECK(j["verdict"] == "cospectral");
    CHECK(j["recipe"]["kind"] == "vertex");
    CHECK(j["recipe"]["inputs"][0]["name"] == "a");
    CHECK(j["first"]["spectrum"].size() == 20);
    const auto recipe = recipe_from_json(j["recipe"]);
    CHECK(recipe.inputs == cert.recipe.inputs);
    CHECK(recipe.names == cert.recipe.names);
    CHECK(recipe.tol == 1e-9);
    const auto again = replay(recipe);
    CHECK(certificate_to_json(again) == j);
    CHECK_THROWS_AS(recipe_from_json(nlohmann::json::object({{"inputs", nlohmann::json::array()}})), InputError);
  }
}
