#pragma once

#include <array>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rcorona/graph.hpp"
#include "rcorona/ops.hpp"
#include "rcorona/spectrum.hpp"

namespace rcorona {

Spectrum adjacency_spectrum(const Graph& g);
Spectrum nl_spectrum(const Graph& g);

bool adjacency_cospectral(const Graph& g, const Graph& h, double tol = kDefaultTolerance);
/// Throws InputError if either graph has an isolated vertex.
bool nl_cospectral(const Graph& g, const Graph& h, double tol = kDefaultTolerance);
/// True iff the adjacency and normalized Laplacian verdicts coincide. Both graphs must be regular.
bool lemma27_check(const Graph& g, const Graph& h, double tol = kDefaultTolerance);

/// Inputs in the order G, H, G1, H1, G2, H2.
struct CospectralRecipe {
  std::array<Graph, 6> inputs;
  std::array<std::string, 6> names;
  CoronaKind kind = CoronaKind::Double;
  double tol = kDefaultTolerance;
};

struct CospectralCertificate {
  CospectralRecipe recipe;
  Graph first;
  Graph second;
  Spectrum first_spectrum;
  Spectrum second_spectrum;
  ComparisonReport numeric;
  /// Agreement of the two closed-form spectra.
  ComparisonReport closed_form;
  bool first_regular = false;
  bool second_regular = false;
  bool degree_profiles_equal = false;
  bool edge_sets_differ = false;

  bool cospectral() const noexcept { return numeric.match; }
  bool non_regular() const noexcept { return !first_regular && !second_regular; }
};

/// Builds the same corona over both seed triples and certifies the outputs
/// NL-cospectral. Null G1/H1 (or G2/H2) pairs select the vertex or edge corona.
/// Throws HypothesisError when a seed pair fails its preconditions.
CospectralCertificate theorem28_build(const Graph& g, const Graph& h, const Graph& g1, const Graph& h1,
                                      const Graph& g2, const Graph& h2, double tol = kDefaultTolerance,
                                      std::array<std::string, 6> names = {"G", "H", "G1", "H1", "G2", "H2"});

/// Re-runs theorem28_build from a stored recipe.
CospectralCertificate replay(const CospectralRecipe& recipe);

nlohmann::json certificate_to_json(const CospectralCertificate& cert);
/// Reads the "recipe" object of a serialized certificate.
CospectralRecipe recipe_from_json(const nlohmann::json& j);

}  // namespace rcorona
