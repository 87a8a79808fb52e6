#include "rcorona/cospectral.hpp"

#include <algorithm>

#include "rcorona/closed_form.hpp"
#include "rcorona/eigensolver.hpp"
#include "rcorona/error.hpp"
#include "rcorona/graph_io.hpp"
#include "rcorona/laplacian.hpp"

namespace rcorona {

Spectrum adjacency_spectrum(const Graph& g) { return numeric_spectrum(adjacency_matrix(g)); }

Spectrum nl_spectrum(const Graph& g) { return numeric_spectrum(normalized_laplacian(g)); }

bool adjacency_cospectral(const Graph& g, const Graph& h, double tol) {
  if (g.vertex_count() != h.vertex_count()) return false;
  return compare_spectra(adjacency_spectrum(g), adjacency_spectrum(h), tol).match;
}

bool nl_cospectral(const Graph& g, const Graph& h, double tol) {
  const auto a = nl_spectrum(g);
  const auto b = nl_spectrum(h);
  return compare_spectra(a, b, tol).match;
}

bool lemma27_check(const Graph& g, const Graph& h, double tol) {
  require_regular(g, "first graph");
  require_regular(h, "second graph");
  return adjacency_cospectral(g, h, tol) == nl_cospectral(g, h, tol);
}

namespace {

void check_seed(const Graph& g, const std::string& name, bool base) {
  if (base) {
    if (g.is_null()) throw HypothesisError("seed " + name + " must not be the null graph");
    if (!is_connected(g)) throw HypothesisError("seed " + name + " must be connected");
  }
  if (!g.is_null() && !degree_profile(g).is_regular()) throw HypothesisError("seed " + name + " must be regular");
}

void check_pair(const Graph& a, const Graph& b, const std::string& na, const std::string& nb, bool base,
                double tol) {
  check_seed(a, na, base);
  check_seed(b, nb, base);
  if (a.is_null() != b.is_null()) throw HypothesisError("seeds " + na + " and " + nb + " must both be null or both non-null");
  if (!a.is_null() && !adjacency_cospectral(a, b, tol))
    throw HypothesisError("seeds " + na + " and " + nb + " are not cospectral");
}

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = degree_profile(g).degrees;
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_set(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  std::sort(out.begin(), out.end());
  return out;
}

const char* kind_name(CoronaKind kind) {
  switch (kind) {
    case CoronaKind::Double: return "double";
    case CoronaKind::Vertex: return "vertex";
    case CoronaKind::Edge: return "edge";
  }
  return "double";
}

}  // namespace

CospectralCertificate theorem28_build(const Graph& g, const Graph& h, const Graph& g1, const Graph& h1,
                                      const Graph& g2, const Graph& h2, double tol, std::array<std::string, 6> names) {
  check_pair(g, h, names[0], names[1], true, tol);
  check_pair(g1, h1, names[2], names[3], false, tol);
  check_pair(g2, h2, names[4], names[5], false, tol);
  if (g1.is_null() && g2.is_null())
    throw HypothesisError("at least one of the " + names[2] + "/" + names[3] + " and " + names[4] + "/" + names[5] +
                          " pairs must be non-null");

  CospectralCertificate cert;
  cert.recipe = {{g, h, g1, h1, g2, h2}, std::move(names), CoronaKind::Double, tol};
  if (g2.is_null()) cert.recipe.kind = CoronaKind::Vertex;
  if (g1.is_null()) cert.recipe.kind = CoronaKind::Edge;

  cert.first = double_corona(g, g1, g2).graph;
  cert.second = double_corona(h, h1, h2).graph;
  cert.first_spectrum = nl_spectrum(cert.first);
  cert.second_spectrum = nl_spectrum(cert.second);
  cert.numeric = compare_spectra(cert.first_spectrum, cert.second_spectrum, tol);
  cert.closed_form = compare_spectra(flatten(closed_form_spectrum(g, g1, g2)), flatten(closed_form_spectrum(h, h1, h2)), tol);
  cert.first_regular = degree_profile(cert.first).is_regular();
  cert.second_regular = degree_profile(cert.second).is_regular();
  cert.degree_profiles_equal = sorted_degrees(cert.first) == sorted_degrees(cert.second);
  cert.edge_sets_differ = edge_set(cert.first) != edge_set(cert.second);
  return cert;
}

CospectralCertificate replay(const CospectralRecipe& recipe) {
  const auto& in = recipe.inputs;
  return theorem28_build(in[0], in[1], in[2], in[3], in[4], in[5], recipe.tol, recipe.names);
}

nlohmann::json certificate_to_json(const CospectralCertificate& cert) {
  auto side = [](const Graph& g, const Spectrum& s, bool regular) {
    return nlohmann::json{{"graph", io::graph_to_json(g)}, {"regular", regular}, {"spectrum", spectrum_to_json(s)}};
  };
  auto report = [](const ComparisonReport& r) {
    return nlohmann::json{{"match", r.match},
                          {"length_mismatch", r.length_mismatch},
                          {"max_deviation", r.max_deviation},
                          {"worst_index", r.worst_index}};
  };
  nlohmann::json inputs = nlohmann::json::array();
  for (std::size_t k = 0; k < 6; ++k)
    inputs.push_back({{"name", cert.recipe.names[k]}, {"graph", io::graph_to_json(cert.recipe.inputs[k])}});
  return {{"verdict", cert.cospectral() ? "cospectral" : "not cospectral"},
          {"tol", cert.recipe.tol},
          {"numeric", report(cert.numeric)},
          {"closed_form", report(cert.closed_form)},
          {"non_regular", cert.non_regular()},
          {"degree_profiles_equal", cert.degree_profiles_equal},
          {"edge_sets_differ", cert.edge_sets_differ},
          {"first", side(cert.first, cert.first_spectrum, cert.first_regular)},
          {"second", side(cert.second, cert.second_spectrum, cert.second_regular)},
          {"recipe", {{"kind", kind_name(cert.recipe.kind)}, {"tol", cert.recipe.tol}, {"inputs", std::move(inputs)}}}};
}

CospectralRecipe recipe_from_json(const nlohmann::json& j) {
  const auto& inputs = j.at("inputs");
  if (!inputs.is_array() || inputs.size() != 6) throw InputError("recipe: expected six inputs");
  CospectralRecipe recipe;
  for (std::size_t k = 0; k < 6; ++k) {
    recipe.names[k] = inputs[k].at("name").get<std::string>();
    recipe.inputs[k] = io::graph_from_json(inputs[k].at("graph"));
  }
  recipe.tol = j.value("tol", kDefaultTolerance);
  const auto kind = j.value("kind", std::string("double"));
  recipe.kind = kind == "vertex" ? CoronaKind::Vertex : kind == "edge" ? CoronaKind::Edge : CoronaKind::Double;
  return recipe;
}

}  // namespace rcorona
