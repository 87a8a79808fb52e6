#include "rcorona/closed_form.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "rcorona/eigensolver.hpp"
#include "rcorona/error.hpp"
#include "rcorona/laplacian.hpp"

namespace rcorona {

namespace {

std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Normalized Laplacian spectrum of a joined graph. An edgeless graph has no
// normalized Laplacian, but the fixed-family map ignores eta when r = 0, so
// zeros stand in.
Spectrum joined_spectrum(const Graph& h, std::size_t r_h) {
  if (h.is_null()) return {};
  if (r_h == 0) return Spectrum(std::vector<double>(h.vertex_count(), 0.0), "edgeless");
  return numeric_spectrum(normalized_laplacian(h));
}

// Every eigenvalue but the first (smallest): the principal zero is absorbed
// into the per-mu polynomials.
void add_fixed_families(std::vector<FixedFamily>& out, const Spectrum& spectrum, std::size_t r_h,
                        std::size_t copies, const char* label, double tol) {
  if (spectrum.size() < 2) return;
  std::vector<double> rest(spectrum.values().begin() + 1, spectrum.values().end());
  for (const auto& group : summarize(Spectrum(std::move(rest)), tol))
    out.push_back({fixed_family_eta(group.value, r_h), group.multiplicity * copies,
                   std::string(label) + short_real(group.value)});
}

template <class MakePolynomial>
void add_root_families(std::vector<RootFamily>& out, const Graph& g, double tol, MakePolynomial make) {
  const auto mu = numeric_spectrum(normalized_laplacian(g));
  for (const auto& group : summarize(mu, tol))
    out.push_back({make(group.value), group.multiplicity, "G mu=" + short_real(group.value)});
}

}  // namespace

void CoronaParams::validate() const {
  if (n < 1) throw HypothesisError("closed form requires a non-null base graph G");
  if (r < 1) throw HypothesisError("closed form requires G to be r-regular with r >= 1");
  if (2 * m != n * r) throw HypothesisError("inconsistent parameters: m must equal n*r/2");
  if (n1 > 0 && r1 >= n1) throw HypothesisError("inconsistent parameters: r1 must be below n1");
  if (n2 > 0 && r2 >= n2) throw HypothesisError("inconsistent parameters: r2 must be below n2");
}

CoronaParams CoronaParams::from_graphs(const Graph& g, const Graph& g1, const Graph& g2) {
  if (g.is_null()) throw HypothesisError("closed form requires a non-null base graph G");
  if (!is_connected(g)) throw HypothesisError("closed form requires G to be connected");
  const auto pg = degree_profile(g);
  if (!pg.regular_degree) throw HypothesisError("closed form requires G to be regular");
  CoronaParams p;
  p.n = g.vertex_count();
  p.m = g.edge_count();
  p.r = *pg.regular_degree;
  if (p.m < p.n) throw HypothesisError("closed form requires m >= n; m < n (G = K2) is unsupported");
  if (!g1.is_null()) {
    const auto p1 = degree_profile(g1);
    if (!p1.regular_degree) throw HypothesisError("closed form requires G1 to be regular");
    p.n1 = g1.vertex_count();
    p.r1 = *p1.regular_degree;
  }
  if (!g2.is_null()) {
    const auto p2 = degree_profile(g2);
    if (!p2.regular_degree) throw HypothesisError("closed form requires G2 to be regular");
    p.n2 = g2.vertex_count();
    p.r2 = *p2.regular_degree;
  }
  p.validate();
  return p;
}

double coronal_chi(std::size_t n_i, std::size_t r_i, double x) {
  if (n_i == 0) return 0.0;
  const double pole = 1.0 / static_cast<double>(r_i + 1);
  if (std::abs(x - pole) <= 1e-14 * std::max(1.0, std::abs(pole)))
    throw PoleError(pole, "coronal_chi: pole at x = 1/(r+1) = " + format_real(pole));
  return static_cast<double>(n_i) / (x - pole);
}

HadamardForms hadamard_form_check(const Graph& g1) {
  const auto profile = degree_profile(g1);
  if (!profile.regular_degree) throw InputError("hadamard_form_check: G1 is not regular");
  if (*profile.regular_degree == 0) throw InputError("hadamard_form_check: requires r1 >= 1");
  const double r1 = static_cast<double>(*profile.regular_degree);
  const double alpha = r1 / (r1 + 1.0);
  const auto l = normalized_laplacian(g1);
  const std::size_t n1 = g1.vertex_count();

  HadamardForms out{DenseMatrix(n1, n1), DenseMatrix(n1, n1), 0.0};
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      const double b = alpha + (i == j ? 1.0 - alpha : 0.0);
      out.entrywise(i, j) = l(i, j) * b;
      out.scaled(i, j) = ((i == j ? 1.0 : 0.0) + r1 * l(i, j)) / (r1 + 1.0);
      out.max_difference = std::max(out.max_difference, std::abs(out.entrywise(i, j) - out.scaled(i, j)));
    }
  return out;
}

double fixed_family_eta(double eta, std::size_t r_i) {
  const double r = static_cast<double>(r_i);
  return (1.0 + r * eta) / (r + 1.0);
}

std::size_t ClosedFormSpectrum::total_multiplicity() const {
  std::size_t t = 0;
  for (const auto& f : fixed) t += f.multiplicity;
  for (const auto& f : roots) t += f.multiplicity * static_cast<std::size_t>(f.polynomial.degree());
  if (excess) t += excess->multiplicity * static_cast<std::size_t>(excess->polynomial.degree());
  return t;
}

ClosedFormSpectrum theorem23_spectrum(const Graph& g, const Graph& g1, const Graph& g2, double group_tol) {
  if (g1.is_null() || g2.is_null())
    throw HypothesisError("double corona closed form requires non-null G1 and G2; use the vertex/edge corona forms");
  ClosedFormSpectrum out;
  out.params = CoronaParams::from_graphs(g, g1, g2);
  out.route = ClosedFormRoute::DoubleCorona;
  const auto& p = out.params;
  add_fixed_families(out.fixed, joined_spectrum(g1, p.r1), p.r1, p.n, "G1 eta=", group_tol);
  add_fixed_families(out.fixed, joined_spectrum(g2, p.r2), p.r2, p.m, "G2 delta=", group_tol);
  add_root_families(out.roots, g, group_tol, [&](double mu) { return mu_quartic<double>(p, mu); });
  if (p.m > p.n) out.excess = RootFamily{excess_quadratic<double>(p), p.m - p.n, "excess"};
  return out;
}

ClosedFormSpectrum cor24_spectrum(const Graph& g, const Graph& g1, double group_tol) {
  if (g1.is_null()) throw HypothesisError("vertex corona closed form requires a non-null G1");
  ClosedFormSpectrum out;
  out.params = CoronaParams::from_graphs(g, g1, Graph{});
  out.route = ClosedFormRoute::VertexCorona;
  const auto& p = out.params;
  add_fixed_families(out.fixed, joined_spectrum(g1, p.r1), p.r1, p.n, "G1 eta=", group_tol);
  add_root_families(out.roots, g, group_tol, [&](double mu) { return vertex_corona_cubic<double>(p, mu); });
  if (p.m > p.n) out.excess = RootFamily{RealPolynomial::linear(-1.0, 1.0), p.m - p.n, "excess"};
  return out;
}

ClosedFormSpectrum cor25_spectrum(const Graph& g, const Graph& g2, double group_tol) {
  if (g2.is_null()) throw HypothesisError("edge corona closed form requires a non-null G2");
  ClosedFormSpectrum out;
  out.params = CoronaParams::from_graphs(g, Graph{}, g2);
  out.route = ClosedFormRoute::EdgeCorona;
  const auto& p = out.params;
  add_fixed_families(out.fixed, joined_spectrum(g2, p.r2), p.r2, p.m, "G2 delta=", group_tol);
  add_root_families(out.roots, g, group_tol, [&](double mu) { return edge_corona_cubic<double>(p, mu); });
  if (p.m > p.n) out.excess = RootFamily{excess_quadratic<double>(p), p.m - p.n, "excess"};
  return out;
}

ClosedFormSpectrum closed_form_spectrum(const Graph& g, const Graph& g1, const Graph& g2, double group_tol) {
  if (g1.is_null() && g2.is_null())
    throw HypothesisError("closed form requires at least one of G1, G2 to be non-null");
  if (g2.is_null()) return cor24_spectrum(g, g1, group_tol);
  if (g1.is_null()) return cor25_spectrum(g, g2, group_tol);
  return theorem23_spectrum(g, g1, g2, group_tol);
}

Spectrum flatten(const ClosedFormSpectrum& cfs) {
  std::vector<double> values;
  values.reserve(cfs.total_multiplicity());
  for (const auto& f : cfs.fixed) values.insert(values.end(), f.multiplicity, f.value);
  auto expand = [&](const RootFamily& family) {
    for (double root : all_real_roots(family.polynomial))
      values.insert(values.end(), family.multiplicity, root);
  };
  for (const auto& family : cfs.roots) expand(family);
  if (cfs.excess) expand(*cfs.excess);
  return Spectrum(std::move(values), "closed-form");
}

namespace {

nlohmann::json root_family_json(const RootFamily& f) {
  return {{"coeffs", f.polynomial.coefficients()}, {"mult", f.multiplicity}, {"label", f.label}};
}

const char* route_name(ClosedFormRoute route) {
  switch (route) {
    case ClosedFormRoute::DoubleCorona: return "double";
    case ClosedFormRoute::VertexCorona: return "vertex";
    case ClosedFormRoute::EdgeCorona: return "edge";
  }
  return "double";
}

}  // namespace

nlohmann::json closed_form_to_json(const ClosedFormSpectrum& cfs) {
  nlohmann::json fixed = nlohmann::json::array();
  for (const auto& f : cfs.fixed) fixed.push_back({{"value", f.value}, {"mult", f.multiplicity}, {"label", f.label}});
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& f : cfs.roots) roots.push_back(root_family_json(f));
  const auto& p = cfs.params;
  return {{"route", route_name(cfs.route)},
          {"params", {{"n", p.n}, {"m", p.m}, {"r", p.r}, {"n1", p.n1}, {"r1", p.r1}, {"n2", p.n2}, {"r2", p.r2}}},
          {"fixed", std::move(fixed)},
          {"roots", std::move(roots)},
          {"excess", cfs.excess ? root_family_json(*cfs.excess) : nlohmann::json(nullptr)}};
}

}  // namespace rcorona
