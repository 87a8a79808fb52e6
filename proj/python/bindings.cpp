#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcorona/closed_form.hpp"
#include "rcorona/cospectral.hpp"
#include "rcorona/eigensolver.hpp"
#include "rcorona/error.hpp"
#include "rcorona/generators.hpp"
#include "rcorona/graph_io.hpp"
#include "rcorona/invariants.hpp"
#include "rcorona/laplacian.hpp"
#include "rcorona/ops.hpp"

namespace py = pybind11;
using namespace rcorona;

namespace {

template <class T>
py::array_t<double> to_numpy(const Matrix<T>& m) {
  py::array_t<double> a({m.rows(), m.cols()});
  auto view = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = static_cast<double>(m(i, j));
  return a;
}

DenseMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw InputError("expected a 2-D array");
  DenseMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  auto view = a.unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = view(i, j);
  return m;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (const auto& [u, v] : edges) e.push_back({u, v});
  return Graph::build(n, e);
}

py::tuple corona_tuple(const Corona& c) { return py::make_tuple(c.graph, layout_to_json(c.layout).dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "R-graph coronas and normalized Laplacian spectra";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n") = 0, py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("is_null", &Graph::is_null)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("degrees", [](const Graph& g) { return degree_profile(g).degrees; })
      .def("regular_degree", [](const Graph& g) { return degree_profile(g).regular_degree; })
      .def("to_edge_list", &io::to_edge_list)
      .def("to_json", [](const Graph& g) { return io::graph_to_json(g).dump(); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return io::parse_graph(text); });
  m.def("generate", [](const std::string& family, const std::vector<long long>& params) {
    return gen::generate(family, params);
  }, py::arg("family"), py::arg("params") = std::vector<long long>{});
  m.def("disjoint_union", &gen::disjoint_union);

  m.def("adjacency_matrix", [](const Graph& g) { return to_numpy(adjacency_matrix_int(g)); });
  m.def("incidence_matrix", [](const Graph& g) { return to_numpy(incidence_matrix_int(g)); });
  m.def("normalized_laplacian", [](const Graph& g) { return to_numpy(normalized_laplacian(g)); });
  m.def("nl_regular", [](const Graph& g) { return to_numpy(nl_regular(g)); });

  m.def("r_graph", [](const Graph& g) { return corona_tuple(r_graph(g)); });
  m.def("double_corona", [](const Graph& g, const Graph& g1, const Graph& g2, bool allow) {
    return corona_tuple(double_corona(g, g1, g2, allow));
  }, py::arg("g"), py::arg("g1"), py::arg("g2"), py::arg("allow_disconnected") = false);
  m.def("r_vertex_corona", [](const Graph& g, const Graph& g1) { return corona_tuple(r_vertex_corona(g, g1)); });
  m.def("r_edge_corona", [](const Graph& g, const Graph& g2) { return corona_tuple(r_edge_corona(g, g2)); });

  m.def("numeric_spectrum", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    return numeric_spectrum(from_numpy(a)).values();
  });
  m.def("nl_spectrum", [](const Graph& g) { return nl_spectrum(g).values(); });
  m.def("adjacency_spectrum", [](const Graph& g) { return adjacency_spectrum(g).values(); });
  m.def("compare_spectra", [](const std::vector<double>& a, const std::vector<double>& b, double tol) {
    const auto r = compare_spectra(Spectrum(a), Spectrum(b), tol);
    py::dict d;
    d["match"] = r.match;
    d["length_mismatch"] = r.length_mismatch;
    d["max_deviation"] = r.max_deviation;
    d["worst_index"] = r.worst_index;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTolerance);
  m.def("summarize", [](const std::vector<double>& values, double tol) {
    std::vector<std::pair<double, std::size_t>> out;
    for (const auto& g : summarize(Spectrum(values), tol)) out.emplace_back(g.value, g.multiplicity);
    return out;
  }, py::arg("values"), py::arg("tol") = kDefaultTolerance);

  py::class_<CoronaParams>(m, "CoronaParams")
      .def(py::init([](std::size_t n, std::size_t m_, std::size_t r, std::size_t n1, std::size_t r1, std::size_t n2,
                       std::size_t r2) {
             CoronaParams p{n, m_, r, n1, r1, n2, r2};
             p.validate();
             return p;
           }),
           py::arg("n"), py::arg("m"), py::arg("r"), py::arg("n1"), py::arg("r1"), py::arg("n2"), py::arg("r2"))
      .def_static("from_graphs", &CoronaParams::from_graphs)
      .def_readonly("n", &CoronaParams::n)
      .def_readonly("m", &CoronaParams::m)
      .def_readonly("r", &CoronaParams::r)
      .def_readonly("n1", &CoronaParams::n1)
      .def_readonly("r1", &CoronaParams::r1)
      .def_readonly("n2", &CoronaParams::n2)
      .def_readonly("r2", &CoronaParams::r2)
      .def("total", &CoronaParams::total);

  m.def("coronal_chi", &coronal_chi);
  m.def("mu_quartic", [](const CoronaParams& p, double mu) { return mu_quartic<double>(p, mu).coefficients(); });
  m.def("excess_quadratic", [](const CoronaParams& p) { return excess_quadratic<double>(p).coefficients(); });
  m.def("vertex_corona_cubic",
        [](const CoronaParams& p, double mu) { return vertex_corona_cubic<double>(p, mu).coefficients(); });
  m.def("edge_corona_cubic",
        [](const CoronaParams& p, double mu) { return edge_corona_cubic<double>(p, mu).coefficients(); });
  m.def("fixed_family_eta", &fixed_family_eta);
  m.def("real_roots", [](const std::vector<double>& coeffs) { return real_roots(RealPolynomial(coeffs)); });

  py::class_<ClosedFormSpectrum>(m, "ClosedFormSpectrum")
      .def_readonly("params", &ClosedFormSpectrum::params)
      .def("total_multiplicity", &ClosedFormSpectrum::total_multiplicity)
      .def("flatten", [](const ClosedFormSpectrum& c) { return flatten(c).values(); })
      .def("to_json", [](const ClosedFormSpectrum& c) { return closed_form_to_json(c).dump(); });
  m.def("closed_form_spectrum", &closed_form_spectrum, py::arg("g"), py::arg("g1"), py::arg("g2"),
        py::arg("group_tol") = kDefaultTolerance);

  m.def("adjacency_cospectral", &adjacency_cospectral, py::arg("g"), py::arg("h"), py::arg("tol") = kDefaultTolerance);
  m.def("nl_cospectral", &nl_cospectral, py::arg("g"), py::arg("h"), py::arg("tol") = kDefaultTolerance);
  m.def("certify_cospectral",
        [](const Graph& g, const Graph& h, const Graph& g1, const Graph& h1, const Graph& g2, const Graph& h2,
           double tol) { return certificate_to_json(theorem28_build(g, h, g1, h1, g2, h2, tol)).dump(); },
        py::arg("g"), py::arg("h"), py::arg("g1"), py::arg("h1"), py::arg("g2"), py::arg("h2"),
        py::arg("tol") = kDefaultTolerance);

  m.def("spanning_trees", [](const Graph& g) {
    return py::int_(py::str(to_string(spanning_trees_matrix_tree(g))));
  });
  m.def("spanning_trees_spectral", &spanning_trees_spectral);
  m.def("degree_kirchhoff", &degree_kirchhoff);
}
