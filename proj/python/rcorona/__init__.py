"""R-graph corona constructions and their normalized Laplacian spectra."""

import json

from ._core import (
    ClosedFormSpectrum,
    CoronaParams,
    Error,
    Graph,
    GraphError,
    HypothesisError,
    InputError,
    NumericError,
    PoleError,
    adjacency_cospectral,
    adjacency_matrix,
    adjacency_spectrum,
    closed_form_spectrum,
    compare_spectra,
    coronal_chi,
    degree_kirchhoff,
    disjoint_union,
    edge_corona_cubic,
    excess_quadratic,
    fixed_family_eta,
    generate,
    incidence_matrix,
    mu_quartic,
    nl_cospectral,
    nl_regular,
    nl_spectrum,
    normalized_laplacian,
    numeric_spectrum,
    parse_graph,
    real_roots,
    spanning_trees,
    spanning_trees_spectral,
    summarize,
    vertex_corona_cubic,
)
from . import _core

__version__ = "0.1.0"


def _with_layout(result):
    graph, layout = result
    return graph, json.loads(layout)


def r_graph(g):
    return _with_layout(_core.r_graph(g))


def double_corona(g, g1, g2, allow_disconnected=False):
    return _with_layout(_core.double_corona(g, g1, g2, allow_disconnected))


def r_vertex_corona(g, g1):
    return _with_layout(_core.r_vertex_corona(g, g1))


def r_edge_corona(g, g2):
    return _with_layout(_core.r_edge_corona(g, g2))


def cospectral_certificate(g, h, g1, h1, g2, h2, tol=1e-8):
    """Build both coronas and return the certificate as a dict."""
    return json.loads(_core.certify_cospectral(g, h, g1, h1, g2, h2, tol))


def null_graph():
    return Graph()
