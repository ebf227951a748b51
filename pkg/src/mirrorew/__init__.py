"""Mirrored entanglement witnesses: catalog of witness/state families,
separability windows by seesaw optimization, and PPT/bound-entanglement
detection tools."""

from .linops import (
    HermitianOperator,
    Operator,
    PauliSum,
    XShapedOperator,
    bell_projector,
    eig_extremes,
    generalized_bell,
    identity,
    is_psd,
    matrix_to_pauli,
    min_eigenvalue,
    operator_from_json,
    operator_to_json,
    partial_transpose,
    pauli_string_matrix,
    pauli_to_matrix,
    tensor,
    weyl,
    xshape_expand,
    xshape_from_operator,
)
from .graphs import Coloring, Graph, ghz_generators, ghz_state, graph_projector, named_graph
from .sepopt import (
    BoundsReport,
    ProductState,
    biseparable_extreme,
    block_positive,
    product_state,
    seesaw,
    separable_bounds,
    spanning_dimension,
    zero_set_search,
)
from .mirror import (
    MirrorPair,
    Window,
    Witness,
    classify_operator,
    compute_mu,
    finer_shift,
    generalized_pair,
    mirror_of,
    mspa,
    povm_cloud,
    spa,
    window,
)
from . import analysis, catalog

__all__ = [
    "HermitianOperator",
    "Operator",
    "PauliSum",
    "XShapedOperator",
    "bell_projector",
    "eig_extremes",
    "generalized_bell",
    "identity",
    "is_psd",
    "matrix_to_pauli",
    "min_eigenvalue",
    "operator_from_json",
    "operator_to_json",
    "partial_transpose",
    "pauli_string_matrix",
    "pauli_to_matrix",
    "tensor",
    "weyl",
    "xshape_expand",
    "xshape_from_operator",
    "Coloring",
    "Graph",
    "ghz_generators",
    "ghz_state",
    "graph_projector",
    "named_graph",
    "BoundsReport",
    "ProductState",
    "biseparable_extreme",
    "block_positive",
    "product_state",
    "seesaw",
    "separable_bounds",
    "spanning_dimension",
    "zero_set_search",
    "MirrorPair",
    "Window",
    "Witness",
    "classify_operator",
    "compute_mu",
    "finer_shift",
    "generalized_pair",
    "mirror_of",
    "mspa",
    "povm_cloud",
    "spa",
    "window",
    "analysis",
    "catalog",
]
