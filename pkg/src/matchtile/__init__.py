"""Matching complexes of polygonal line tilings: construction, exact homology,
reduction rules and recursive wedge-of-spheres predictions."""

from .complexes import (
    BudgetExceeded,
    ChainComplex,
    SimplicialComplex,
    chain_complex,
    f_vector,
    independence_complex,
    matching_complex,
)
from .graphs import (
    Graph,
    VertexLabel,
    G_graph,
    H_graph,
    connected_components,
    cycle_graph,
    delete_closed_neighborhood,
    induced_subgraph,
    line_graph,
    path_graph,
    polygon_line_tiling,
)
from .homology import HomologyProfile, SmithForm, homology_of, reduced_homology, smith_normal_form
from .theory import EMPTY, POINT, HomotopyType, predict_G, predict_H

__version__ = "0.1.0"
