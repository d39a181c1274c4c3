"""Exact graph polynomials, their recurrences, and small-graph experiments."""

from .canon import automorphism_count, canonical, canonical_graph, labeled_class_size
from .enumeration import census, enumerate_multigraphs, enumerate_unlabeled, sample_gnp
from .errors import (
    Graph6Error,
    GraphPolyError,
    IllDefinedSpecError,
    InputError,
    LoopEdgeError,
    PropertySyntaxError,
    SizeCapError,
)
from .graph import (
    Multigraph,
    complete_graph,
    components,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    extract_edge,
    path_graph,
    star_graph,
)
from .graph6 import encode_graph6, parse_graph6
from .invariants import (
    chromatic,
    clique_poly,
    count_induced_property,
    domination_poly,
    generating_poly,
    get_invariant,
    harary,
    independence_poly,
    matching_defect,
    matching_gen,
    potts,
    subgraph_component_poly,
    tutte,
)
from .poly import MultiPoly, parse_poly, substitute
from .properties import parse_property
from .shape import kurtz_alpha, real_rooted, shape_analyze

__version__ = "0.1.0"
