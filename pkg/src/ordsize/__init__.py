"""Exact analysis of triple systems forbidding induced order-size pairs.

A library and command line for building the extremal constructions,
checking freeness and structural characterizations, solving exact clique
and coclique problems, and exhaustively computing the minimum homogeneous
number over all free hypergraphs of a given small order.
"""

from .core import (
    CapabilityError,
    ForbiddenFamily,
    Graph2,
    Hypergraph3,
    InputError,
    OrderSizePair,
    canonical_key,
    complement,
    complement_family,
    find_q_violation,
    find_q_violation_graph,
    induced_edge_count,
    is_q_free,
    is_q_free_graph,
    link_graph,
)
from .solver import (
    Budget,
    ExtremalRecord,
    HomogeneousResult,
    SetSystem,
    alpha2,
    clique_fill,
    exact_min_homogeneous,
    g_value,
    homogeneous,
    max_clique,
    max_coclique,
    max_codegree,
    maximal_clique_system,
    qfree_classes,
)

__version__ = "0.1.0"
