"""Schur rings, Cayley schemes and Cayley graph isomorphism over small abelian groups."""

from ._srings import (
    AbelianGroup,
    SRing,
    SringsError,
    aut_order,
    classify,
    closure,
    enumerate_srings,
    graph_iso,
    parse_sring,
    scheme,
    separability_report,
    table_order,
    table_sring,
)

__all__ = [
    "AbelianGroup",
    "SRing",
    "SringsError",
    "aut_order",
    "classify",
    "closure",
    "enumerate_srings",
    "graph_iso",
    "parse_sring",
    "scheme",
    "separability_report",
    "table_order",
    "table_sring",
]
