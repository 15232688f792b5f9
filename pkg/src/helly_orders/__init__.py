"""Agreeing linear orders of marked uniform hypergraphs."""

from .core import (
    AgreeVerdict,
    LinearOrder,
    MarkedEdge,
    MarkedHypergraph,
    MarkVariant,
    build_clique,
    build_hypergraph,
    check_order,
    dual,
)
from .oracle import OracleResult, decide, enumerate_orders
from .solvers import solve

__all__ = [
    "AgreeVerdict",
    "LinearOrder",
    "MarkedEdge",
    "MarkedHypergraph",
    "MarkVariant",
    "OracleResult",
    "build_clique",
    "build_hypergraph",
    "check_order",
    "decide",
    "dual",
    "enumerate_orders",
    "solve",
]
