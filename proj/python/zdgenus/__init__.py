"""Ideal-based zero-divisor graphs of finite commutative rings."""

import json

from ._core import (
    Error,
    Graph,
    Ideal,
    Ring,
    catalog_names,
    genus,
    genus_biclique,
    genus_complete,
    graph_facts,
    ideal,
    ideal_graph,
    is_planar,
    ring,
    ring_from_json,
    synthesized,
    theorems,
    zero_divisor_graph,
)
from ._core import verify as _verify


def verify(theorem, budget=100_000_000):
    """Reports for one result as dictionaries."""
    return [json.loads(r) for r in _verify(theorem, budget)]


__all__ = [
    "Error",
    "Graph",
    "Ideal",
    "Ring",
    "catalog_names",
    "genus",
    "genus_biclique",
    "genus_complete",
    "graph_facts",
    "ideal",
    "ideal_graph",
    "is_planar",
    "ring",
    "ring_from_json",
    "synthesized",
    "theorems",
    "verify",
    "zero_divisor_graph",
]
