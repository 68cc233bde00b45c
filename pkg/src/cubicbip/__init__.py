"""Bipartization of tripartite cubic graphs by deleting an independent set."""

from .core import CubicGraph, bipartition_of, classify, decycling_bounds, girth, parse_graph6, to_graph6
from .decycle import bipartize, break_cycle, solve
from .gen import GenSpec, named, random_cubic
from .indset import greedy_mis, max_is, shrink_to

__all__ = [
    "CubicGraph",
    "GenSpec",
    "bipartition_of",
    "bipartize",
    "break_cycle",
    "classify",
    "decycling_bounds",
    "girth",
    "greedy_mis",
    "max_is",
    "named",
    "parse_graph6",
    "random_cubic",
    "shrink_to",
    "solve",
    "to_graph6",
]
