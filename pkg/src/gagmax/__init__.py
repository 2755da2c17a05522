"""Spheres, antipodes and spherical maximal operators on finite graphs and their Cartesian powers."""

from gagmax.bounds import BoundReport, bound_report, indicator_ratio, l1_norm_exact
from gagmax.canon import are_isomorphic, canonical_form
from gagmax.enumeration import EnumFilter, enumerate_connected
from gagmax.graph import Graph, emit_graph6, parse_edge_list, parse_graph6
from gagmax.kernels import BACKEND
from gagmax.maximal import (
    VertexFunction,
    ball_maximal_function,
    maximal_function,
    power_maximal_symmetric,
)
from gagmax.metric import Classification, classify, global_antipode, is_gag
from gagmax.normsearch import SearchConfig, estimate_norm
from gagmax.product import PowerGraph, cartesian_product, verify_antipode_product

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "Classification",
    "EnumFilter",
    "Graph",
    "PowerGraph",
    "SearchConfig",
    "VertexFunction",
    "are_isomorphic",
    "ball_maximal_function",
    "bound_report",
    "canonical_form",
    "cartesian_product",
    "classify",
    "emit_graph6",
    "enumerate_connected",
    "estimate_norm",
    "global_antipode",
    "indicator_ratio",
    "is_gag",
    "l1_norm_exact",
    "maximal_function",
    "parse_edge_list",
    "parse_graph6",
    "power_maximal_symmetric",
    "verify_antipode_product",
]
