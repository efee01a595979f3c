"""Paired threshold graph recognition with weight and broom certificates."""

from ._ptg import (
    ContractError,
    Graph,
    ParseError,
    benchmark_instance,
    check_broom,
    check_weight_certificate,
    clique_path,
    fixture,
    fixture_names,
    nested_family,
    parse_graph,
    pt_from_weights,
    recognize,
    render_graph,
)

__all__ = [
    "ContractError",
    "Graph",
    "ParseError",
    "benchmark_instance",
    "check_broom",
    "check_weight_certificate",
    "clique_path",
    "fixture",
    "fixture_names",
    "nested_family",
    "parse_graph",
    "pt_from_weights",
    "recognize",
    "render_graph",
]
