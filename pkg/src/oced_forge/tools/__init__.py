"""Querying, statistics and validation over OCEDR graphs."""
from .query import TriplePattern, Variable, bgp_query, parse_patterns, pattern_variables, render_tsv
from .stats import GraphStats, stats
from .validate import ValidationFinding, ValidationReport, validate

__all__ = [
    "GraphStats",
    "TriplePattern",
    "ValidationFinding",
    "ValidationReport",
    "Variable",
    "bgp_query",
    "parse_patterns",
    "pattern_variables",
    "render_tsv",
    "stats",
    "validate",
]
