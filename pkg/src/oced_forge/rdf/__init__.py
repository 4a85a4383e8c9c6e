"""RDF data model, indexed graph, prefixes and Turtle I/O."""
from .graph import Graph, add_triple, match
from .namespace import PrefixMap, UnknownPrefixError, expand_curie, standard_prefixes
from .terms import (
    IRI,
    OWL_NS,
    RDF_NS,
    RDFS_NS,
    XSD_NS,
    BNode,
    Literal,
    Term,
    TermError,
    Triple,
    parse_datetime,
)
from .turtle import TurtleError, parse_turtle, render_term, serialize_turtle

__all__ = [
    "BNode",
    "Graph",
    "IRI",
    "Literal",
    "OWL_NS",
    "PrefixMap",
    "RDFS_NS",
    "RDF_NS",
    "Term",
    "TermError",
    "Triple",
    "TurtleError",
    "UnknownPrefixError",
    "XSD_NS",
    "add_triple",
    "expand_curie",
    "match",
    "parse_datetime",
    "parse_turtle",
    "render_term",
    "serialize_turtle",
    "standard_prefixes",
]
