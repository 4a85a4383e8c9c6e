"""The embedded OCEDO ontology and the bundled BPIC2013 extension."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..rdf import Graph, PrefixMap, parse_turtle


def data_text(name: str) -> str:
    return resources.files("oced_forge").joinpath("data", name).read_text(encoding="utf-8")


def ocedo_text() -> str:
    """Byte-stable Turtle source of the core + auxiliary ontology."""
    return data_text("ocedo.ttl")


def bpic2013_text() -> str:
    return data_text("bpic2013.ttl")


def bpic2013_descriptor_text() -> str:
    return data_text("bpic2013_descriptor.csv")


@lru_cache(maxsize=1)
def _builtin() -> tuple[Graph, PrefixMap]:
    return parse_turtle(ocedo_text())


def builtin_ocedo() -> tuple[Graph, PrefixMap]:
    """Fresh copies of the OCEDO graph and its prefixes (rdf, rdfs, owl, xsd, oced, aux)."""
    g, pm = _builtin()
    return g.copy(), pm.copy()


def ocedo_prefixes() -> PrefixMap:
    return _builtin()[1].copy()

