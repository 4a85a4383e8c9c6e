"""OCEDO vocabulary, OCEDD extension handling and RDFS-lite entailment."""
from .extension import (
    ClassInfo,
    ConformanceReport,
    ExtensionModel,
    Finding,
    PropertyInfo,
    check_conformance,
    load_ocedd,
)
from .ocedo import bpic2013_descriptor_text, bpic2013_text, builtin_ocedo, ocedo_prefixes, ocedo_text
from .reasoner import rdfs_closure
from .terms import AUX, AUX_NS, CORE_NS, EXT_NS, OCED, OWL, RDF, RDFS, RES_NS, ROOTS, XSD

__all__ = [
    "AUX",
    "AUX_NS",
    "CORE_NS",
    "ClassInfo",
    "ConformanceReport",
    "EXT_NS",
    "ExtensionModel",
    "Finding",
    "OCED",
    "OWL",
    "PropertyInfo",
    "RDF",
    "RDFS",
    "RES_NS",
    "ROOTS",
    "XSD",
    "bpic2013_descriptor_text",
    "bpic2013_text",
    "builtin_ocedo",
    "check_conformance",
    "load_ocedd",
    "ocedo_prefixes",
    "ocedo_text",
    "rdfs_closure",
]
