"""Descriptor-driven mapping of XES logs into OCEDR graphs."""
from .convert import ConversionStats, canonical_trace_order, convert, output_prefixes
from .descriptor import (
    AttributeRule,
    Descriptor,
    DescriptorError,
    EventTypeRule,
    ObjectGroup,
    ObjectRelation,
    parse_descriptor,
)
from .identity import canonical_identity, mint_event_iri, mint_object_iri

__all__ = [
    "AttributeRule",
    "ConversionStats",
    "Descriptor",
    "DescriptorError",
    "EventTypeRule",
    "ObjectGroup",
    "ObjectRelation",
    "canonical_identity",
    "canonical_trace_order",
    "convert",
    "mint_event_iri",
    "mint_object_iri",
    "output_prefixes",
    "parse_descriptor",
]
