"""Content-addressed resource identifiers.

Object IRIs hash the object class CURIE plus the ordered identity pairs;
event IRIs hash the source name and the (trace, event) position. Fields are
joined with U+001F, which does not occur in XES values in practice.
"""
from __future__ import annotations

import hashlib
from typing import TYPE_CHECKING, Sequence, Union

from ..rdf import IRI

if TYPE_CHECKING:
    from .descriptor import Descriptor

SEP = "\x1f"


def _namespace(d: Union[str, Descriptor]) -> str:
    return d if isinstance(d, str) else d.resource_namespace


def canonical_identity(object_class: str, pairs: Sequence[tuple[str, str]]) -> str:
    if not pairs:
        raise ValueError("an object identity needs at least one (key, value) pair")
    return SEP.join([object_class, *(f"{k}={v}" for k, v in pairs)])


def _sha1(text: str) -> str:
    return hashlib.sha1(text.encode("utf-8")).hexdigest()


def mint_object_iri(d: Union[str, Descriptor], object_class: str, pairs: Sequence[tuple[str, str]]) -> IRI:
    """``d`` is a Descriptor or a resource namespace string."""
    return IRI(f"{_namespace(d)}object-o_{_sha1(canonical_identity(object_class, pairs))}")


def mint_event_iri(d: Union[str, Descriptor], source_name: str, trace_index: int, event_index: int) -> IRI:
    if trace_index < 0 or event_index < 0:
        raise ValueError("trace and event indexes must be non-negative")
    return IRI(f"{_namespace(d)}event-e_{_sha1(f'{source_name}{SEP}{trace_index}{SEP}{event_index}')}")
