"""RDF terms and triples.

Every term carries its N-Triples rendering (``nt``), computed once at
construction. Ordering anywhere in the package is defined on that rendering.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from typing import NamedTuple, Optional, Union

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

XSD_STRING = XSD_NS + "string"
XSD_DATETIME = XSD_NS + "dateTime"
RDF_LANGSTRING = RDF_NS + "langString"

# characters excluded from IRIREF; U+0000-U+0020 covers space and controls
_IRI_FORBIDDEN = set('<>"{}|^`\\') | {chr(c) for c in range(0x21)}
_BNODE_LABEL = re.compile(r"[A-Za-z0-9_]+\Z")
_LANG_TAG = re.compile(r"[A-Za-z]+(-[A-Za-z0-9]+)*\Z")
_DATETIME = re.compile(
    r"(-?\d{4,})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?"
    r"(Z|[+-]\d{2}:\d{2})\Z"
)


class TermError(ValueError):
    """A term or triple violates the RDF data model."""


def parse_datetime(lexical: str) -> datetime:
    """Parse an xsd:dateTime lexical form that carries a timezone offset.

    The returned datetime keeps the original offset. Raises ``ValueError``
    when the form is malformed, lacks an offset, or names an impossible date.
    """
    m = _DATETIME.match(lexical)
    if m is None:
        raise ValueError(f"not an xsd:dateTime with offset: {lexical!r}")
    year, month, day, hour, minute, second = (int(g) for g in m.groups()[:6])
    frac, tz = m.group(7), m.group(8)
    micro = int((frac[1:] + "000000")[:6]) if frac else 0
    if tz == "Z":
        tzinfo = timezone.utc
    else:
        sign = -1 if tz[0] == "-" else 1
        oh, om = int(tz[1:3]), int(tz[4:6])
        if oh > 14 or om > 59:
            raise ValueError(f"offset out of range: {lexical!r}")
        tzinfo = timezone(sign * timedelta(hours=oh, minutes=om))
    extra_day = False
    if hour == 24:
        # 24:00:00 is allowed and denotes the start of the next day
        if minute or second or micro:
            raise ValueError(f"invalid time: {lexical!r}")
        hour, extra_day = 0, True
    dt = datetime(year, month, day, hour, minute, second, micro, tzinfo=tzinfo)
    return dt + timedelta(days=1) if extra_day else dt


def _escape_nt(text: str) -> str:
    out = []
    for ch in text:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True, slots=True)
class IRI:
    value: str
    nt: str = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, str) or not v:
            raise TermError("IRI must be a non-empty string")
        if ":" not in v:
            raise TermError(f"IRI is not absolute (no scheme): {v!r}")
        bad = _IRI_FORBIDDEN.intersection(v)
        if bad:
            raise TermError(f"IRI contains forbidden character(s) {sorted(bad)}: {v!r}")
        object.__setattr__(self, "nt", f"<{v}>")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class BNode:
    label: str
    nt: str = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not _BNODE_LABEL.match(self.label):
            raise TermError(f"invalid blank node label: {self.label!r}")
        object.__setattr__(self, "nt", f"_:{self.label}")

    def __str__(self) -> str:
        return self.nt


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: IRI = IRI(XSD_STRING)
    language: Optional[str] = None
    nt: str = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.lexical, str):
            raise TermError("literal lexical form must be a string")
        if self.language is not None:
            if not _LANG_TAG.match(self.language):
                raise TermError(f"invalid language tag: {self.language!r}")
            if self.datatype.value == XSD_STRING:
                object.__setattr__(self, "datatype", IRI(RDF_LANGSTRING))
            elif self.datatype.value != RDF_LANGSTRING:
                raise TermError("a language-tagged literal must have datatype rdf:langString")
        elif self.datatype.value == RDF_LANGSTRING:
            raise TermError("rdf:langString literal requires a language tag")
        if self.datatype.value == XSD_DATETIME:
            try:
                parse_datetime(self.lexical)
            except ValueError as exc:
                raise TermError(str(exc)) from None
        body = f'"{_escape_nt(self.lexical)}"'
        if self.language is not None:
            nt = f"{body}@{self.language}"
        elif self.datatype.value == XSD_STRING:
            nt = body
        else:
            nt = f"{body}^^{self.datatype.nt}"
        object.__setattr__(self, "nt", nt)

    def __str__(self) -> str:
        return self.lexical


Subject = Union[IRI, BNode]
Term = Union[IRI, BNode, Literal]


class Triple(NamedTuple):
    s: Subject
    p: IRI
    o: Term

    @property
    def nt(self) -> str:
        return f"{self.s.nt} {self.p.nt} {self.o.nt} ."


def check_triple(t: Triple) -> Triple:
    """Return ``t`` as a ``Triple`` or raise ``TermError`` naming the defect."""
    if len(t) != 3:
        raise TermError(f"a triple has exactly three terms, got {len(t)}")
    s, p, o = t
    if isinstance(s, Literal):
        raise TermError(f"literal in subject position: {s.nt}")
    if not isinstance(s, (IRI, BNode)):
        raise TermError(f"subject is not an RDF term: {s!r}")
    if not isinstance(p, IRI):
        raise TermError(f"predicate must be an IRI, got {getattr(p, 'nt', repr(p))}")
    if not isinstance(o, (IRI, BNode, Literal)):
        raise TermError(f"object is not an RDF term: {o!r}")
    return t if type(t) is Triple else Triple(s, p, o)


def term_key(term: Term) -> str:
    return term.nt


def triple_key(t: Triple) -> str:
    return f"{t.s.nt} {t.p.nt} {t.o.nt} ."
