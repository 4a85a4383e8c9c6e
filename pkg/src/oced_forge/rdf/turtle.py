"""Turtle reader and writer for the subset used by OCED documents.

Accepted: ``@prefix``/``PREFIX``, ``<iri>``, prefixed names, ``a``, ``;`` and
``,`` lists, quoted literals (short and long forms) with ``^^`` or ``@``,
numeric and boolean shorthand, ``_:label`` blank nodes, ``#`` comments.
Collections and ``[ ]`` blank-node property lists are rejected.
"""
from __future__ import annotations

import re
from typing import Optional

from .graph import Graph
from .namespace import PrefixMap
from .terms import (
    IRI,
    RDF_NS,
    XSD_NS,
    BNode,
    Literal,
    Term,
    TermError,
    Triple,
)

RDF_TYPE = IRI(RDF_NS + "type")
_XSD_INTEGER = IRI(XSD_NS + "integer")
_XSD_DECIMAL = IRI(XSD_NS + "decimal")
_XSD_DOUBLE = IRI(XSD_NS + "double")
_XSD_BOOLEAN = IRI(XSD_NS + "boolean")

_WS = " \t\r\n"
_NUMBER = re.compile(
    r"[+-]?(?:"
    r"(?P<double>(?:\d+\.\d*|\.\d+|\d+)[eE][+-]?\d+)"
    r"|(?P<decimal>\d*\.\d+)"
    r"|(?P<integer>\d+))"
)
_LANG = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
_PREFIX_NAME = re.compile(r"(?:[A-Za-z](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?\Z")
_BNODE = re.compile(r"[A-Za-z0-9_]+")
_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_LOCAL_ESCAPABLE = set("_~.-!$&'()*+,;=/?#@%")


class TurtleError(ValueError):
    """Diagnostic raised for malformed or unsupported Turtle input.

    ``kind`` is one of ``syntax``, ``prefix`` or ``unsupported``.
    """

    def __init__(self, kind: str, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column


def _is_name_char(ch: str) -> bool:
    return ch.isalnum() or ch in "_-.:%\\" or ch == "·"


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.graph = Graph()
        self.prefixes = PrefixMap()

    # -- diagnostics ------------------------------------------------------

    def _location(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: Optional[int] = None, kind: str = "syntax") -> TurtleError:
        line, col = self._location(self.pos if pos is None else pos)
        return TurtleError(kind, message, line, col)

    # -- low level ----------------------------------------------------------

    def skip_ws(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch in _WS:
                self.pos += 1
            elif ch == "#":
                end = text.find("\n", self.pos)
                self.pos = n if end < 0 else end + 1
            else:
                break

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def read_word(self) -> str:
        start, text, n = self.pos, self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch == "\\" and self.pos + 1 < n:
                self.pos += 2
            elif _is_name_char(ch):
                self.pos += 1
            else:
                break
        # a trailing '.' terminates the statement, it is not part of the name
        while self.pos > start and text[self.pos - 1] == "." and not (
            self.pos - 2 >= start and text[self.pos - 2] == "\\"
        ):
            self.pos -= 1
        return text[start:self.pos]

    # -- grammar ------------------------------------------------------------

    def parse(self) -> tuple[Graph, PrefixMap]:
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                break
            self.statement()
        return self.graph, self.prefixes

    def statement(self) -> None:
        ch = self.peek()
        start = self.pos
        if ch == "@":
            self.pos += 1
            word = self.read_word()
            if word == "prefix":
                self.prefix_body()
                self.expect(".")
                return
            if word == "base":
                raise self.error("@base directive is not supported", start, "unsupported")
            raise self.error(f"unknown directive '@{word}'", start)
        if ch.isalpha():
            save = self.pos
            word = self.read_word()
            if word.upper() == "PREFIX":
                self.prefix_body()
                return
            if word.upper() == "BASE":
                raise self.error("BASE directive is not supported", start, "unsupported")
            self.pos = save
        subject = self.subject()
        self.predicate_object_list(subject)
        self.expect(".")

    def prefix_body(self) -> None:
        self.skip_ws()
        start = self.pos
        word = self.read_word()
        if not word.endswith(":") or not _PREFIX_NAME.match(word[:-1]):
            raise self.error(f"malformed prefix name {word!r}", start)
        self.skip_ws()
        iri = self.iriref()
        self.prefixes.bind(word[:-1], iri)

    def subject(self):
        self.skip_ws()
        ch = self.peek()
        if ch == "<":
            return self.iriref()
        if ch == "_":
            return self.bnode()
        if ch == "(":
            raise self.error("collections '( )' are not supported", kind="unsupported")
        if ch == "[":
            raise self.error("blank node property lists '[ ]' are not supported", kind="unsupported")
        if ch == '"' or ch == "'":
            raise self.error("a literal cannot be a subject")
        if ch == "":
            raise self.error("unexpected end of input, expected a subject")
        return self.prefixed_name()

    def predicate_object_list(self, subject) -> None:
        while True:
            predicate = self.verb()
            self.object_list(subject, predicate)
            self.skip_ws()
            if self.peek() != ";":
                return
            while self.peek() == ";":
                self.pos += 1
                self.skip_ws()
            if self.peek() in (".", ""):
                return

    def verb(self) -> IRI:
        self.skip_ws()
        ch = self.peek()
        if ch == "<":
            return self.iriref()
        if ch == "a":
            nxt = self.text[self.pos + 1:self.pos + 2]
            if nxt == "" or nxt in _WS or nxt in "<\"'_[(#":
                self.pos += 1
                return RDF_TYPE
        if ch in ("", "."):
            raise self.error("expected a predicate")
        if ch in "[(\"'_":
            raise self.error("predicate must be an IRI")
        return self.prefixed_name()

    def object_list(self, subject, predicate: IRI) -> None:
        while True:
            obj = self.object()
            try:
                self.graph.add(Triple(subject, predicate, obj))
            except TermError as exc:
                raise self.error(str(exc)) from None
            self.skip_ws()
            if self.peek() != ",":
                return
            self.pos += 1

    def object(self) -> Term:
        self.skip_ws()
        ch = self.peek()
        if ch == "":
            raise self.error("unexpected end of input, expected an object")
        if ch == "<":
            return self.iriref()
        if ch == "_":
            return self.bnode()
        if ch in "\"'":
            return self.literal()
        if ch == "(":
            raise self.error("collections '( )' are not supported", kind="unsupported")
        if ch == "[":
            raise self.error("blank node property lists '[ ]' are not supported", kind="unsupported")
        if ch and (ch.isdigit() or ch in "+-."):
            m = _NUMBER.match(self.text, self.pos)
            if m:
                self.pos = m.end()
                if m.group("double"):
                    dt = _XSD_DOUBLE
                elif m.group("decimal"):
                    dt = _XSD_DECIMAL
                else:
                    dt = _XSD_INTEGER
                return Literal(m.group(0), dt)
            raise self.error(f"unexpected character {ch!r}")
        save = self.pos
        word = self.read_word()
        if word in ("true", "false"):
            return Literal(word, _XSD_BOOLEAN)
        self.pos = save
        return self.prefixed_name()

    def iriref(self) -> IRI:
        start = self.pos
        if self.peek() != "<":
            raise self.error("expected '<'")
        end_pos = self.pos + 1
        out = []
        text, n = self.text, len(self.text)
        while True:
            if end_pos >= n:
                raise self.error("unterminated IRI", start)
            ch = text[end_pos]
            if ch == ">":
                break
            if ch == "\\":
                ch, end_pos = self.uchar(end_pos)
                out.append(ch)
                continue
            if ch in ' \t\r\n"<{}|^`':
                raise self.error(f"illegal character {ch!r} in IRI", end_pos)
            out.append(ch)
            end_pos += 1
        self.pos = end_pos + 1
        value = "".join(out)
        if ":" not in value:
            raise self.error(f"relative IRI <{value}> is not supported", start, "unsupported")
        try:
            return IRI(value)
        except TermError as exc:
            raise self.error(str(exc), start) from None

    def uchar(self, at: int) -> tuple[str, int]:
        text = self.text
        kind = text[at + 1:at + 2]
        width = {"u": 4, "U": 8}.get(kind)
        if width is None:
            raise self.error(f"invalid escape '\\{kind}'", at)
        digits = text[at + 2:at + 2 + width]
        if len(digits) != width or not all(c in "0123456789abcdefABCDEF" for c in digits):
            raise self.error("malformed unicode escape", at)
        code = int(digits, 16)
        if code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
            raise self.error("unicode escape outside the scalar value range", at)
        return chr(code), at + 2 + width

    def bnode(self) -> BNode:
        start = self.pos
        if self.text[self.pos:self.pos + 2] != "_:":
            raise self.error("expected '_:'")
        self.pos += 2
        m = _BNODE.match(self.text, self.pos)
        if not m:
            raise self.error("empty blank node label", start)
        self.pos = m.end()
        nxt = self.peek()
        if nxt and (nxt.isalnum() or nxt in "-·") or (
            nxt == "." and self.text[self.pos + 1:self.pos + 2].isalnum()
        ):
            raise self.error("blank node labels are limited to [A-Za-z0-9_]", start, "unsupported")
        return BNode(m.group(0))

    def prefixed_name(self) -> IRI:
        start = self.pos
        word = self.read_word()
        if not word:
            ch = self.peek() or "end of input"
            raise self.error(f"unexpected {ch!r}")
        if ":" not in word:
            raise self.error(f"expected a prefixed name, found {word!r}", start)
        prefix, raw_local = word.split(":", 1)
        if not _PREFIX_NAME.match(prefix):
            raise self.error(f"malformed prefix {prefix!r}", start)
        local = []
        i = 0
        while i < len(raw_local):
            ch = raw_local[i]
            if ch == "\\":
                nxt = raw_local[i + 1:i + 2]
                if nxt not in _LOCAL_ESCAPABLE:
                    raise self.error(f"invalid local name escape '\\{nxt}'", start + len(prefix) + 1 + i)
                local.append(nxt)
                i += 2
                continue
            if ch == "%":
                hx = raw_local[i + 1:i + 3]
                if len(hx) != 2 or not all(c in "0123456789abcdefABCDEF" for c in hx):
                    raise self.error("malformed percent escape in local name", start + len(prefix) + 1 + i)
            local.append(ch)
            i += 1
        if prefix not in self.prefixes:
            raise self.error(f"unknown prefix '{prefix}:'", start, "prefix")
        try:
            return IRI(self.prefixes[prefix] + "".join(local))
        except TermError as exc:
            raise self.error(str(exc), start) from None

    def literal(self) -> Literal:
        start = self.pos
        lexical = self.string()
        self.skip_ws()
        ch = self.peek()
        try:
            if ch == "@":
                self.pos += 1
                m = _LANG.match(self.text, self.pos)
                if not m:
                    raise self.error("malformed language tag")
                self.pos = m.end()
                return Literal(lexical, language=m.group(0))
            if self.text.startswith("^^", self.pos):
                self.pos += 2
                dt = self.iriref() if self.peek() == "<" else self.prefixed_name()
                return Literal(lexical, dt)
            return Literal(lexical)
        except TermError as exc:
            raise self.error(str(exc), start) from None

    def string(self) -> str:
        text, n = self.text, len(self.text)
        start = self.pos
        q = text[self.pos]
        long_form = text.startswith(q * 3, self.pos)
        end_pos = self.pos + (3 if long_form else 1)
        out = []
        while True:
            if end_pos >= n:
                raise self.error("unterminated string literal", start)
            ch = text[end_pos]
            if ch == "\\":
                nxt = text[end_pos + 1:end_pos + 2]
                if nxt in _ECHAR:
                    out.append(_ECHAR[nxt])
                    end_pos += 2
                elif nxt in ("u", "U"):
                    c, end_pos = self.uchar(end_pos)
                    out.append(c)
                else:
                    raise self.error(f"invalid escape '\\{nxt}'", end_pos)
                continue
            if long_form:
                if text.startswith(q * 3, end_pos):
                    # up to two extra quotes may close the string content
                    extra = 0
                    while extra < 2 and text.startswith(q * 4, end_pos + extra):
                        extra += 1
                    out.append(q * extra)
                    end_pos += 3 + extra
                    break
            elif ch == q:
                end_pos += 1
                break
            elif ch in "\r\n":
                raise self.error("newline in short string literal", end_pos)
            out.append(ch)
            end_pos += 1
        self.pos = end_pos
        return "".join(out)


def parse_turtle(text: str) -> tuple[Graph, PrefixMap]:
    """Parse a Turtle document into a graph and the prefixes it declared."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if text.startswith("﻿"):
        text = text[1:]
    return _Parser(text).parse()


# -- writer -----------------------------------------------------------------


def _escape_string(text: str) -> str:
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


def _render_iri(iri: IRI, pm: PrefixMap) -> str:
    curie = pm.compress(iri)
    return curie if curie is not None else iri.nt


def render_term(term: Term, pm: PrefixMap) -> str:
    """Turtle rendering of a single term, compressed under ``pm`` when possible."""
    if isinstance(term, IRI):
        return _render_iri(term, pm)
    if isinstance(term, BNode):
        return term.nt
    body = f'"{_escape_string(term.lexical)}"'
    if term.language is not None:
        return f"{body}@{term.language}"
    if term.datatype.value == XSD_NS + "string":
        return body
    return f"{body}^^{_render_iri(term.datatype, pm)}"


def serialize_turtle(g: Graph, pm: PrefixMap) -> str:
    """Deterministic Turtle for ``g``.

    Output depends only on the triple set and the prefix order of ``pm``.
    """
    lines = [f"@prefix {prefix}: <{ns}> ." for prefix, ns in pm.items()]
    by_subject: dict = {}
    for t in g:
        by_subject.setdefault(t.s, {}).setdefault(t.p, []).append(t.o)
    for subject in sorted(by_subject, key=lambda s: s.nt):
        preds = by_subject[subject]
        order = sorted(preds, key=lambda p: (p != RDF_TYPE, p.nt))
        parts = []
        for p in order:
            verb = "a" if p == RDF_TYPE else _render_iri(p, pm)
            objs = ", ".join(render_term(o, pm) for o in sorted(preds[p], key=lambda o: o.nt))
            parts.append(f"{verb} {objs}")
        if lines:
            lines.append("")
        head = render_term(subject, pm)
        lines.append(f"{head} " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + "\n" if lines else ""
