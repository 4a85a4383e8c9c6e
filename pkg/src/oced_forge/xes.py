"""Streaming reader for IEEE 1849 XES event logs."""
from __future__ import annotations

import io
import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import IO, Any, Optional, Union
from xml.parsers import expat
from xml.sax.saxutils import quoteattr

from .rdf.terms import parse_datetime

log = logging.getLogger(__name__)

ATTRIBUTE_TYPES = ("string", "date", "int", "float", "boolean", "id", "list", "container")
# collection attributes hold children and need no value attribute
COLLECTION_TYPES = ("list", "container")
_INT64 = (-(2**63), 2**63 - 1)
_CHUNK = 1 << 16


class XesError(ValueError):
    def __init__(self, message: str, source: str = "", line: Optional[int] = None,
                 column: Optional[int] = None) -> None:
        loc = source
        if line is not None:
            loc = f"{source}:{line}:{column}" if column is not None else f"{source}:{line}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.message = message
        self.source = source
        self.line = line
        self.column = column


@dataclass(frozen=True)
class XesWarning:
    message: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


@dataclass(frozen=True)
class XesAttribute:
    key: str
    type: str
    lexical: str
    value: Any
    children: tuple["XesAttribute", ...] = ()


@dataclass(frozen=True)
class XesEvent:
    attributes: tuple[XesAttribute, ...]

    def get(self, key: str) -> Optional[XesAttribute]:
        for a in self.attributes:
            if a.key == key:
                return a
        return None

    def keys(self) -> list[str]:
        return [a.key for a in self.attributes]


@dataclass(frozen=True)
class XesTrace:
    attributes: tuple[XesAttribute, ...]
    events: tuple[XesEvent, ...]

    def get(self, key: str) -> Optional[XesAttribute]:
        for a in self.attributes:
            if a.key == key:
                return a
        return None


@dataclass(frozen=True)
class XesGlobal:
    scope: str
    attributes: tuple[XesAttribute, ...]


@dataclass(frozen=True)
class XesLog:
    traces: tuple[XesTrace, ...]
    source_name: str = ""
    attributes: tuple[XesAttribute, ...] = ()
    extensions: tuple[dict[str, str], ...] = ()
    globals: tuple[XesGlobal, ...] = ()
    classifiers: tuple[dict[str, str], ...] = ()
    warnings: tuple[XesWarning, ...] = field(default=(), compare=False)

    @property
    def event_count(self) -> int:
        return sum(len(t.events) for t in self.traces)


def _convert(kind: str, lexical: str) -> Any:
    if kind in ("string", "id") or kind in COLLECTION_TYPES:
        return lexical
    if kind == "date":
        return parse_xes_date(lexical)
    if kind == "int":
        value = int(lexical.strip())
        if not _INT64[0] <= value <= _INT64[1]:
            raise ValueError(f"integer out of 64-bit range: {lexical}")
        return value
    if kind == "float":
        return float(lexical)
    if kind == "boolean":
        low = lexical.strip().lower()
        if low not in ("true", "false"):
            raise ValueError(f"not a boolean: {lexical!r}")
        return low == "true"
    raise ValueError(kind)


def parse_xes_date(lexical: str) -> datetime:
    """XES dates with an offset keep it; dates without one come back naive."""
    try:
        return parse_datetime(lexical)
    except ValueError:
        return datetime.fromisoformat(lexical)


class _Builder:
    """Collects SAX-style callbacks into the log model, one trace at a time."""

    def __init__(self, parser, source: str) -> None:
        self.p = parser
        self.source = source
        self.warnings: list[XesWarning] = []
        self.seen_root = False
        self.depth = 0
        # stack of ("log"|"trace"|"event"|"global"|"attr"|"values"|"skip"|"meta", payload)
        self.stack: list[tuple[str, Any]] = []
        self.log_attrs: dict[str, XesAttribute] = {}
        self.traces: list[XesTrace] = []
        self.extensions: list[dict[str, str]] = []
        self.globals: list[XesGlobal] = []
        self.classifiers: list[dict[str, str]] = []

    def warn(self, message: str) -> None:
        w = XesWarning(message, self.p.CurrentLineNumber, self.p.CurrentColumnNumber + 1)
        self.warnings.append(w)
        log.warning("%s:%s", self.source, w)

    def error(self, message: str) -> XesError:
        return XesError(message, self.source, self.p.CurrentLineNumber, self.p.CurrentColumnNumber + 1)

    @staticmethod
    def _local(tag: str) -> str:
        return tag.rsplit("}", 1)[-1].rsplit(" ", 1)[-1]

    def _attr_container(self) -> Optional[dict]:
        kind, payload = self.stack[-1]
        if kind in ("log", "trace", "event", "global"):
            return payload["attrs"]
        if kind in ("attr", "values"):
            return payload["children"]
        return None

    def start(self, tag: str, attrs: dict[str, str]) -> None:
        name = self._local(tag)
        if not self.stack:
            if self.seen_root:
                raise self.error("content after the root element")
            self.seen_root = True
            if name != "log":
                raise self.error(f"root element is <{name}>, expected <log>")
            self.stack.append(("log", {"attrs": self.log_attrs}))
            return
        parent_kind = self.stack[-1][0]
        if parent_kind in ("skip", "meta"):
            self.stack.append(("skip", None))
            return
        if name == "trace" and parent_kind == "log":
            self.stack.append(("trace", {"attrs": {}, "events": []}))
        elif name == "event" and parent_kind in ("trace", "log"):
            if parent_kind == "log":
                self.warn("<event> outside a <trace> ignored")
                self.stack.append(("skip", None))
            else:
                self.stack.append(("event", {"attrs": {}}))
        elif name == "extension" and parent_kind == "log":
            self.extensions.append(dict(sorted(attrs.items())))
            self.stack.append(("meta", None))
        elif name == "classifier" and parent_kind == "log":
            self.classifiers.append(dict(sorted(attrs.items())))
            self.stack.append(("meta", None))
        elif name == "global" and parent_kind == "log":
            self.stack.append(("global", {"attrs": {}, "scope": attrs.get("scope", "event")}))
        elif name == "values" and parent_kind == "attr":
            self.stack.append(("values", self.stack[-1][1]))
        elif name in ATTRIBUTE_TYPES:
            container = self._attr_container()
            key = attrs.get("key")
            if container is None or key is None:
                self.warn(f"<{name}> without a key or outside an attribute container skipped")
                self.stack.append(("skip", None))
                return
            lexical = attrs.get("value")
            if lexical is None and name in COLLECTION_TYPES:
                lexical = ""
            if lexical is None:
                self.warn(f"<{name} key={key!r}> has no value attribute; skipped")
                self.stack.append(("skip", None))
                return
            try:
                value = _convert(name, lexical)
            except ValueError as exc:
                self.warn(f"invalid {name} value for key {key!r}: {exc}; skipped")
                self.stack.append(("skip", None))
                return
            self.stack.append(("attr", {"key": key, "type": name, "lexical": lexical,
                                        "value": value, "children": {}, "into": container}))
        else:
            self.warn(f"unknown element <{name}> skipped")
            self.stack.append(("skip", None))

    def end(self, tag: str) -> None:
        kind, payload = self.stack.pop()
        if kind == "attr":
            attr = XesAttribute(payload["key"], payload["type"], payload["lexical"],
                                payload["value"], tuple(payload["children"].values()))
            into = payload["into"]
            if attr.key in into:
                parent = self.stack[-1][0]
                if parent == "event":
                    self.warn(f"duplicate attribute key {attr.key!r} in event; last occurrence wins")
            into[attr.key] = attr
        elif kind == "event":
            self.stack[-1][1]["events"].append(XesEvent(tuple(payload["attrs"].values())))
        elif kind == "trace":
            self.traces.append(XesTrace(tuple(payload["attrs"].values()), tuple(payload["events"])))
        elif kind == "global":
            self.globals.append(XesGlobal(payload["scope"], tuple(payload["attrs"].values())))


def parse_xes(stream: Union[str, bytes, IO], source_name: str = "") -> XesLog:
    """Parse an XES document from text, bytes or a file-like object.

    Only one trace is under construction at any time; finished traces are
    frozen into the log model. Raises ``XesError`` on malformed XML or when
    the root is not ``<log>``; recoverable problems become warnings.
    """
    if isinstance(stream, str):
        stream = io.BytesIO(stream.encode("utf-8"))
    elif isinstance(stream, (bytes, bytearray)):
        stream = io.BytesIO(bytes(stream))
    parser = expat.ParserCreate(namespace_separator=" ")
    builder = _Builder(parser, source_name)
    parser.StartElementHandler = builder.start
    parser.EndElementHandler = builder.end
    parser.buffer_text = True
    try:
        while True:
            chunk = stream.read(_CHUNK)
            if isinstance(chunk, str):
                chunk = chunk.encode("utf-8")
            if not chunk:
                parser.Parse(b"", True)
                break
            parser.Parse(chunk, False)
    except expat.ExpatError as exc:
        raise XesError(f"XML syntax error: {expat.ErrorString(exc.code)}", source_name,
                       exc.lineno, exc.offset + 1) from None
    if not builder.seen_root:
        raise XesError("missing <log> root element", source_name)
    return XesLog(
        traces=tuple(builder.traces),
        source_name=source_name,
        attributes=tuple(builder.log_attrs.values()),
        extensions=tuple(builder.extensions),
        globals=tuple(builder.globals),
        classifiers=tuple(builder.classifiers),
        warnings=tuple(builder.warnings),
    )


# -- debug writer -------------------------------------------------------------


def _write_attrs(out: list[str], attrs: tuple[XesAttribute, ...], indent: str) -> None:
    for a in attrs:
        head = f"{indent}<{a.type} key={quoteattr(a.key)}"
        if a.type not in COLLECTION_TYPES or a.lexical:
            head += f" value={quoteattr(a.lexical)}"
        if a.type == "list":
            out.append(head + ">")
            out.append(f"{indent}  <values>")
            _write_attrs(out, a.children, indent + "    ")
            out.append(f"{indent}  </values>")
            out.append(f"{indent}</{a.type}>")
        elif a.children:
            out.append(head + ">")
            _write_attrs(out, a.children, indent + "  ")
            out.append(f"{indent}</{a.type}>")
        else:
            out.append(head + "/>")


def write_xes(log_: XesLog) -> str:
    """Re-emit a parsed log as XES (debugging aid; lexical values are kept verbatim)."""
    out = ['<?xml version="1.0" encoding="UTF-8"?>', '<log xes.version="1.0">']
    for ext in log_.extensions:
        out.append("  <extension " + " ".join(f"{k}={quoteattr(v)}" for k, v in ext.items()) + "/>")
    for g in log_.globals:
        out.append(f"  <global scope={quoteattr(g.scope)}>")
        _write_attrs(out, g.attributes, "    ")
        out.append("  </global>")
    for c in log_.classifiers:
        out.append("  <classifier " + " ".join(f"{k}={quoteattr(v)}" for k, v in c.items()) + "/>")
    _write_attrs(out, log_.attributes, "  ")
    for trace in log_.traces:
        out.append("  <trace>")
        _write_attrs(out, trace.attributes, "    ")
        for event in trace.events:
            out.append("    <event>")
            _write_attrs(out, event.attributes, "      ")
            out.append("    </event>")
        out.append("  </trace>")
    out.append("</log>")
    return "\n".join(out) + "\n"
