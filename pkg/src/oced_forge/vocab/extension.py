"""Loading and conformance checking of OCEDD extension documents."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..rdf import IRI, XSD_NS, Graph, Literal, PrefixMap, parse_turtle
from .terms import OCED, OWL, RDF, RDFS, ROOTS

_SCHEMA_PREDICATES = {RDFS.subClassOf, RDFS.subPropertyOf, RDFS.domain, RDFS.range}
_DECL_TYPES = {OWL.Class, OWL.ObjectProperty, OWL.DatatypeProperty}


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" | "warning"
    code: str
    subject: Optional[IRI]
    message: str

    def render(self, pm: Optional[PrefixMap] = None) -> str:
        subj = ""
        if self.subject is not None:
            curie = pm.compress(self.subject) if pm is not None else None
            subj = curie or self.subject.nt
        return f"{self.severity.upper()}\t{self.code}\t{subj}\t{self.message}"


@dataclass(frozen=True)
class ClassInfo:
    superclasses: frozenset[IRI]
    label: Optional[str]


@dataclass(frozen=True)
class PropertyInfo:
    domain: Optional[IRI]
    range: Optional[IRI]
    super_properties: frozenset[IRI]
    label: Optional[str]


@dataclass
class ExtensionModel:
    classes: dict[IRI, ClassInfo]
    object_properties: dict[IRI, PropertyInfo]
    datatype_properties: dict[IRI, PropertyInfo]
    prefixes: PrefixMap
    graph: Graph
    residual: Graph
    load_findings: list[Finding] = field(default_factory=list)

    def properties(self) -> dict[IRI, PropertyInfo]:
        return {**self.object_properties, **self.datatype_properties}


@dataclass
class ConformanceReport:
    findings: list[Finding]

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    @property
    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "warning"]

    @property
    def conformant(self) -> bool:
        """True when there are no errors; warnings do not block conversion."""
        return not self.errors

    def codes(self) -> list[str]:
        return [f.code for f in self.findings]


def _label(g: Graph, s: IRI) -> Optional[str]:
    labels = sorted(o.lexical for o in g.objects(s, RDFS.label) if isinstance(o, Literal))
    return labels[0] if labels else None


def _single(g: Graph, s: IRI, p: IRI, findings: list[Finding], what: str) -> Optional[IRI]:
    values = sorted((o for o in g.objects(s, p) if isinstance(o, IRI)), key=lambda o: o.value)
    if len(values) > 1:
        findings.append(Finding("warning", f"MULTIPLE_{what.upper()}", s,
                                f"{len(values)} {what} declarations; using {values[0].value}"))
    return values[0] if values else None


def load_ocedd(text: str) -> ExtensionModel:
    """Build an ExtensionModel from an OCEDD Turtle document.

    Raises ``TurtleError`` on syntax errors. Undeclared classes referenced by
    a domain or range become warnings in ``load_findings``.
    """
    g, pm = parse_turtle(text)
    findings: list[Finding] = []

    def declared(kind: IRI) -> list[IRI]:
        return sorted((s for s in g.subjects(RDF.type, kind) if isinstance(s, IRI)),
                      key=lambda s: s.value)

    classes = {}
    for c in declared(OWL.Class):
        supers = frozenset(o for o in g.objects(c, RDFS.subClassOf) if isinstance(o, IRI))
        classes[c] = ClassInfo(supers, _label(g, c))

    def props(kind: IRI) -> dict[IRI, PropertyInfo]:
        out = {}
        for p in declared(kind):
            supers = frozenset(o for o in g.objects(p, RDFS.subPropertyOf) if isinstance(o, IRI))
            out[p] = PropertyInfo(
                _single(g, p, RDFS.domain, findings, "domain"),
                _single(g, p, RDFS.range, findings, "range"),
                supers,
                _label(g, p),
            )
        return out

    object_properties = props(OWL.ObjectProperty)
    datatype_properties = props(OWL.DatatypeProperty)

    known = set(classes) | set(ROOTS)
    for p, info in sorted({**object_properties, **datatype_properties}.items(), key=lambda kv: kv[0].value):
        for role, ref in (("domain", info.domain), ("range", info.range)):
            if ref is None or ref.value.startswith(XSD_NS) or ref in known:
                continue
            if p in datatype_properties and role == "range":
                continue
            findings.append(Finding("warning", "UNDECLARED_CLASS", ref,
                                    f"{ref.value} used as {role} of {p.value} but never declared owl:Class"))

    consumed = set()
    declared_all = set(classes) | set(object_properties) | set(datatype_properties)
    for t in g:
        if t.s in declared_all and (
            (t.p == RDF.type and t.o in _DECL_TYPES)
            or t.p in _SCHEMA_PREDICATES
            or t.p == RDFS.label
        ):
            consumed.add(t)
    residual = Graph(t for t in g if t not in consumed)
    return ExtensionModel(classes, object_properties, datatype_properties, pm, g, residual, findings)


def _reaches(start: IRI, targets: set[IRI], edges: dict[IRI, set[IRI]]) -> bool:
    """Reflexive-transitive reachability over ``edges``."""
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        if node in targets:
            return True
        for nxt in edges.get(node, ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return False


def _in_cycle(start: IRI, edges: dict[IRI, set[IRI]]) -> bool:
    seen = set()
    stack = list(edges.get(start, ()))
    while stack:
        node = stack.pop()
        if node == start:
            return True
        if node in seen:
            continue
        seen.add(node)
        stack.extend(edges.get(node, ()))
    return False


def _edges(g: Graph, p: IRI) -> dict[IRI, set[IRI]]:
    out: dict[IRI, set[IRI]] = {}
    for t in g.triples(None, p, None):
        if isinstance(t.s, IRI) and isinstance(t.o, IRI):
            out.setdefault(t.s, set()).add(t.o)
    return out


def check_conformance(ext: ExtensionModel, ocedo: Graph) -> ConformanceReport:
    """Check that an extension refines OCEDO instead of contradicting it."""
    findings: list[Finding] = list(ext.load_findings)
    combined = ext.graph | ocedo
    sc = _edges(combined, RDFS.subClassOf)
    sp = _edges(combined, RDFS.subPropertyOf)
    ocedo_classes = {s for s in ocedo.subjects(RDF.type, OWL.Class) if isinstance(s, IRI)}
    declared_classes = set(ext.classes) | ocedo_classes
    pm = ext.prefixes

    def name(iri: IRI) -> str:
        return pm.compress(iri) or iri.nt

    for c in sorted(ext.classes, key=lambda c: c.value):
        info = ext.classes[c]
        if _in_cycle(c, sc):
            findings.append(Finding("error", "SUBCLASS_CYCLE", c,
                                    f"{name(c)} is its own (transitive) superclass"))
        if not _reaches(c, set(ROOTS), sc):
            findings.append(Finding("error", "UNANCHORED_CLASS", c,
                                    f"{name(c)} does not specialise oced:Event or oced:Object"))
        if info.label is None:
            findings.append(Finding("warning", "MISSING_LABEL", c, f"{name(c)} has no rdfs:label"))

    for p in sorted(ext.object_properties, key=lambda p: p.value):
        info = ext.object_properties[p]
        if info.domain is not None and info.domain not in declared_classes:
            findings.append(Finding("error", "DANGLING_DOMAIN", p,
                                    f"domain of {name(p)} is the undeclared class {name(info.domain)}"))
        if info.range is not None and info.range not in declared_classes:
            findings.append(Finding("error", "DANGLING_RANGE", p,
                                    f"range of {name(p)} is the undeclared class {name(info.range)}"))
        if info.label is None:
            findings.append(Finding("warning", "MISSING_LABEL", p, f"{name(p)} has no rdfs:label"))

    attribute_roots = {OCED.event_attribute, OCED.object_attribute}
    for p in sorted(ext.datatype_properties, key=lambda p: p.value):
        info = ext.datatype_properties[p]
        if info.domain is not None and info.domain not in declared_classes:
            findings.append(Finding("error", "DANGLING_DOMAIN", p,
                                    f"domain of {name(p)} is the undeclared class {name(info.domain)}"))
        if info.range is not None and not info.range.value.startswith(XSD_NS):
            findings.append(Finding("error", "NON_XSD_RANGE", p,
                                    f"range of datatype property {name(p)} is {name(info.range)}, not an XSD datatype"))
        if p not in attribute_roots and p != OCED.observed_at and not _reaches(p, attribute_roots, sp):
            findings.append(Finding("warning", "UNANCHORED_ATTRIBUTE", p,
                                    f"{name(p)} is not a sub-property of oced:event_attribute or oced:object_attribute"))
        if info.label is None:
            findings.append(Finding("warning", "MISSING_LABEL", p, f"{name(p)} has no rdfs:label"))

    return ConformanceReport(findings)


def anchor_of(cls: IRI, sc_edges: dict[IRI, set[IRI]]) -> set[IRI]:
    """Roots (oced:Event / oced:Object) reachable from ``cls``."""
    return {r for r in ROOTS if _reaches(cls, {r}, sc_edges)}


def subclass_edges(g: Graph) -> dict[IRI, set[IRI]]:
    return _edges(g, RDFS.subClassOf)


def subproperty_edges(g: Graph) -> dict[IRI, set[IRI]]:
    return _edges(g, RDFS.subPropertyOf)
