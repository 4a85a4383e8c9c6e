"""Semantic validation of OCEDR graphs against OCEDO and an extension."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..rdf import IRI, Graph, Literal, PrefixMap, Triple, render_term
from ..rdf.terms import OWL_NS, RDF_NS, RDFS_NS
from ..vocab.extension import ExtensionModel, subclass_edges
from ..vocab.reasoner import rdfs_closure
from ..vocab.terms import AUX_NS, CORE_NS, OWL, RDF, RDFS

ERROR_CODES = ("DOMAIN_VIOLATION", "RANGE_VIOLATION", "DISJOINT_TYPES")
WARNING_CODES = ("UNTYPED_RESOURCE", "UNKNOWN_PROPERTY")


@dataclass(frozen=True)
class ValidationFinding:
    severity: str
    code: str
    triple: Optional[Triple]
    message: str

    def render(self, pm: Optional[PrefixMap] = None) -> str:
        if self.triple is None:
            where = ""
        elif pm is None:
            where = self.triple.nt
        else:
            where = " ".join(render_term(x, pm) for x in self.triple) + " ."
        return f"{self.severity.upper()}\t{self.code}\t{where}\t{self.message}"


@dataclass
class ValidationReport:
    findings: list[ValidationFinding]

    @property
    def errors(self) -> list[ValidationFinding]:
        return [f for f in self.findings if f.severity == "error"]

    @property
    def warnings(self) -> list[ValidationFinding]:
        return [f for f in self.findings if f.severity == "warning"]

    @property
    def valid(self) -> bool:
        return not self.errors

    def codes(self) -> list[str]:
        return [f.code for f in self.findings]

    def render(self, pm: Optional[PrefixMap] = None) -> str:
        lines = [f.render(pm) for f in self.findings]
        lines.append(f"# {len(self.errors)} error(s), {len(self.warnings)} warning(s)")
        return "\n".join(lines) + "\n"


def _known_namespaces(ext: ExtensionModel) -> tuple[str, ...]:
    ns = [RDF_NS, RDFS_NS, OWL_NS, CORE_NS, AUX_NS]
    if "ext" in ext.prefixes:
        ns.append(ext.prefixes["ext"])
    return tuple(ns)


def _closure_of(cls, sc: dict[IRI, set[IRI]]) -> set[IRI]:
    seen = {cls}
    stack = [cls]
    while stack:
        for nxt in sc.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def validate(g: Graph, ocedo: Graph, ext: ExtensionModel) -> ValidationReport:
    """Check ``g`` for contradictions with the ontology.

    Types are closed under RDFS-lite entailment over g, OCEDO and the
    extension. A node whose closed types reach two classes declared disjoint
    is a DISJOINT_TYPES error. A triple whose predicate's domain (range)
    reaches a root disjoint with a root reached by the subject's (object's)
    closed types is a DOMAIN_VIOLATION (RANGE_VIOLATION). Because typing is
    closed, one bad triple that retypes a node also exposes that node's other
    triples. Error findings only grow when triples are added.
    """
    closed = rdfs_closure(g | ocedo | ext.graph)
    sc = subclass_edges(closed)
    disjoint: dict[IRI, set[IRI]] = {}
    for t in closed.triples(None, OWL.disjointWith, None):
        if isinstance(t.s, IRI) and isinstance(t.o, IRI):
            disjoint.setdefault(t.s, set()).add(t.o)
            disjoint.setdefault(t.o, set()).add(t.s)
    roots = set(disjoint)

    anchor_cache: dict = {}

    def anchors(cls) -> set[IRI]:
        got = anchor_cache.get(cls)
        if got is None:
            got = anchor_cache[cls] = _closure_of(cls, sc) & roots
        return got

    def node_anchors(x) -> set[IRI]:
        out: set[IRI] = set()
        for c in closed.objects(x, RDF.type):
            out |= anchors(c)
        return out

    def clash(expected: set[IRI], actual: set[IRI]) -> Optional[tuple[IRI, IRI]]:
        for e in sorted(expected, key=lambda i: i.value):
            for a in sorted(actual, key=lambda i: i.value):
                if a in disjoint.get(e, ()):
                    return e, a
        return None

    findings: list[ValidationFinding] = []
    pm = ext.prefixes

    def name(term) -> str:
        return render_term(term, pm)

    for x in sorted({t.s for t in g} | {t.o for t in g if not isinstance(t.o, Literal)},
                    key=lambda n: n.nt):
        a = sorted(node_anchors(x), key=lambda i: i.value)
        for i, r1 in enumerate(a):
            for r2 in a[i + 1:]:
                if r2 in disjoint.get(r1, ()):
                    findings.append(ValidationFinding(
                        "error", "DISJOINT_TYPES", Triple(x, RDF.type, r1),
                        f"{name(x)} is typed both {name(r1)} and {name(r2)}, which are disjoint"))

    known = _known_namespaces(ext)
    prop_domains: dict[IRI, set[IRI]] = {}
    prop_ranges: dict[IRI, set[IRI]] = {}
    for p in g.predicates():
        supers = {p} | {o for o in closed.objects(p, RDFS.subPropertyOf) if isinstance(o, IRI)}
        prop_domains[p] = {c for q in supers for c in closed.objects(q, RDFS.domain) if isinstance(c, IRI)}
        prop_ranges[p] = {c for q in supers for c in closed.objects(q, RDFS.range) if isinstance(c, IRI)}

    for t in g.sorted():
        s, p, o = t
        expected = set().union(*(anchors(c) for c in prop_domains[p])) if prop_domains[p] else set()
        hit = clash(expected, node_anchors(s)) if expected else None
        if hit:
            findings.append(ValidationFinding(
                "error", "DOMAIN_VIOLATION", t,
                f"domain of {name(p)} anchors to {name(hit[0])} but {name(s)} is a {name(hit[1])}"))
        if not isinstance(o, Literal) and prop_ranges[p]:
            expected = set().union(*(anchors(c) for c in prop_ranges[p]))
            hit = clash(expected, node_anchors(o)) if expected else None
            if hit:
                findings.append(ValidationFinding(
                    "error", "RANGE_VIOLATION", t,
                    f"range of {name(p)} anchors to {name(hit[0])} but {name(o)} is a {name(hit[1])}"))

    for p in sorted(g.predicates(), key=lambda i: i.value):
        if not p.value.startswith(known):
            example = min(g.triples(None, p, None), key=lambda t: t.nt)
            findings.append(ValidationFinding(
                "warning", "UNKNOWN_PROPERTY", example,
                f"predicate {name(p)} is outside the rdf/rdfs/owl/oced/aux/ext namespaces"))

    for s in sorted(g.subjects(), key=lambda n: n.nt):
        if not closed.objects(s, RDF.type):
            example = min(g.triples(s, None, None), key=lambda t: t.nt)
            findings.append(ValidationFinding(
                "warning", "UNTYPED_RESOURCE", example, f"{name(s)} has no rdf:type, even after entailment"))

    order = {c: i for i, c in enumerate(ERROR_CODES + WARNING_CODES)}
    findings.sort(key=lambda f: (f.severity != "error", order[f.code],
                                 f.triple.nt if f.triple is not None else ""))
    return ValidationReport(findings)
