"""XES log + descriptor + extension  ->  OCEDR graph."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from ..rdf import IRI, Graph, Literal, PrefixMap, TermError, Triple
from ..rdf.namespace import standard_prefixes
from ..vocab.extension import ExtensionModel, Finding
from ..vocab.terms import AUX_NS, CORE_NS, OCED, RDF, XSD
from ..xes import XesAttribute, XesLog, XesTrace
from .descriptor import Descriptor, ObjectGroup
from .identity import canonical_identity, mint_event_iri, mint_object_iri

# Per finding code, only this many individual findings are kept; counts are exact.
MAX_FINDINGS_PER_CODE = 25


@dataclass
class ConversionStats:
    events_in: int = 0
    events: int = 0
    skipped_events: int = 0
    objects: int = 0
    triples: int = 0
    skipped_objects: int = 0
    untyped_events: int = 0
    unmapped_keys: list[str] = field(default_factory=list)
    finding_counts: Counter = field(default_factory=Counter)
    findings: list[Finding] = field(default_factory=list)

    def record(self, finding: Finding) -> None:
        self.finding_counts[(finding.severity, finding.code)] += 1
        if self.finding_counts[(finding.severity, finding.code)] <= MAX_FINDINGS_PER_CODE:
            self.findings.append(finding)

    @property
    def error_count(self) -> int:
        return sum(n for (sev, _), n in self.finding_counts.items() if sev == "error")

    def summary(self) -> str:
        lines = [
            f"events in:        {self.events_in}",
            f"event nodes:      {self.events}",
            f"skipped events:   {self.skipped_events}",
            f"objects:          {self.objects}",
            f"triples:          {self.triples}",
            f"skipped objects:  {self.skipped_objects}",
            f"untyped events:   {self.untyped_events}",
            f"unmapped keys:    {', '.join(self.unmapped_keys) if self.unmapped_keys else '-'}",
        ]
        return "\n".join(lines)


def output_prefixes(ext: ExtensionModel, d: Descriptor) -> PrefixMap:
    """rdf, rdfs, owl, xsd, oced, aux, ext, res -- in that order."""
    pm = standard_prefixes()
    pm.bind("oced", CORE_NS)
    pm.bind("aux", AUX_NS)
    if "ext" in ext.prefixes:
        pm.bind("ext", ext.prefixes["ext"])
    pm.bind("res", d.resource_namespace)
    for prefix, ns in ext.prefixes.items():
        if prefix not in pm:
            pm.bind(prefix, ns)
    return pm


def _attr_key(a: XesAttribute) -> tuple:
    return (a.key, a.type, a.lexical, tuple(_attr_key(c) for c in a.children))


def _trace_key(t: XesTrace) -> tuple:
    return (
        tuple(_attr_key(a) for a in t.attributes),
        tuple(tuple(_attr_key(a) for a in e.attributes) for e in t.events),
    )


def canonical_trace_order(log: XesLog) -> list[int]:
    """Trace positions sorted by trace content.

    The rank of a trace in this order is the trace index used for event IRIs,
    so reordering the traces of a log leaves every minted IRI unchanged.
    Traces with equal keys are identical, so tie order cannot matter.
    """
    return sorted(range(len(log.traces)), key=lambda i: _trace_key(log.traces[i]))


class _Converter:
    def __init__(self, log: XesLog, d: Descriptor, ext: ExtensionModel, strict: bool) -> None:
        self.log = log
        self.d = d
        self.ext = ext
        self.strict = strict
        self.g = Graph()
        self.stats = ConversionStats(events_in=log.event_count)
        self.objects: dict[str, IRI] = {}
        self.ns = d.resource_namespace

    def add(self, s, p, o) -> None:
        self.g.add(Triple(s, p, o))

    def literal(self, attr: XesAttribute, datatype: IRI, where: IRI) -> Optional[Literal]:
        try:
            return Literal(attr.lexical, datatype)
        except TermError as exc:
            self.stats.record(Finding("warning", "INVALID_LITERAL", where,
                                      f"value of {attr.key!r} rejected: {exc}"))
            return None

    def bind_object(self, group: ObjectGroup, attrs: dict[str, XesAttribute],
                    where: Optional[IRI]) -> Optional[IRI]:
        pairs = []
        for key in group.identity_keys:
            a = attrs.get(key)
            if a is None:
                self.stats.skipped_objects += 1
                self.stats.record(Finding("warning", "MISSING_IDENTITY", where,
                                          f"group {group.group_id!r}: identity key {key!r} absent; no object minted"))
                return None
            pairs.append((key, a.lexical))
        canonical = canonical_identity(group.object_class, pairs)
        node = self.objects.get(canonical)
        if node is None:
            node = mint_object_iri(self.ns, group.object_class, pairs)
            self.objects[canonical] = node
            self.add(node, RDF.type, OCED.Object)
            self.add(node, RDF.type, group.object_class_iri)
        for rule in group.attribute_rules:
            a = attrs.get(rule.source)
            if a is None:
                continue
            lit = self.literal(a, rule.datatype_iri, node)
            if lit is not None:
                self.add(node, rule.property_iri, lit)
        return node

    def run(self) -> tuple[Graph, ConversionStats]:
        d = self.d
        mapped = d.mapped_event_keys()
        unmapped: set[str] = set()
        trace_groups = [g for g in d.object_groups.values() if g.scope == "trace"]
        event_groups = [g for g in d.object_groups.values() if g.scope == "event"]

        for rank, pos in enumerate(canonical_trace_order(self.log)):
            trace = self.log.traces[pos]
            trace_attrs = {a.key: a for a in trace.attributes}
            trace_bound = {g.group_id: self.bind_object(g, trace_attrs, None) for g in trace_groups}
            for j, event in enumerate(trace.events):
                attrs = {a.key: a for a in event.attributes}
                unmapped.update(k for k in attrs if k not in mapped)
                e = mint_event_iri(self.ns, self.log.source_name, rank, j)

                stamp: Optional[Literal] = None
                if d.timestamp_key is not None:
                    a = attrs.get(d.timestamp_key)
                    problem = None
                    if a is None:
                        problem = f"timestamp key {d.timestamp_key!r} missing"
                    else:
                        try:
                            stamp = Literal(a.lexical, XSD.dateTime)
                        except TermError as exc:
                            problem = f"timestamp not an xsd:dateTime with offset: {exc}"
                    if problem is not None:
                        if self.strict:
                            self.stats.skipped_events += 1
                            self.stats.record(Finding("error", "BAD_TIMESTAMP", e,
                                                      f"trace {pos} event {j}: {problem}; event skipped"))
                            continue
                        self.stats.record(Finding("warning", "BAD_TIMESTAMP", e,
                                                  f"trace {pos} event {j}: {problem}"))

                self.stats.events += 1
                self.add(e, RDF.type, OCED.Event)
                if stamp is not None:
                    self.add(e, OCED.observed_at, stamp)
                for rule in d.event_type_rules:
                    if all(k in attrs and attrs[k].lexical == v for k, v in rule.match):
                        self.add(e, RDF.type, rule.event_class_iri)
                        break
                else:
                    if d.event_type_rules:
                        self.stats.untyped_events += 1
                        self.stats.record(Finding("warning", "UNTYPED_EVENT", e,
                                                  f"trace {pos} event {j}: no event_type rule matched"))
                for rule in d.event_attribute_rules:
                    a = attrs.get(rule.source)
                    if a is not None:
                        lit = self.literal(a, rule.datatype_iri, e)
                        if lit is not None:
                            self.add(e, rule.property_iri, lit)

                bound = dict(trace_bound)
                for g in event_groups:
                    bound[g.group_id] = self.bind_object(g, attrs, e)
                for g in d.object_groups.values():
                    node = bound.get(g.group_id)
                    if node is not None and g.link_property_iri is not None:
                        self.add(e, g.link_property_iri, node)
                for rel in d.object_relations:
                    a, b = bound.get(rel.from_group), bound.get(rel.to_group)
                    if a is not None and b is not None:
                        self.add(a, rel.property_iri, b)

        self.stats.objects = len(self.objects)
        self.stats.triples = len(self.g)
        self.stats.unmapped_keys = sorted(unmapped)
        return self.g, self.stats



def convert(log: XesLog, d: Descriptor, ext: ExtensionModel,
            strict: bool = False) -> tuple[Graph, ConversionStats]:
    """Map every event of ``log`` into an OCEDR graph.

    ``ext`` must already have passed conformance checking. In strict mode an
    event whose timestamp is missing or malformed is skipped with an error
    finding; otherwise it is kept without ``oced:observed_at`` and a warning
    is recorded.
    """
    return _Converter(log, d, ext, strict).run()
