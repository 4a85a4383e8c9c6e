"""Corpus statistics for OCEDR graphs."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from ..rdf import IRI, Graph, Literal
from ..vocab.extension import ExtensionModel, subclass_edges, subproperty_edges
from ..vocab.ocedo import builtin_ocedo
from ..vocab.terms import OCED, RDF, RDFS


@dataclass(frozen=True)
class GraphStats:
    triples: int
    events: int
    objects: int
    event_classes: int
    object_classes: int
    object_relations: int
    event_attributes: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    def render(self) -> str:
        return "".join(f"{k}\t{v}\n" for k, v in asdict(self).items())


def _ancestors(start: IRI, edges: dict[IRI, set[IRI]]) -> set[IRI]:
    seen = {start}
    stack = [start]
    while stack:
        for nxt in edges.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _entailed_types(g: Graph, schema: Graph, sc: dict[IRI, set[IRI]],
                    sp: dict[IRI, set[IRI]]) -> dict:
    """rdf:type assertions RDFS-lite entailment yields for the nodes of ``g``.

    Asserted types plus the domains (ranges) of every property a node is the
    subject (object) of, super-properties included, closed under
    rdfs:subClassOf. This is the instance typing of the full closure without
    materialising it.
    """
    dom: dict[IRI, set] = {}
    rng: dict[IRI, set] = {}
    for p in g.predicates():
        supers = _ancestors(p, sp)
        dom[p] = {c for q in supers for c in schema.objects(q, RDFS.domain)}
        rng[p] = {c for q in supers for c in schema.objects(q, RDFS.range)}
    direct: dict = {}
    for t in g.triples():
        bucket = direct.setdefault(t.s, set())
        if t.p == RDF.type:
            bucket.add(t.o)
        bucket |= dom[t.p]
        if rng[t.p] and not isinstance(t.o, Literal):
            direct.setdefault(t.o, set()).update(rng[t.p])
    closed_cache: dict = {}
    out = {}
    for node, classes in direct.items():
        types: set = set()
        for c in classes:
            if c not in closed_cache:
                closed_cache[c] = _ancestors(c, sc) if isinstance(c, IRI) else {c}
            types |= closed_cache[c]
        out[node] = types
    return out


def stats(g: Graph, ext: Optional[ExtensionModel] = None) -> GraphStats:
    """Count triples, events, objects, classes in use, relations and attributes.

    Events and objects are the nodes typed oced:Event / oced:Object once
    RDFS-lite entailment is applied, so the counts equal those of a query
    over the closure. Class and property hierarchies come from OCEDO, ``ext``
    (when given) and any schema triples inside ``g``.
    """
    schema = builtin_ocedo()[0] | g
    if ext is not None:
        schema.update(ext.graph)
    sc = subclass_edges(schema)
    sp = subproperty_edges(schema)
    typed = _entailed_types(g, schema, sc, sp)

    events = [x for x, types in typed.items() if OCED.Event in types]
    objects = [x for x, types in typed.items() if OCED.Object in types]

    event_classes, object_classes = set(), set()
    for t in g.triples(None, RDF.type, None):
        c = t.o
        if not isinstance(c, IRI) or c in (OCED.Event, OCED.Object):
            continue
        up = _ancestors(c, sc)
        if OCED.Event in up:
            event_classes.add(c)
        elif OCED.Object in up:
            object_classes.add(c)

    relation_props: set[IRI] = set()
    attribute_props: set[IRI] = set()
    if ext is not None:
        for p, info in ext.object_properties.items():
            if (info.domain is not None and info.range is not None
                    and OCED.Object in _ancestors(info.domain, sc)
                    and OCED.Object in _ancestors(info.range, sc)):
                relation_props.add(p)
    for p in g.predicates():
        if OCED.event_attribute in _ancestors(p, sp):
            attribute_props.add(p)
        if OCED.object_relation in _ancestors(p, sp):
            relation_props.add(p)

    return GraphStats(
        triples=len(g),
        events=len(events),
        objects=len(objects),
        event_classes=len(event_classes),
        object_classes=len(object_classes),
        object_relations=sum(1 for p in relation_props for _ in g.triples(None, p, None)),
        event_attributes=sum(1 for p in attribute_props for _ in g.triples(None, p, None)),
    )
