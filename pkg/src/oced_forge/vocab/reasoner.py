"""RDFS-lite forward chaining.

Rules, applied to a least fixpoint:

    R1  A sc B, B sc C        =>  A sc C
    R2  x type A, A sc B      =>  x type B
    R3  p sp q, q sp r        =>  p sp r
    R4  x p y, p sp q         =>  x q y
    R5  p dom C, x p y        =>  x type C
    R6  p rng C, x p y        =>  y type C      (y not a literal)

Evaluation is semi-naive: each round only joins the triples derived in the
previous round against the whole graph.
"""
from __future__ import annotations

from ..rdf import IRI, Graph, Literal, Triple
from .terms import RDF, RDFS

TYPE = RDF.type
SC = RDFS.subClassOf
SP = RDFS.subPropertyOf
DOM = RDFS.domain
RNG = RDFS.range


def _consequences(g: Graph, t: Triple, out: list[Triple]) -> None:
    s, p, o = t
    # t as instance triple "x p y" (every triple is one)
    for q in g.objects(p, SP):
        if isinstance(q, IRI):
            out.append(Triple(s, q, o))
    for c in g.objects(p, DOM):
        out.append(Triple(s, TYPE, c))
    if not isinstance(o, Literal):
        for c in g.objects(p, RNG):
            out.append(Triple(o, TYPE, c))

    if p == SC:
        if not isinstance(o, Literal):
            for c in g.objects(o, SC):
                out.append(Triple(s, SC, c))
        for z in g.subjects(SC, s):
            out.append(Triple(z, SC, o))
        for x in g.subjects(TYPE, s):
            out.append(Triple(x, TYPE, o))
    if p == TYPE and not isinstance(o, Literal):
        for b in g.objects(o, SC):
            out.append(Triple(s, TYPE, b))
    if p == SP:
        if not isinstance(o, Literal):
            for r in g.objects(o, SP):
                out.append(Triple(s, SP, r))
        for z in g.subjects(SP, s):
            out.append(Triple(z, SP, o))
        if isinstance(s, IRI) and isinstance(o, IRI):
            for x, y in [(tt.s, tt.o) for tt in g.triples(None, s, None)]:
                out.append(Triple(x, o, y))
    if p == DOM and isinstance(s, IRI):
        for x in g.subjects(s):
            out.append(Triple(x, TYPE, o))
    if p == RNG and isinstance(s, IRI):
        for y in g.objects(None, s):
            if not isinstance(y, Literal):
                out.append(Triple(y, TYPE, o))


def rdfs_closure(g: Graph) -> Graph:
    """Least fixpoint of R1-R6 over ``g``; the input graph is not modified."""
    closed = g.copy()
    delta = list(closed)
    while delta:
        derived: list[Triple] = []
        for t in delta:
            _consequences(closed, t, derived)
        delta = []
        for t in derived:
            if t not in closed:
                closed.add(t)
                delta.append(t)
    return closed
