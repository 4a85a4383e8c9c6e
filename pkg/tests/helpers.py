"""Generators and brute-force oracles shared by the test modules."""
from __future__ import annotations

import random
from typing import Optional
from xml.sax.saxutils import quoteattr

from oced_forge.rdf import IRI, BNode, Graph, Literal, PrefixMap, Triple, standard_prefixes
from oced_forge.rdf.terms import RDF_NS, RDFS_NS, XSD_NS
from oced_forge.tools import TriplePattern, Variable

EX = "http://example.org/ns#"
OTHER = "urn:x-test:"

TYPE = IRI(RDF_NS + "type")
SC = IRI(RDFS_NS + "subClassOf")
SP = IRI(RDFS_NS + "subPropertyOf")
DOM = IRI(RDFS_NS + "domain")
RNG = IRI(RDFS_NS + "range")

_STRINGS = [
    "", "plain", "with space", 'quote " inside', "back\\slash", "tab\there",
    "line\nbreak", "cr\rreturn", "café", "日本", "emoji \U0001F600",
    "'single'", "#not a comment", "a.b;c,d", "\u0007bell", "trailing\\",
]
_LOCALS = ["a", "b", "Event", "x_1", "with-dash", "9start", "", "A"]


def example_prefixes() -> PrefixMap:
    pm = standard_prefixes()
    pm.bind("ex", EX)
    return pm


def random_iri(rng: random.Random) -> IRI:
    r = rng.random()
    if r < 0.5:
        return IRI(EX + rng.choice(_LOCALS))
    if r < 0.7:
        # locals the serializer cannot abbreviate
        return IRI(EX + rng.choice(["a/b", "q?x=1", "dot.end.", "p%20q", "~t"]))
    if r < 0.85:
        return IRI(OTHER + rng.choice(["x", "y:z", "café", "caf%C3%A9", "a,b", "semi;colon"]))
    return IRI(rng.choice([RDF_NS + "type", RDFS_NS + "label", XSD_NS + "int"]))


def random_literal(rng: random.Random) -> Literal:
    r = rng.random()
    text = rng.choice(_STRINGS)
    if r < 0.4:
        return Literal(text)
    if r < 0.55:
        return Literal(text, language=rng.choice(["en", "en-GB", "de", "zh-Hant-TW"]))
    if r < 0.7:
        return Literal(str(rng.randint(-50, 50)), IRI(XSD_NS + "integer"))
    if r < 0.8:
        return Literal(rng.choice(["2012-05-11T01:26:15+02:00", "1999-12-31T23:59:59.5Z",
                                   "2020-02-29T00:00:00-05:30"]), IRI(XSD_NS + "dateTime"))
    return Literal(text, random_iri(rng))


def random_subject(rng: random.Random, bnode_pool: int = 6):
    if rng.random() < 0.2:
        return BNode(f"b{rng.randrange(bnode_pool)}")
    return random_iri(rng)


def random_object(rng: random.Random):
    r = rng.random()
    if r < 0.45:
        return random_literal(rng)
    return random_subject(rng)


def random_graph(rng: random.Random, max_triples: int = 300) -> Graph:
    g = Graph()
    for _ in range(rng.randint(0, max_triples)):
        g.add(Triple(random_subject(rng), random_iri(rng), random_object(rng)))
    return g


# -- reasoner oracle ---------------------------------------------------------------


def vocab_graph(rng: random.Random, max_triples: int = 200, size: int = 20) -> Graph:
    """A random graph over ``size`` IRIs mixing schema axioms and instance data."""
    terms = [IRI(f"{EX}t{i}") for i in range(size)]
    schema = [SC, SP, DOM, RNG, TYPE]
    g = Graph()
    for _ in range(rng.randint(0, max_triples)):
        s = rng.choice(terms)
        p = rng.choice(schema) if rng.random() < 0.5 else rng.choice(terms)
        o = Literal(f"v{rng.randrange(3)}") if rng.random() < 0.1 else rng.choice(terms)
        g.add(Triple(s, p, o))
    return g


def naive_closure(g: Graph) -> set[Triple]:
    """Re-apply every rule to the whole fact set until a round adds nothing.

    Each round joins all facts against all facts (hash-joined on the shared
    term); unlike the library there is no delta tracking and no index reuse.
    """
    facts = set(g)
    while True:
        by_subj_pred: dict = {}
        for t in facts:
            by_subj_pred.setdefault((t.s, t.p), []).append(t)
        new = set()
        for a in facts:
            if a.p in (SC, TYPE):  # R1, R2
                for b in by_subj_pred.get((a.o, SC), ()):
                    new.add(Triple(a.s, a.p, b.o))
            if a.p == SP:  # R3
                for b in by_subj_pred.get((a.o, SP), ()):
                    new.add(Triple(a.s, SP, b.o))
            for b in by_subj_pred.get((a.p, SP), ()):  # R4
                if isinstance(b.o, IRI):
                    new.add(Triple(a.s, b.o, a.o))
            for b in by_subj_pred.get((a.p, DOM), ()):  # R5
                new.add(Triple(a.s, TYPE, b.o))
            if not isinstance(a.o, Literal):  # R6
                for b in by_subj_pred.get((a.p, RNG), ()):
                    new.add(Triple(a.o, TYPE, b.o))
        if new <= facts:
            return facts
        facts |= new


# -- query oracle ------------------------------------------------------------------


def random_bgp(rng: random.Random, g: Graph, max_patterns: int = 3) -> list[TriplePattern]:
    triples = g.sorted()
    names = ["a", "b", "c", "d"]
    patterns = []
    for _ in range(rng.randint(1, max_patterns)):
        seed: Optional[Triple] = rng.choice(triples) if triples and rng.random() < 0.8 else None
        slots = []
        for pos in range(3):
            if rng.random() < 0.55:
                slots.append(Variable(rng.choice(names)))
            elif seed is not None:
                slots.append(seed[pos])
            else:
                slots.append((random_subject, random_iri, random_object)[pos](rng))
        patterns.append(TriplePattern(*slots))
    return patterns


def nested_loop_join(g: Graph, patterns: list[TriplePattern]) -> list[dict]:
    """Left-to-right nested loops over a full scan, keeping consistent bindings."""
    all_triples = list(g.match())
    solutions = [{}]
    for pat in patterns:
        nxt = []
        for sol in solutions:
            for t in all_triples:
                cand = dict(sol)
                ok = True
                for slot, term in zip(pat, t):
                    if isinstance(slot, Variable):
                        if cand.setdefault(slot.name, term) != term:
                            ok = False
                            break
                    elif slot != term:
                        ok = False
                        break
                if ok:
                    nxt.append(cand)
        solutions = nxt
    return solutions


def canon_solutions(sols: list[dict]) -> list[tuple]:
    return sorted(tuple(sorted((k, v.nt) for k, v in s.items())) for s in sols)


# -- synthetic XES -----------------------------------------------------------------


EVENT_KINDS = [
    ("Accepted", "In Progress"),
    ("Queued", "Awaiting Assignment"),
    ("Completed", "Resolved"),
    ("Completed", "Closed"),
]


def synthetic_xes(n_traces: int, events_per_trace: int, seed: int = 0, *,
                  incidents: Optional[int] = None, members: int = 30, teams: int = 10,
                  products: int = 10, functions: int = 5, centers: int = 3) -> str:
    """A BPIC2013-shaped log whose object pools are each used at least once.

    Team member ``k`` always works in team ``k % teams``, team ``t`` in function
    ``t % functions`` and so on, so every object of every pool is reached when
    the number of events covers the largest pool.
    """
    rng = random.Random(seed)
    incidents = n_traces if incidents is None else incidents
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<log xes.version="1.0" xmlns="http://www.xes-standard.org/">']
    counter = 0
    for t in range(n_traces):
        out.append("  <trace>")
        out.append(f'    <string key="concept:name" value="1-{t % incidents:09d}"/>')
        for e in range(events_per_trace):
            member = counter % members
            team = member % teams
            function = team % functions
            center = function % centers
            product = counter % products
            counter += 1
            status, sub = rng.choice(EVENT_KINDS)
            second = (t * 7 + e) % 60
            values = [
                ("string", "concept:name", status),
                ("string", "lifecycle:transition", sub),
                ("string", "org:resource", f"Member{member}"),
                ("string", "org:group", f"Team{team}"),
                ("string", "org:role", f"F{function}"),
                ("string", "organization involved", f"Center{center}"),
                ("string", "product", f"PROD{product}"),
                ("string", "impact", rng.choice(["Low", "Medium", "High"])),
                ("date", "time:timestamp", f"2012-05-{1 + t % 28:02d}T10:{e % 60:02d}:{second:02d}+02:00"),
            ]
            out.append("    <event>")
            for kind, key, value in values:
                out.append(f"      <{kind} key={quoteattr(key)} value={quoteattr(value)}/>")
            out.append("    </event>")
        out.append("  </trace>")
    out.append("</log>")
    return "\n".join(out) + "\n"
