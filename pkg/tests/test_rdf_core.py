from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import EX, example_prefixes, random_graph, random_iri, random_object, random_subject
from oced_forge.rdf import (
    IRI,
    BNode,
    Graph,
    Literal,
    PrefixMap,
    TermError,
    Triple,
    TurtleError,
    UnknownPrefixError,
    XSD_NS,
    add_triple,
    expand_curie,
    match,
    parse_turtle,
    serialize_turtle,
    standard_prefixes,
)
from oced_forge.vocab import OCED, RDF, RDFS, XSD, builtin_ocedo, ocedo_text

EV1 = IRI("https://w3id.org/ocedr/res#ev1")
STAMP = Literal("2012-05-11T01:26:15+02:00", XSD.dateTime)


# -- terms ---------------------------------------------------------------------


def test_iri_requires_scheme_and_legal_characters():
    with pytest.raises(TermError):
        IRI("no-scheme")
    for bad in ["http://x/a b", "http://x/<", "http://x/{y}", "http://x/a|b", "http://x/\\"]:
        with pytest.raises(TermError):
            IRI(bad)
    assert IRI("urn:x").nt == "<urn:x>"


def test_literal_language_switches_datatype():
    lit = Literal("hallo", language="de")
    assert lit.datatype.value.endswith("#langString")
    assert lit.nt == '"hallo"@de'


def test_datetime_literal_needs_offset():
    assert STAMP.lexical == "2012-05-11T01:26:15+02:00"
    with pytest.raises(TermError):
        Literal("2012-05-11T01:26:15", XSD.dateTime)
    with pytest.raises(TermError):
        Literal("yesterday", XSD.dateTime)


def test_literal_nt_escapes():
    assert Literal('a "b"\n').nt == '"a \\"b\\"\\n"'


def test_bnode_label():
    assert BNode("b0").nt == "_:b0"
    with pytest.raises(TermError):
        BNode("has-dash")


# -- graph ---------------------------------------------------------------------


def test_add_observed_at_to_empty_graph():
    g = add_triple(Graph(), Triple(EV1, OCED.observed_at, STAMP))
    assert len(g) == 1


def test_add_is_idempotent():
    g = Graph()
    t = Triple(EV1, OCED.observed_at, STAMP)
    g.add(t)
    g.add(t)
    assert len(g) == 1


def test_literal_subject_rejected():
    with pytest.raises(TermError):
        Graph().add(Triple(Literal("x"), RDF.type, OCED.Event))


def test_literal_or_bnode_predicate_rejected():
    with pytest.raises(TermError):
        Graph().add(Triple(EV1, BNode("p"), OCED.Event))


def test_match_on_empty_graph():
    assert match(Graph()) == []


def test_match_observed_at():
    g = Graph([Triple(EV1, RDF.type, OCED.Event), Triple(EV1, OCED.observed_at, STAMP)])
    assert match(g, EV1, OCED.observed_at) == [Triple(EV1, OCED.observed_at, STAMP)]


def test_remove_keeps_indexes_consistent():
    g = random_graph(random.Random(3), 80)
    for t in g.sorted()[::2]:
        g.remove(t)
    assert g._check_indexes()
    assert all(t in g for t in g.match())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 5))
def test_match_agrees_with_linear_scan(seed, mask):
    rng = random.Random(seed)
    g = random_graph(rng, 60)
    probe = rng.choice(g.sorted()) if len(g) else Triple(IRI(EX + "a"), IRI(EX + "b"), IRI(EX + "c"))
    s = probe.s if mask & 1 else None
    p = probe.p if mask & 2 else None
    o = probe.o if mask & 4 else None
    expected = sorted((t for t in g if (s is None or t.s == s) and (p is None or t.p == p)
                       and (o is None or t.o == o)), key=lambda t: t.nt)
    assert g.match(s, p, o) == expected
    assert g._check_indexes()


def test_graph_equality_and_union():
    a = Graph([Triple(EV1, RDF.type, OCED.Event)])
    b = Graph([Triple(EV1, OCED.observed_at, STAMP)])
    assert a | b == Graph(list(a) + list(b))
    assert a != b


# -- prefixes ------------------------------------------------------------------


def test_expand_curie_examples():
    pm = standard_prefixes()
    pm.bind("oced", "https://w3id.org/ocedo/core#")
    assert expand_curie(pm, "oced:Event") == IRI("https://w3id.org/ocedo/core#Event")
    assert expand_curie(pm, "rdf:object") == IRI("http://www.w3.org/1999/02/22-rdf-syntax-ns#object")
    with pytest.raises(UnknownPrefixError) as info:
        expand_curie(pm, "zz:X")
    assert info.value.prefix == "zz"


def test_compress_prefers_longest_namespace_and_safe_locals():
    pm = PrefixMap({"a": "http://x/", "b": "http://x/y/"})
    assert pm.compress(IRI("http://x/y/z")) == "b:z"
    assert pm.compress(IRI("http://x/y/z.w")) is None
    assert pm.compress(IRI("urn:other")) is None


def test_merged_keeps_left_bindings_and_order():
    left = PrefixMap({"a": "http://x/", "b": "http://y/"})
    right = PrefixMap({"b": "http://z/", "c": "http://w/"})
    assert left.merged(right).items() == [("a", "http://x/"), ("b", "http://y/"), ("c", "http://w/")]


# -- Turtle ----------------------------------------------------------------------


def test_parse_class_declaration_excerpt():
    text = """@prefix oced: <https://w3id.org/ocedo/core#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
oced:Event a owl:Class ; rdfs:label "Event" .
"""
    g, pm = parse_turtle(text)
    assert len(g.match(OCED.Event)) == 2
    assert "oced" in pm


def test_comments_only_document_is_empty():
    g, _ = parse_turtle("# nothing here\n   # still nothing\n")
    assert len(g) == 0


@pytest.mark.parametrize("text", [
    "<urn:a> <urn:b> ( <urn:c> ) .",
    "<urn:a> <urn:b> [ <urn:c> <urn:d> ] .",
    "@base <http://x/> .",
    "<a> <urn:b> <urn:c> .",
])
def test_unsupported_constructs(text):
    with pytest.raises(TurtleError) as info:
        parse_turtle(text)
    assert info.value.kind == "unsupported"


def test_syntax_error_carries_line_and_column():
    with pytest.raises(TurtleError) as info:
        parse_turtle("<urn:a> <urn:b> <urn:c> .\n<urn:a> <urn:b> .\n")
    assert info.value.kind == "syntax"
    assert info.value.line == 2


def test_undeclared_prefix():
    with pytest.raises(TurtleError) as info:
        parse_turtle("zz:a zz:b zz:c .")
    assert info.value.kind == "prefix"


def test_literal_forms_parse():
    g, _ = parse_turtle('@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n'
                        '<urn:s> <urn:p> "a\\tb", """multi\nline""", \'single\', "x"@en-GB, '
                        '"5" ^^xsd:integer, "\\u00e9" .')
    objs = {t.o for t in g}
    assert Literal("a\tb") in objs
    assert Literal("multi\nline") in objs
    assert Literal("single") in objs
    assert Literal("x", language="en-GB") in objs
    assert Literal("5", IRI(XSD_NS + "integer")) in objs
    assert Literal("é") in objs


def test_empty_graph_serializes_to_prefixes_only():
    out = serialize_turtle(Graph(), standard_prefixes())
    lines = [ln for ln in out.splitlines() if ln]
    assert lines and all(ln.startswith("@prefix") for ln in lines)


def test_ocedo_round_trip():
    g, pm = builtin_ocedo()
    again, _ = parse_turtle(serialize_turtle(g, pm))
    assert again == g
    assert parse_turtle(ocedo_text())[0] == g


def test_serialization_is_sorted_and_puts_type_first():
    g = Graph([
        Triple(IRI(EX + "b"), RDFS.label, Literal("b")),
        Triple(IRI(EX + "b"), RDF.type, IRI(EX + "Z")),
        Triple(IRI(EX + "b"), RDF.type, IRI(EX + "A")),
        Triple(IRI(EX + "a"), RDFS.label, Literal("a")),
    ])
    out = serialize_turtle(g, example_prefixes())
    body = out.split("\n\n", 1)[1]
    assert body.index("ex:a ") < body.index("ex:b ")
    assert "ex:b a ex:A, ex:Z ;" in body


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trip_random_graphs(seed):
    g = random_graph(random.Random(seed), 40)
    text = serialize_turtle(g, example_prefixes())
    again, _ = parse_turtle(text)
    assert again == g
    assert serialize_turtle(again, example_prefixes()) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_single_triple_round_trip_without_prefixes(seed):
    rng = random.Random(seed)
    t = Triple(random_subject(rng), random_iri(rng), random_object(rng))
    again, _ = parse_turtle(serialize_turtle(Graph([t]), PrefixMap()))
    assert list(again) == [t]
