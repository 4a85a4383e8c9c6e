"""Indexed in-memory triple set."""
from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .terms import IRI, Subject, Term, Triple, check_triple, triple_key


def _index_add(index: dict, a, b, c) -> None:
    inner = index.get(a)
    if inner is None:
        index[a] = {b: {c}}
        return
    leaf = inner.get(b)
    if leaf is None:
        inner[b] = {c}
    else:
        leaf.add(c)


def _index_remove(index: dict, a, b, c) -> None:
    inner = index[a]
    leaf = inner[b]
    leaf.discard(c)
    if not leaf:
        del inner[b]
        if not inner:
            del index[a]


class Graph:
    """A set of triples with subject-, predicate- and object-first indexes.

    Graphs are built by a single writer. Once construction is finished they
    are only read, and concurrent readers need no locking.
    """

    __slots__ = ("_triples", "_spo", "_pos", "_osp")

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        self._triples: set[Triple] = set()
        self._spo: dict = {}
        self._pos: dict = {}
        self._osp: dict = {}
        for t in triples:
            self.add(t)

    def add(self, t: Triple) -> "Graph":
        t = check_triple(t)
        if t in self._triples:
            return self
        self._triples.add(t)
        s, p, o = t
        _index_add(self._spo, s, p, o)
        _index_add(self._pos, p, o, s)
        _index_add(self._osp, o, s, p)
        return self

    def update(self, triples: Iterable[Triple]) -> "Graph":
        for t in triples:
            self.add(t)
        return self

    def remove(self, t: Triple) -> "Graph":
        if t not in self._triples:
            return self
        self._triples.discard(t)
        s, p, o = t
        _index_remove(self._spo, s, p, o)
        _index_remove(self._pos, p, o, s)
        _index_remove(self._osp, o, s, p)
        return self

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, t: object) -> bool:
        return t in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __repr__(self) -> str:
        return f"<Graph with {len(self)} triples>"

    def copy(self) -> "Graph":
        return Graph(self._triples)

    def __or__(self, other: "Graph") -> "Graph":
        g = self.copy()
        g.update(other)
        return g

    def triples(
        self,
        s: Optional[Subject] = None,
        p: Optional[IRI] = None,
        o: Optional[Term] = None,
    ) -> Iterator[Triple]:
        """Yield matching triples in no particular order, using the best index."""
        if s is not None:
            by_p = self._spo.get(s)
            if by_p is None:
                return
            if p is not None:
                objs = by_p.get(p, ())
                if o is not None:
                    if o in objs:
                        yield Triple(s, p, o)
                    return
                for o2 in objs:
                    yield Triple(s, p, o2)
                return
            if o is not None:
                for p2 in self._osp.get(o, {}).get(s, ()):
                    yield Triple(s, p2, o)
                return
            for p2, objs in by_p.items():
                for o2 in objs:
                    yield Triple(s, p2, o2)
            return
        if p is not None:
            by_o = self._pos.get(p)
            if by_o is None:
                return
            if o is not None:
                for s2 in by_o.get(o, ()):
                    yield Triple(s2, p, o)
                return
            for o2, subs in by_o.items():
                for s2 in subs:
                    yield Triple(s2, p, o2)
            return
        if o is not None:
            for s2, preds in self._osp.get(o, {}).items():
                for p2 in preds:
                    yield Triple(s2, p2, o)
            return
        yield from self._triples

    def match(
        self,
        s: Optional[Subject] = None,
        p: Optional[IRI] = None,
        o: Optional[Term] = None,
    ) -> list[Triple]:
        """Triples matching every bound slot, sorted on their N-Triples lines."""
        return sorted(self.triples(s, p, o), key=triple_key)

    def objects(self, s: Optional[Subject] = None, p: Optional[IRI] = None) -> set[Term]:
        if s is not None and p is not None:
            return set(self._spo.get(s, {}).get(p, ()))
        return {t.o for t in self.triples(s, p, None)}

    def subjects(self, p: Optional[IRI] = None, o: Optional[Term] = None) -> set[Subject]:
        if p is not None and o is not None:
            return set(self._pos.get(p, {}).get(o, ()))
        return {t.s for t in self.triples(None, p, o)}

    def predicates(self) -> set[IRI]:
        return set(self._pos)

    def sorted(self) -> list[Triple]:
        return sorted(self._triples, key=triple_key)

    def _check_indexes(self) -> bool:
        """True when all three indexes agree with the triple set (test hook)."""
        def flatten(index: dict, order) -> set[Triple]:
            out = set()
            for a, inner in index.items():
                for b, leaf in inner.items():
                    for c in leaf:
                        out.add(order(a, b, c))
            return out

        return (
            flatten(self._spo, lambda s, p, o: Triple(s, p, o)) == self._triples
            and flatten(self._pos, lambda p, o, s: Triple(s, p, o)) == self._triples
            and flatten(self._osp, lambda o, s, p: Triple(s, p, o)) == self._triples
        )


def add_triple(g: Graph, t: Triple) -> Graph:
    return g.add(t)


def match(
    g: Graph,
    s: Optional[Subject] = None,
    p: Optional[IRI] = None,
    o: Optional[Term] = None,
) -> list[Triple]:
    return g.match(s, p, o)
