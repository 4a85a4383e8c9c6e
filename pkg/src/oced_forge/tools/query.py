"""Basic graph pattern evaluation."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..rdf import IRI, Graph, Literal, PrefixMap, Term, Triple, TurtleError, render_term
from ..rdf.turtle import _Parser

_VAR = re.compile(r"\?[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Variable:
    name: str

    def __post_init__(self) -> None:
        if not _VAR.match("?" + self.name):
            raise ValueError(f"invalid variable name: ?{self.name}")

    @property
    def nt(self) -> str:
        return f"?{self.name}"


Slot = Union[Term, Variable]


class TriplePattern(tuple):
    __slots__ = ()

    def __new__(cls, s: Slot, p: Slot, o: Slot) -> "TriplePattern":
        return super().__new__(cls, (s, p, o))

    @property
    def variables(self) -> list[Variable]:
        return [x for x in self if isinstance(x, Variable)]


Solution = dict[str, Term]


def pattern_variables(patterns: Sequence[TriplePattern]) -> list[str]:
    """Variable names in order of first appearance."""
    names: list[str] = []
    for pat in patterns:
        for v in pat.variables:
            if v.name not in names:
                names.append(v.name)
    return names


def _substitute(slot: Slot, sol: Solution) -> Optional[Term]:
    if isinstance(slot, Variable):
        return sol.get(slot.name)
    return slot


def _extend(sol: Solution, pat: TriplePattern, t: Triple) -> Optional[Solution]:
    out = dict(sol)
    for slot, term in zip(pat, t):
        if isinstance(slot, Variable):
            bound = out.get(slot.name)
            if bound is None:
                out[slot.name] = term
            elif bound != term:
                return None
    return out


def _candidates(g: Graph, pat: TriplePattern, sol: Solution):
    s, p, o = (_substitute(x, sol) for x in pat)
    if isinstance(s, Literal) or (p is not None and not isinstance(p, IRI)):
        return ()
    return g.triples(s, p, o)


def _join_order_key(pat: TriplePattern, bound: set[str]) -> tuple[int, int]:
    # fewest unbound variables first; prefer patterns sharing a bound variable
    unbound = sum(1 for x in pat if isinstance(x, Variable) and x.name not in bound)
    shares = any(isinstance(x, Variable) and x.name in bound for x in pat)
    return (unbound, 0 if shares else 1)


def bgp_query(g: Graph, patterns: Sequence[TriplePattern]) -> list[Solution]:
    """All solutions of the conjunction of ``patterns`` over ``g``.

    Patterns are joined greedily, most-bound first; the result does not
    depend on that order. Solutions are sorted on their rendered terms, in
    variable first-appearance order.
    """
    if not patterns:
        raise ValueError("a basic graph pattern needs at least one triple pattern")
    remaining = list(patterns)
    solutions: list[Solution] = [{}]
    bound: set[str] = set()
    while remaining and solutions:
        remaining.sort(key=lambda pat: _join_order_key(pat, bound))
        pat = remaining.pop(0)
        nxt: list[Solution] = []
        for sol in solutions:
            for t in _candidates(g, pat, sol):
                ext = _extend(sol, pat, t)
                if ext is not None:
                    nxt.append(ext)
        solutions = nxt
        bound.update(v.name for v in pat.variables)
    if remaining:
        return []
    names = pattern_variables(patterns)
    return sorted(solutions, key=lambda sol: tuple(sol[n].nt for n in names))


# -- text syntax ----------------------------------------------------------------


class _PatternParser(_Parser):
    def slot(self, position: str) -> Slot:
        self.skip_ws()
        if self.peek() == "?":
            start = self.pos
            self.pos += 1
            m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.text, self.pos)
            if not m:
                raise self.error("malformed variable", start)
            self.pos = m.end()
            return Variable(m.group(0))
        if position == "s":
            return self.subject()
        if position == "p":
            return self.verb()
        return self.object()


def parse_patterns(text: str, prefixes: PrefixMap) -> list[TriplePattern]:
    """One triple pattern per line: CURIEs, ``<iri>``, literals, ``a`` or ``?var``.

    A trailing ``.`` and ``#`` comments are allowed.
    """
    patterns = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        p = _PatternParser(line)
        p.prefixes = prefixes
        try:
            s, pr, o = p.slot("s"), p.slot("p"), p.slot("o")
            p.skip_ws()
            if p.peek() == ".":
                p.pos += 1
                p.skip_ws()
            if p.pos < len(line):
                raise p.error(f"unexpected trailing text {line[p.pos:]!r}")
        except TurtleError as exc:
            raise TurtleError(exc.kind, exc.message, lineno, exc.column) from None
        patterns.append(TriplePattern(s, pr, o))
    if not patterns:
        raise ValueError("query contains no triple patterns")
    return patterns


def render_tsv(solutions: list[Solution], names: list[str], pm: Optional[PrefixMap] = None) -> str:
    lines = ["\t".join(f"?{n}" for n in names)]
    for sol in solutions:
        cells = []
        for n in names:
            term = sol[n]
            cells.append(render_term(term, pm) if pm is not None else term.nt)
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"
