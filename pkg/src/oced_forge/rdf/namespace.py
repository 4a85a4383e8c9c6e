"""Prefix maps and CURIE handling."""
from __future__ import annotations

import re
from typing import Iterator, Optional

from .terms import IRI, OWL_NS, RDF_NS, RDFS_NS, XSD_NS

_PREFIX = re.compile(r"([A-Za-z][A-Za-z0-9_\-]*)?\Z")
# Local names we are willing to emit unescaped; anything else is written as <iri>.
_SAFE_LOCAL = re.compile(r"[A-Za-z0-9_]([A-Za-z0-9_\-]*)?\Z")


class UnknownPrefixError(KeyError):
    def __init__(self, prefix: str) -> None:
        super().__init__(prefix)
        self.prefix = prefix

    def __str__(self) -> str:
        return f"unknown prefix {self.prefix!r}"


class PrefixMap:
    """Ordered prefix -> namespace map.

    Order is registration order; rebinding an existing prefix keeps its slot.
    """

    def __init__(self, items: Optional[dict[str, str]] = None) -> None:
        self._ns: dict[str, str] = {}
        for prefix, ns in (items or {}).items():
            self.bind(prefix, ns)

    def bind(self, prefix: str, namespace: str | IRI) -> None:
        if not _PREFIX.match(prefix):
            raise ValueError(f"invalid prefix: {prefix!r}")
        ns = namespace.value if isinstance(namespace, IRI) else namespace
        IRI(ns)
        self._ns[prefix] = ns

    def __contains__(self, prefix: object) -> bool:
        return prefix in self._ns

    def __getitem__(self, prefix: str) -> str:
        try:
            return self._ns[prefix]
        except KeyError:
            raise UnknownPrefixError(prefix) from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._ns)

    def __len__(self) -> int:
        return len(self._ns)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrefixMap):
            return NotImplemented
        return list(self._ns.items()) == list(other._ns.items())

    def __repr__(self) -> str:
        return f"PrefixMap({self._ns!r})"

    def items(self) -> list[tuple[str, str]]:
        return list(self._ns.items())

    def copy(self) -> "PrefixMap":
        return PrefixMap(dict(self._ns))

    def merged(self, other: "PrefixMap") -> "PrefixMap":
        """Copy of self with other's prefixes appended (self wins on clashes)."""
        out = self.copy()
        for prefix, ns in other.items():
            if prefix not in out:
                out.bind(prefix, ns)
        return out

    def expand(self, curie: str) -> IRI:
        if ":" not in curie:
            raise ValueError(f"not a CURIE (missing ':'): {curie!r}")
        prefix, local = curie.split(":", 1)
        return IRI(self[prefix] + local)

    def compress(self, iri: IRI | str) -> Optional[str]:
        """Shortest safe CURIE for ``iri``, or None when no namespace fits."""
        value = iri.value if isinstance(iri, IRI) else iri
        best: Optional[tuple[int, str, str]] = None
        for prefix, ns in self._ns.items():
            if value.startswith(ns):
                local = value[len(ns):]
                if local and not _SAFE_LOCAL.match(local):
                    continue
                if best is None or len(ns) > best[0]:
                    best = (len(ns), prefix, local)
        if best is None:
            return None
        return f"{best[1]}:{best[2]}"


def standard_prefixes() -> PrefixMap:
    return PrefixMap({"rdf": RDF_NS, "rdfs": RDFS_NS, "owl": OWL_NS, "xsd": XSD_NS})


def expand_curie(pm: PrefixMap, curie: str) -> IRI:
    return pm.expand(curie)
