"""Tabular mapping descriptors (CSV)."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Optional

from ..rdf import IRI, PrefixMap, TermError, UnknownPrefixError
from ..vocab.terms import RES_NS

HEADER = ["directive", "group", "source", "target", "datatype", "extra"]
DIRECTIVES = ("namespace", "event_type", "timestamp", "event_attr", "object",
              "identity", "object_attr", "object_rel")


class DescriptorError(ValueError):
    def __init__(self, message: str, row: Optional[int] = None) -> None:
        super().__init__(f"row {row}: {message}" if row is not None else message)
        self.message = message
        self.row = row


@dataclass(frozen=True)
class EventTypeRule:
    match: tuple[tuple[str, str], ...]
    event_class: str
    event_class_iri: IRI


@dataclass(frozen=True)
class AttributeRule:
    source: str
    property: str
    datatype: str
    property_iri: IRI
    datatype_iri: IRI


@dataclass
class ObjectGroup:
    group_id: str
    object_class: str
    object_class_iri: IRI
    link_property: Optional[str]
    link_property_iri: Optional[IRI]
    scope: str  # "event" | "trace"
    identity_keys: list[str] = field(default_factory=list)
    attribute_rules: list[AttributeRule] = field(default_factory=list)


@dataclass(frozen=True)
class ObjectRelation:
    from_group: str
    to_group: str
    property: str
    property_iri: IRI


@dataclass
class Descriptor:
    resource_namespace: str = RES_NS
    event_type_rules: list[EventTypeRule] = field(default_factory=list)
    timestamp_key: Optional[str] = None
    event_attribute_rules: list[AttributeRule] = field(default_factory=list)
    object_groups: dict[str, ObjectGroup] = field(default_factory=dict)
    object_relations: list[ObjectRelation] = field(default_factory=list)

    def mapped_event_keys(self) -> set[str]:
        """XES event keys some rule reads."""
        keys = {k for rule in self.event_type_rules for k, _ in rule.match}
        if self.timestamp_key:
            keys.add(self.timestamp_key)
        keys.update(r.source for r in self.event_attribute_rules)
        for g in self.object_groups.values():
            if g.scope == "event":
                keys.update(g.identity_keys)
                keys.update(r.source for r in g.attribute_rules)
        return keys


def _parse_match(extra: str, row: int) -> tuple[tuple[str, str], ...]:
    pairs = []
    for part in extra.split("|"):
        if "=" not in part:
            raise DescriptorError(f"malformed match entry {part!r} (expected key=value)", row)
        k, v = part.split("=", 1)
        if not k:
            raise DescriptorError(f"empty key in match entry {part!r}", row)
        pairs.append((k, v))
    return tuple(pairs)


def _parse_scope(extra: str, row: int) -> str:
    if not extra:
        return "event"
    opts = dict(p.split("=", 1) if "=" in p else (p, "") for p in extra.split("|"))
    scope = opts.get("scope", "event")
    if scope not in ("event", "trace") or set(opts) - {"scope"}:
        raise DescriptorError(f"unsupported object options {extra!r} (expected scope=event|trace)", row)
    return scope


def parse_descriptor(text: str, prefixes: Optional[PrefixMap] = None) -> Descriptor:
    """Parse a descriptor CSV.

    CURIEs are resolved against ``prefixes`` (normally OCEDO's merged with the
    extension's). Without a prefix map CURIEs are not checked.
    """
    reader = csv.reader(io.StringIO(text.lstrip("﻿")))
    try:
        header = next(reader)
    except StopIteration:
        raise DescriptorError("empty descriptor: missing header") from None
    if header != HEADER:
        raise DescriptorError(f"header must be {','.join(HEADER)!r}, got {','.join(header)!r}", 1)

    d = Descriptor()
    pending_identity: list[tuple[int, str, str]] = []
    pending_attrs: list[tuple[int, str, AttributeRule]] = []
    pending_rels: list[tuple[int, ObjectRelation]] = []
    namespace_seen = False

    def resolve(curie: str, row: int, what: str) -> IRI:
        if not curie:
            raise DescriptorError(f"missing {what}", row)
        if prefixes is None:
            if ":" not in curie:
                raise DescriptorError(f"{what} {curie!r} is not a CURIE", row)
            return IRI("urn:unresolved:" + curie)
        try:
            return prefixes.expand(curie)
        except UnknownPrefixError as exc:
            raise DescriptorError(f"cannot resolve {what} {curie!r}: unknown prefix {exc.prefix!r}", row) from None
        except (ValueError, TermError) as exc:
            raise DescriptorError(f"cannot resolve {what} {curie!r}: {exc}", row) from None

    def attr_rule(source: str, target: str, datatype: str, row: int) -> AttributeRule:
        if not source:
            raise DescriptorError("missing source key", row)
        datatype = datatype or "xsd:string"
        return AttributeRule(source, target, datatype,
                             resolve(target, row, "property"), resolve(datatype, row, "datatype"))

    for rownum, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(HEADER):
            raise DescriptorError(f"expected {len(HEADER)} columns, got {len(row)}", rownum)
        directive, group, source, target, datatype, extra = (c.strip() for c in row)
        if directive == "namespace":
            if namespace_seen:
                raise DescriptorError("namespace declared twice", rownum)
            try:
                d.resource_namespace = IRI(target).value
            except TermError as exc:
                raise DescriptorError(f"invalid namespace: {exc}", rownum) from None
            namespace_seen = True
        elif directive == "event_type":
            if not extra:
                raise DescriptorError("event_type needs a match map in 'extra'", rownum)
            d.event_type_rules.append(
                EventTypeRule(_parse_match(extra, rownum), target, resolve(target, rownum, "event class")))
        elif directive == "timestamp":
            if d.timestamp_key is not None:
                raise DescriptorError("more than one timestamp row", rownum)
            if not source:
                raise DescriptorError("timestamp needs a source key", rownum)
            d.timestamp_key = source
        elif directive == "event_attr":
            d.event_attribute_rules.append(attr_rule(source, target, datatype, rownum))
        elif directive == "object":
            if not group:
                raise DescriptorError("object needs a group id", rownum)
            if group in d.object_groups:
                raise DescriptorError(f"duplicate group declaration {group!r}", rownum)
            d.object_groups[group] = ObjectGroup(
                group, target, resolve(target, rownum, "object class"),
                source or None, resolve(source, rownum, "link property") if source else None,
                _parse_scope(extra, rownum))
        elif directive == "identity":
            if not source:
                raise DescriptorError("identity needs a source key", rownum)
            pending_identity.append((rownum, group, source))
        elif directive == "object_attr":
            pending_attrs.append((rownum, group, attr_rule(source, target, datatype, rownum)))
        elif directive == "object_rel":
            pending_rels.append((rownum, ObjectRelation(group, source, target,
                                                        resolve(target, rownum, "relation property"))))
        else:
            raise DescriptorError(f"unknown directive {directive!r}", rownum)

    for rownum, group, source in pending_identity:
        if group not in d.object_groups:
            raise DescriptorError(f"identity row for undeclared group {group!r}", rownum)
        d.object_groups[group].identity_keys.append(source)
    for rownum, group, rule in pending_attrs:
        if group not in d.object_groups:
            raise DescriptorError(f"object_attr row for undeclared group {group!r}", rownum)
        d.object_groups[group].attribute_rules.append(rule)
    for rownum, rel in pending_rels:
        for g in (rel.from_group, rel.to_group):
            if g not in d.object_groups:
                raise DescriptorError(f"object_rel refers to undeclared group {g!r}", rownum)
        d.object_relations.append(rel)
    for g in d.object_groups.values():
        if not g.identity_keys:
            raise DescriptorError(f"group {g.group_id!r} has no identity key")
    if not d.event_type_rules and d.timestamp_key is None:
        raise DescriptorError("descriptor has no event_type rule and no timestamp")
    return d
