"""IRI constants for the vocabularies the toolchain speaks."""
from __future__ import annotations

from ..rdf.terms import IRI, OWL_NS, RDF_NS, RDFS_NS, XSD_NS

CORE_NS = "https://w3id.org/ocedo/core#"
AUX_NS = "https://w3id.org/ocedo/aux#"
EXT_NS = "https://w3id.org/ocedo/ext/bpic2013#"
RES_NS = "https://w3id.org/ocedr/res#"


class RDF:
    type = IRI(RDF_NS + "type")
    object = IRI(RDF_NS + "object")
    langString = IRI(RDF_NS + "langString")


class RDFS:
    subClassOf = IRI(RDFS_NS + "subClassOf")
    subPropertyOf = IRI(RDFS_NS + "subPropertyOf")
    domain = IRI(RDFS_NS + "domain")
    range = IRI(RDFS_NS + "range")
    label = IRI(RDFS_NS + "label")
    comment = IRI(RDFS_NS + "comment")


class OWL:
    Class = IRI(OWL_NS + "Class")
    ObjectProperty = IRI(OWL_NS + "ObjectProperty")
    DatatypeProperty = IRI(OWL_NS + "DatatypeProperty")
    disjointWith = IRI(OWL_NS + "disjointWith")


class XSD:
    dateTime = IRI(XSD_NS + "dateTime")
    string = IRI(XSD_NS + "string")


class OCED:
    Event = IRI(CORE_NS + "Event")
    Object = IRI(CORE_NS + "Object")
    observed_at = IRI(CORE_NS + "observed_at")
    event_attribute = IRI(CORE_NS + "event_attribute")
    object_attribute = IRI(CORE_NS + "object_attribute")
    object_relation = IRI(CORE_NS + "object_relation")


class AUX:
    EventType = IRI(AUX_NS + "EventType")
    EventAttribute = IRI(AUX_NS + "EventAttribute")
    ObjectType = IRI(AUX_NS + "ObjectType")
    ObjectAttribute = IRI(AUX_NS + "ObjectAttribute")
    ObjectRelation = IRI(AUX_NS + "ObjectRelation")
    Observe = IRI(AUX_NS + "Observe")
    qualifier = IRI(AUX_NS + "qualifier")
    from_ = IRI(AUX_NS + "from")
    to = IRI(AUX_NS + "to")
    event = IRI(AUX_NS + "event")
    object = IRI(AUX_NS + "object")
    has_object_attribute = IRI(AUX_NS + "has_object_attribute")


ROOTS = (OCED.Event, OCED.Object)
