from __future__ import annotations

import pytest

from helpers import synthetic_xes
from oced_forge.xes import XesError, parse_xes, write_xes

ONE_EVENT_KEYS = [
    "concept:name", "lifecycle:transition", "org:resource", "org:group", "product",
    "impact", "organization involved", "org:role", "time:timestamp",
]


def test_one_event_fixture(fixtures):
    with open(fixtures / "bpic2013_one_event.xes", "rb") as fh:
        log = parse_xes(fh, "bpic2013")
    assert len(log.traces) == 1
    trace = log.traces[0]
    assert trace.get("concept:name").lexical == "1-364285768"
    assert len(trace.events) == 1 and log.event_count == 1
    event = trace.events[0]
    assert sorted(event.keys()) == sorted(ONE_EVENT_KEYS)
    assert event.get("org:resource").lexical == "Siebel"
    assert event.get("time:timestamp").type == "date"
    assert event.get("time:timestamp").value.utcoffset().total_seconds() == 7200
    assert log.warnings == ()


def test_zero_traces():
    log = parse_xes('<log xes.version="1.0"><string key="concept:name" value="empty"/></log>')
    assert log.traces == ()
    assert log.event_count == 0
    assert log.attributes[0].lexical == "empty"


def test_unknown_element_warns_but_keeps_event():
    log = parse_xes('<log><trace><event><string key="a" value="1"/>'
                    '<duration key="x"/></event></trace></log>')
    event = log.traces[0].events[0]
    assert event.keys() == ["a"]
    assert len(log.warnings) == 1
    assert "duration" in log.warnings[0].message
    assert log.warnings[0].line == 1


def test_typed_values():
    log = parse_xes('<log><trace><event>'
                    '<int key="n" value="42"/><float key="f" value="2.5"/>'
                    '<boolean key="b" value="true"/><id key="i" value="abc"/>'
                    '</event></trace></log>')
    e = log.traces[0].events[0]
    assert (e.get("n").value, e.get("f").value, e.get("b").value, e.get("i").value) == (42, 2.5, True, "abc")


def test_bad_value_is_skipped_with_warning():
    log = parse_xes('<log><trace><event><int key="n" value="many"/></event></trace></log>')
    assert log.traces[0].events[0].keys() == []
    assert "invalid int" in log.warnings[0].message


def test_duplicate_key_last_wins():
    log = parse_xes('<log><trace><event><string key="k" value="1"/>'
                    '<string key="k" value="2"/></event></trace></log>')
    assert log.traces[0].events[0].get("k").lexical == "2"
    assert "duplicate" in log.warnings[0].message


def test_list_children_are_kept():
    log = parse_xes('<log><trace><event><list key="l"><values>'
                    '<string key="x" value="1"/><string key="y" value="2"/>'
                    '</values></list></event></trace></log>')
    attr = log.traces[0].events[0].get("l")
    assert [c.key for c in attr.children] == ["x", "y"]
    again = parse_xes(write_xes(log))
    assert again.traces == log.traces
    assert "<values>" in write_xes(log)


def test_wrong_root_is_an_error():
    with pytest.raises(XesError) as info:
        parse_xes("<trace/>", "x")
    assert info.value.line == 1


def test_malformed_xml_reports_position():
    with pytest.raises(XesError) as info:
        parse_xes("<log>\n<trace>\n</log>", "broken")
    assert info.value.line == 3
    assert info.value.source == "broken"


def test_write_then_reparse_is_structurally_equal(fixtures):
    for text in [(fixtures / "bpic2013_one_event.xes").read_text(), synthetic_xes(4, 3, seed=9)]:
        log = parse_xes(text, "s")
        again = parse_xes(write_xes(log), "s")
        assert again.traces == log.traces
        assert again.attributes == log.attributes
