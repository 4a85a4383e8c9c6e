from __future__ import annotations

from pathlib import Path

import pytest

from oced_forge.mapper import parse_descriptor
from oced_forge.vocab import bpic2013_descriptor_text, bpic2013_text, builtin_ocedo, load_ocedd

FIXTURES = Path(__file__).parent / "fixtures"

# test_acceptance.py appends (criterion, passed, detail) here
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def ocedo():
    return builtin_ocedo()[0]


@pytest.fixture
def bpic_ext():
    return load_ocedd(bpic2013_text())


@pytest.fixture
def bpic_descriptor(bpic_ext):
    return parse_descriptor(bpic2013_descriptor_text(), builtin_ocedo()[1].merged(bpic_ext.prefixes))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
