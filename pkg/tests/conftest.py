"""Shared fixtures: catalog braces and the enumerated small-brace corpus.

Everything here is session-scoped because enumeration and validation are the
expensive parts of the suite; individual tests only read the results.
"""

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture()
def acceptance_report():
    """Record and print a single pass/fail line for an acceptance criterion."""

    def record(number: int, description: str, ok: bool):
        line = f"criterion {number:02d} {'PASS' if ok else 'FAIL'}: {description}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record

from skewbrace import (
    brace_2_4,
    brace_p_cubed,
    brace_p_p2,
    enumerate_braces_on,
    named_group,
    opposite_trivial_brace,
    small_groups,
    trivial_brace,
)


@pytest.fixture(scope="session")
def catalog_braces():
    """Name -> brace for the closed-form catalog entries."""
    return {
        "ex1-2x4": brace_2_4().brace,
        "ex2-one": brace_p_p2(3, "one").brace,
        "ex2-nonresidue": brace_p_p2(3, "nonresidue").brace,
        "ex3-p3": brace_p_cubed(3).brace,
    }


@pytest.fixture(scope="session")
def baseline_braces():
    """Trivial and opposite-trivial braces on a few named groups."""
    return {
        "trivial:z4": trivial_brace(named_group("z4")),
        "trivial:z2xz4": trivial_brace(named_group("z2xz4")),
        "trivial:s3": trivial_brace(named_group("s3")),
        "trivial:q8": trivial_brace(named_group("q8")),
        "opposite:s3": opposite_trivial_brace(named_group("s3")),
        "opposite:d4": opposite_trivial_brace(named_group("d4")),
    }


@pytest.fixture(scope="session")
def small_brace_corpus():
    """(group name, brace) for every skew brace on every group of order <= 8."""
    corpus = []
    for order in range(1, 9):
        for gname, G in small_groups(order):
            for A in enumerate_braces_on(G):
                corpus.append((gname, A))
    return corpus


@pytest.fixture(scope="session")
def corpus_braces(catalog_braces, baseline_braces, small_brace_corpus):
    """Every brace the property suites run over, labeled."""
    out = list(catalog_braces.items()) + list(baseline_braces.items())
    out += [(f"{g}#{i}", A) for i, (g, A) in enumerate(small_brace_corpus)]
    return out
