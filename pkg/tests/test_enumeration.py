"""Brace enumeration against independent oracles and known counts."""

import itertools

import numpy as np
import pytest

from skewbrace import enumerate_braces_on, named_group, validate_brace
from skewbrace.brace import brace_isomorphisms
from skewbrace.catalog import search_strict_verbal_inclusion
from skewbrace.errors import OrderExceedsCap, SkewBraceError
from skewbrace.groups_catalog import cyclic


def affine_oracle_z4():
    """Independent construction: every skew brace on cyclic dot has
    a o b = a + u_a b for a unit map u with u_{a + u_a b} = u_a u_b."""
    out = []
    units = (1, 3)
    for choice in itertools.product(units, repeat=3):
        u = (1,) + choice
        if any(
            u[(a + u[a] * b) % 4] != (u[a] * u[b]) % 4
            for a in range(4)
            for b in range(4)
        ):
            continue
        circ = np.array([[(a + u[a] * b) % 4 for b in range(4)] for a in range(4)])
        try:
            out.append(validate_brace(cyclic(4).op, circ))
        except SkewBraceError:
            pytest.fail("oracle construction produced an invalid brace")
    # dedup up to brace isomorphism
    unique = []
    for A in out:
        if not any(next(brace_isomorphisms(A, B), None) for B in unique):
            unique.append(A)
    return unique


def test_z4_against_affine_oracle():
    oracle = affine_oracle_z4()
    assert len(oracle) == 2
    enumerated = enumerate_braces_on(cyclic(4))
    assert len(enumerated) == 2
    for A in oracle:
        assert any(
            next(brace_isomorphisms(A, B), None) is not None for B in enumerated
        )


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_cyclic_unique_brace(p):
    braces = enumerate_braces_on(cyclic(p))
    assert len(braces) == 1
    assert braces[0].is_trivial()


def test_enumeration_deterministic():
    a = enumerate_braces_on(named_group("s3"))
    b = enumerate_braces_on(named_group("s3"))
    assert len(a) == len(b) == 4
    for x, y in zip(a, b):
        assert x == y


def test_enumeration_duplicate_free(small_brace_corpus):
    by_group = {}
    for gname, A in small_brace_corpus:
        by_group.setdefault(gname, []).append(A)
    for braces in by_group.values():
        for i in range(len(braces)):
            for j in range(i + 1, len(braces)):
                assert next(brace_isomorphisms(braces[i], braces[j]), None) is None


def test_known_order_8_counts(small_brace_corpus):
    counts = {}
    for gname, A in small_brace_corpus:
        if A.order == 8:
            counts[gname] = counts.get(gname, 0) + 1
    assert counts == {"z8": 5, "z2xz4": 14, "z2xz2xz2": 8, "d4": 12, "q8": 8}
    assert sum(counts.values()) == 47


def test_all_enumerated_valid(small_brace_corpus):
    for _, A in small_brace_corpus:
        revalidated = validate_brace(A.dot.op, A.circ.op)
        assert revalidated == A


def test_cap_enforced():
    with pytest.raises(OrderExceedsCap):
        enumerate_braces_on(cyclic(17))
    with pytest.raises(OrderExceedsCap):
        enumerate_braces_on(cyclic(6), cap=4)


def test_strict_inclusion_search_order_4():
    report = search_strict_verbal_inclusion(4, 4)
    assert report.none_found
    assert report.examined == 7  # 1 + 1 + 1 + 4 braces of orders 1..4


def test_strict_inclusion_report_shape():
    report = search_strict_verbal_inclusion(6, 3)
    assert report.examined >= 6
    assert isinstance(report.counterexamples, tuple)
