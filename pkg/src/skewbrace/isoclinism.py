"""W-isoclinism of skew braces, plus the two-word 1-isoclinism variant.

A witness is a pair (xi, theta): xi between the quotients (by the core of
the marginal left ideal, or by the nth annihilator), theta between the verbal
sub-skew braces, with every word-evaluation square required to commute.
Absence is certified only by exhausting all candidate pairs.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .brace import (
    BraceMorphism,
    QuotientBrace,
    SkewBrace,
    brace_commutator_LV,
    brace_isomorphisms,
    brace_subset_table,
    classify_subset,
    quotient_brace,
)
from .errors import LeftNormedNotWellDefinedModAnnihilator, ShapeMismatch
from .groups import group_isomorphisms, subgroup_table
from .series import annihilator, annihilator_series
from .words import (
    Var,
    WordCollection,
    comm_word,
    core_of,
    eval_word,
    family,
    grid_axes,
    marginal_left_ideal,
    star_word,
    verbal_sub_skew_brace,
)


@dataclass(frozen=True)
class IsoclinismWitness:
    xi: BraceMorphism
    theta: BraceMorphism
    family: WordCollection
    quotient_kind: str  # "core-of-marginal" or "annihilator-n"
    theta_mode: str = "brace"  # "brace" or "dot-only"


@dataclass(frozen=True, eq=False)
class _SideData:
    quotient: QuotientBrace
    verbal_brace: SkewBrace
    verbal_elems: list[int]
    grids: tuple[np.ndarray, ...]  # one per word, V-local indices over Q-tuples


def _word_grid(A: SkewBrace, q: QuotientBrace, w, pos: np.ndarray) -> np.ndarray:
    k = max(1, _arity(w))
    axes = grid_axes(q.brace.order, k)
    lifted = [q.lift[ax] for ax in axes]
    vals = np.broadcast_to(
        np.asarray(eval_word(A, w, lifted)), (q.brace.order,) * k
    )
    local = pos[vals]
    assert (local >= 0).all(), "word value escaped the verbal sub-skew brace"
    return local


def _arity(w) -> int:
    from .words import arity

    return arity(w)


def _alt_lift_check(A: SkewBrace, q: QuotientBrace, w, pos: np.ndarray, grid):
    """Re-evaluate with different coset representatives; values must agree."""
    alt = np.asarray([max(c) for c in q.cosets], dtype=np.int64)
    if np.array_equal(alt, q.lift):
        return
    k = max(1, _arity(w))
    axes = grid_axes(q.brace.order, k)
    lifted = [alt[ax] for ax in axes]
    vals = np.broadcast_to(
        np.asarray(eval_word(A, w, lifted)), (q.brace.order,) * k
    )
    assert np.array_equal(pos[vals], grid), "word is not well-defined across lifts"


@functools.lru_cache(maxsize=None)
def _side_data(A: SkewBrace, W: WordCollection, quotient_kind: str) -> _SideData:
    if quotient_kind == "core-of-marginal":
        marginal = marginal_left_ideal(A, W)
        kernel = core_of(A, marginal)
    elif quotient_kind == "annihilator-n":
        m = re.fullmatch(r"W(\d+)", W.name)
        if m is None:
            raise LeftNormedNotWellDefinedModAnnihilator()
        n = int(m.group(1))
        kernel = annihilator_series(A).term(n)
    else:
        raise ValueError(f"unknown quotient kind {quotient_kind!r}")

    q = quotient_brace(A, kernel)
    verbal = verbal_sub_skew_brace(A, W)
    vb, elems = brace_subset_table(A, verbal.members)
    pos = np.full(A.order, -1, dtype=np.int64)
    for i, g in enumerate(elems):
        pos[g] = i
    grids = []
    for w in W.words:
        grid = _word_grid(A, q, w, pos)
        _alt_lift_check(A, q, w, pos, grid)
        grids.append(grid)
    return _SideData(q, vb, elems, tuple(grids))


def _pair_commutes(dataA: _SideData, dataB: _SideData, xi, theta) -> Optional[tuple]:
    """None if every square commutes, else (word_index, first failing tuple)."""
    xi_arr = np.asarray(xi.mapping)
    theta_arr = np.asarray(theta.mapping)
    for wi, (ga, gb) in enumerate(zip(dataA.grids, dataB.grids)):
        rhs = gb[np.ix_(*([xi_arr] * ga.ndim))] if ga.ndim else gb
        lhs = theta_arr[ga]
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            return wi, tuple(int(x) for x in bad)
    return None


def verify_w_isoclinism(
    A: SkewBrace,
    B: SkewBrace,
    W: WordCollection,
    xi: BraceMorphism,
    theta: BraceMorphism,
    quotient_kind: str = "core-of-marginal",
) -> tuple[bool, Optional[tuple]]:
    """Check a proposed witness pair; returns (ok, first failure or None)."""
    dataA = _side_data(A, W, quotient_kind)
    dataB = _side_data(B, W, quotient_kind)
    if len(xi.mapping) != dataA.quotient.brace.order or len(
        xi.mapping
    ) != dataB.quotient.brace.order:
        raise ShapeMismatch("xi does not match the quotient orders")
    if len(theta.mapping) != len(dataA.verbal_elems) or len(theta.mapping) != len(
        dataB.verbal_elems
    ):
        raise ShapeMismatch("theta does not match the verbal orders")
    failure = _pair_commutes(dataA, dataB, xi, theta)
    return failure is None, failure


def w_isoclinism_search(
    A: SkewBrace,
    B: SkewBrace,
    W: WordCollection,
    quotient_kind: str = "core-of-marginal",
) -> Optional[IsoclinismWitness]:
    """First verified witness, or None after exhausting all candidate pairs."""
    dataA = _side_data(A, W, quotient_kind)
    dataB = _side_data(B, W, quotient_kind)
    if dataA.quotient.brace.order != dataB.quotient.brace.order:
        return None
    if dataA.verbal_brace.order != dataB.verbal_brace.order:
        return None
    thetas = list(brace_isomorphisms(dataA.verbal_brace, dataB.verbal_brace))
    if not thetas:
        return None
    for xi in brace_isomorphisms(dataA.quotient.brace, dataB.quotient.brace):
        for theta in thetas:
            if _pair_commutes(dataA, dataB, xi, theta) is None:
                return IsoclinismWitness(xi, theta, W, quotient_kind)
    return None


def lv_isoclinic(A: SkewBrace, B: SkewBrace) -> Optional[IsoclinismWitness]:
    """1-isoclinism with quotients A/Ann(A) and commutators A'.

    theta preserves the brace structure when A' is a sub-skew brace on both
    sides; otherwise a dot-only group isomorphism is searched and the mode is
    recorded on the witness.
    """
    words = WordCollection(
        "LV", (comm_word(Var(1), Var(2)), star_word(Var(1), Var(2))), 2
    )

    def side(X: SkewBrace):
        q = quotient_brace(X, annihilator(X))
        prime = brace_commutator_LV(X)
        return q, prime

    qA, primeA = side(A)
    qB, primeB = side(B)
    if qA.brace.order != qB.brace.order or len(primeA) != len(primeB):
        return None

    brace_mode = (
        classify_subset(A, primeA.members).sub_skew_brace
        and classify_subset(B, primeB.members).sub_skew_brace
    )

    def make_data(X, q, prime):
        if brace_mode:
            vb, elems = brace_subset_table(X, prime.members)
        else:
            _, elems = subgroup_table(X.dot, prime.members)
            vb = None
        pos = np.full(X.order, -1, dtype=np.int64)
        for i, g in enumerate(elems):
            pos[g] = i
        grids = []
        for w in words.words:
            grid = _word_grid(X, q, w, pos)
            _alt_lift_check(X, q, w, pos, grid)
            grids.append(grid)
        return _SideData(q, vb, elems, tuple(grids))

    dataA = make_data(A, qA, primeA)
    dataB = make_data(B, qB, primeB)

    if brace_mode:
        thetas = list(brace_isomorphisms(dataA.verbal_brace, dataB.verbal_brace))
        mode = "brace"
    else:
        tA, _ = subgroup_table(A.dot, primeA.members)
        tB, _ = subgroup_table(B.dot, primeB.members)
        thetas = [
            BraceMorphism(m.mapping, True, False, True)
            for m in group_isomorphisms(tA, tB)
        ]
        mode = "dot-only"
    if not thetas:
        return None
    for xi in brace_isomorphisms(qA.brace, qB.brace):
        for theta in thetas:
            if _pair_commutes(dataA, dataB, xi, theta) is None:
                return IsoclinismWitness(xi, theta, words, "annihilator-1", mode)
    return None


def coincidence_check_W1(A: SkewBrace, B: SkewBrace) -> bool:
    """Whether W1-isoclinism (core quotient) and the two-word 1-isoclinism
    agree on existence for this pair."""
    w1 = w_isoclinism_search(A, B, family("Wn", 1)) is not None
    lv = lv_isoclinic(A, B) is not None
    return w1 == lv
