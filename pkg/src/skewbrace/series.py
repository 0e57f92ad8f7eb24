"""Series of a skew brace: left, right, verbal variants, annihilator tower.

Descending series stop at the first repeated term (included once) or at the
trivial subset; the ascending annihilator series stops at the first repeat or
at the whole brace.  stabilized_at records the index of the first stable term.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brace import (
    BraceSubset,
    SkewBrace,
    classify_subset,
    quotient_brace,
    star_closure,
)
from .errors import DescriptionsDisagree
from .groups import lower_central_series, nth_term
from .words import family, verbal_sub_skew_brace


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple[BraceSubset, ...]
    stabilized_at: int

    def orders(self) -> list[int]:
        return [len(t) for t in self.terms]

    def term(self, n: int) -> BraceSubset:
        """1-based term for descending kinds, 0-based for the annihilator."""
        if self.kind == "annihilator":
            return self.terms[min(n, len(self.terms) - 1)]
        return self.terms[min(n - 1, len(self.terms) - 1)]


def _descending(A: SkewBrace, kind: str, step, max_n: int, role: str) -> SeriesReport:
    whole = BraceSubset(frozenset(range(A.order)), "ideal")
    terms = [whole]
    while len(terms) < max_n:
        members = step(terms[-1].members)
        report = classify_subset(A, members)
        assert getattr(report, role.replace("-", "_"))
        terms.append(BraceSubset(members, role))
        if members == terms[-2].members or len(members) == 1:
            break
    stab = len(terms) - 1
    while stab > 0 and terms[stab - 1].members == terms[stab].members:
        stab -= 1
    return SeriesReport(kind, tuple(terms), stab)


def left_series(A: SkewBrace, max_n: int = 32) -> SeriesReport:
    """A^1 = A, A^{n+1} = A * A^n.  Every term is a left ideal."""
    everything = range(A.order)
    return _descending(
        A,
        "left",
        lambda prev: star_closure(A, everything, prev).members,
        max_n,
        "left-ideal",
    )


def right_series(A: SkewBrace, max_n: int = 32) -> SeriesReport:
    """A^{(1)} = A, A^{(n+1)} = A^{(n)} * A.  Every term is an ideal."""
    everything = range(A.order)
    return _descending(
        A,
        "right",
        lambda prev: star_closure(A, prev, everything).members,
        max_n,
        "ideal",
    )


def verbal_left_series(A: SkewBrace, max_n: int = 8) -> SeriesReport:
    """Terms V of the n-fold right-normed star word (a sub-skew brace each)."""
    terms = [BraceSubset(frozenset(range(A.order)), "sub-skew-brace")]
    for n in range(2, max_n + 1):
        v = verbal_sub_skew_brace(A, family("right-star", n))
        terms.append(v)
        if v.members == terms[-2].members or len(v) == 1:
            break
    stab = len(terms) - 1
    while stab > 0 and terms[stab - 1].members == terms[stab].members:
        stab -= 1
    return SeriesReport("verbal-left", tuple(terms), stab)


def verbal_right_series(A: SkewBrace, max_n: int = 8) -> SeriesReport:
    """Terms V of the n-fold left-normed star word."""
    terms = [BraceSubset(frozenset(range(A.order)), "sub-skew-brace")]
    for n in range(2, max_n + 1):
        v = verbal_sub_skew_brace(A, family("left-star", n))
        terms.append(v)
        if v.members == terms[-2].members or len(v) == 1:
            break
    stab = len(terms) - 1
    while stab > 0 and terms[stab - 1].members == terms[stab].members:
        stab -= 1
    return SeriesReport("verbal-right", tuple(terms), stab)


def annihilator(A: SkewBrace) -> BraceSubset:
    """Ann(A), computed from both defining descriptions and checked equal."""
    e = A.identity
    central_dot = (A.dot.op == A.dot.op.T).all(axis=1)
    central_circ = (A.circ.op == A.circ.op.T).all(axis=1)
    star_row_trivial = (A.star_table == e).all(axis=1)  # z * a = 1 for all a
    star_col_trivial = (A.star_table == e).all(axis=0)  # a * z = 1 for all a

    desc1 = central_dot & central_circ & star_row_trivial
    desc2 = central_dot & star_row_trivial & star_col_trivial
    if not np.array_equal(desc1, desc2):
        raise DescriptionsDisagree(
            "the two annihilator descriptions disagree; this is a bug"
        )
    members = frozenset(int(z) for z in np.flatnonzero(desc1))
    assert classify_subset(A, members).ideal
    return BraceSubset(members, "ideal")


def annihilator_series(A: SkewBrace, max_n: int = 32) -> SeriesReport:
    """[Ann_0 = 1, Ann_1, ...] by repeated quotient-and-pullback."""
    terms = [BraceSubset(frozenset({A.identity}), "ideal")]
    while len(terms) < max_n:
        q = quotient_brace(A, terms[-1])
        ann_q = annihilator(q.brace)
        pulled = frozenset(
            a for a in range(A.order) if int(q.projection[a]) in ann_q.members
        )
        nxt = BraceSubset(pulled, "ideal")
        terms.append(nxt)
        if nxt.members == terms[-2].members or len(nxt) == A.order:
            break
    stab = len(terms) - 1
    while stab > 0 and terms[stab - 1].members == terms[stab].members:
        stab -= 1
    return SeriesReport("annihilator", tuple(terms), stab)


def condition_4_2_check(A: SkewBrace) -> bool:
    """gamma_3(A,.) = gamma_3(A,o) = A^3 = 1 together with Ann_2(A) != A.

    When all four clauses hold, Core(M_{W2}) = M_{W2} = A and
    Ann_2 strictly below the core are asserted as consequences.
    """
    g3_dot = nth_term(lower_central_series(A.dot), 3)
    g3_circ = nth_term(lower_central_series(A.circ), 3)
    a3 = left_series(A).term(3)
    ann2 = annihilator_series(A).term(2)
    holds = (
        len(g3_dot) == 1
        and len(g3_circ) == 1
        and len(a3) == 1
        and len(ann2) != A.order
    )
    if holds:
        from .words import core_of, marginal_left_ideal

        m2 = marginal_left_ideal(A, family("Wn", 2))
        core = core_of(A, m2)
        assert len(m2) == A.order and len(core) == A.order
        assert ann2.members < core.members
    return holds
