"""End-to-end acceptance suite.

Each test covers one numbered criterion, prints a single pass/fail line, and
enforces the stated runtime bounds where given.  Exhaustive scans run over the
session-scoped corpus of all skew braces on groups of order up to 8 plus the
closed-form catalog entries.
"""

import itertools
import time

import numpy as np
import pytest

from skewbrace import (
    annihilator,
    annihilator_series,
    brace_2_4,
    brace_p_cubed,
    brace_p_p2,
    coincidence_check_W1,
    condition_4_2_check,
    core_of,
    enumerate_braces_on,
    family,
    left_series,
    lv_isoclinic,
    marginal_left_ideal,
    named_group,
    right_series,
    validate_brace,
    w_isoclinism_search,
)
from skewbrace.brace import classify_subset, is_two_sided, lambda_image_normalized_by_inn
from skewbrace.catalog import search_strict_verbal_inclusion
from skewbrace.groups import (
    ascending_term,
    group_n_isoclinism,
    lower_central_series,
    nth_term,
    right_normed_commutator,
    subgroup_generated,
    upper_central_series,
)
from skewbrace.groups_catalog import cyclic
from skewbrace.words import (
    comm_word,
    left_normed,
    marginal_subgroup,
    right_normed,
    verbal_dot_subgroup,
    verbal_sub_skew_brace,
    verbal_subgroup,
)


@pytest.fixture(scope="module")
def closed_form_braces():
    return {
        "ex1-2x4": brace_2_4().brace,
        "ex2-one": brace_p_p2(3, "one").brace,
        "ex2-nonresidue": brace_p_p2(3, "nonresidue").brace,
        "ex3-p3": brace_p_cubed(3).brace,
    }


def test_criterion_01_example_1(acceptance_report):
    t0 = time.perf_counter()
    A = brace_2_4().brace
    ok = (
        len(left_series(A).term(2)) == 4
        and left_series(A).term(3).members == {A.identity}
        and len(annihilator(A)) == 2
        and len(annihilator_series(A).term(2)) == 4
    )
    m2 = marginal_left_ideal(A, family("Wn", 2))
    core = core_of(A, m2)
    ok = ok and len(m2) == A.order and len(core) == A.order
    ok = ok and annihilator_series(A).term(2).members < core.members
    elapsed = time.perf_counter() - t0
    acceptance_report(
        1, f"example brace on Z/2xZ/4 reproduced in {elapsed:.2f}s", ok and elapsed < 1.0
    )


def test_criterion_02_example_2(acceptance_report):
    t0 = time.perf_counter()
    ok = True
    for kind in ("one", "nonresidue"):
        A = brace_p_p2(3, kind).brace
        ok = ok and left_series(A).orders() == [27, 9, 1]
        ok = ok and len(annihilator(A)) == 3
        ok = ok and len(annihilator_series(A).term(2)) == 9
        ok = ok and len(marginal_left_ideal(A, family("Wn", 2))) == 27
        ok = ok and condition_4_2_check(A)
    elapsed = time.perf_counter() - t0
    acceptance_report(
        2, f"order-27 braces on Z/3xZ/9 reproduced in {elapsed:.1f}s", ok and elapsed < 30
    )


def test_criterion_03_example_3(acceptance_report):
    t0 = time.perf_counter()
    A = brace_p_cubed(3).brace
    ok = (
        left_series(A).orders() == [27, 9, 1]
        and len(annihilator(A)) == 3
        and len(annihilator_series(A).term(2)) == 9
        and condition_4_2_check(A)
    )
    elapsed = time.perf_counter() - t0
    acceptance_report(
        3, f"order-27 brace on (Z/3)^3 reproduced in {elapsed:.1f}s", ok and elapsed < 30
    )


def test_criterion_04_annihilator_as_marginal(
    acceptance_report, closed_form_braces, small_brace_corpus
):
    W1 = family("Wn", 1)
    checked = 0
    ok = True
    for A in list(closed_form_braces.values()) + [b for _, b in small_brace_corpus]:
        ok = ok and annihilator(A).members == marginal_left_ideal(A, W1).members
        checked += 1
    acceptance_report(4, f"Ann = M_W1 on {checked} braces", ok)


def test_criterion_05_ann_n_in_marginal(acceptance_report, closed_form_braces):
    ok = True
    for A in closed_form_braces.values():
        tower = annihilator_series(A)
        for n in (2, 3):
            m = marginal_left_ideal(A, family("Wn", n))
            ok = ok and tower.term(n).members <= m.members
    acceptance_report(5, "Ann_n inside M_Wn for n in {2,3} on catalog braces", ok)


def test_criterion_06_right_star_verbal(acceptance_report, corpus_braces):
    ok = True
    for _, A in corpus_braces:
        for n in (2, 3, 4):
            W = family("right-star", n)
            sub = verbal_dot_subgroup(A, W)
            full = verbal_sub_skew_brace(A, W)
            ok = ok and sub.members == full.members
            ok = ok and classify_subset(A, sub.members).left_ideal
    acceptance_report(
        6, "dot-generation yields the right-star verbal left ideal (n <= 4)", ok
    )


def test_criterion_07_normalized_lambda_series_equality(
    acceptance_report, corpus_braces
):
    checked = 0
    ok = True
    for _, A in corpus_braces:
        normalized, _ = lambda_image_normalized_by_inn(A)
        if not normalized:
            continue
        checked += 1
        ls = left_series(A)
        for n in (2, 3, 4):
            v = verbal_sub_skew_brace(A, family("right-star", n))
            ok = ok and v.members == ls.term(n).members
    acceptance_report(
        7, f"A^n equals verbal term under normalized lambda image ({checked} braces)", ok
    )


def test_criterion_08_two_sided_central_star(acceptance_report, corpus_braces):
    checked = 0
    ok = True
    for _, A in corpus_braces:
        two_sided, _ = is_two_sided(A)
        if not two_sided:
            continue
        a2 = left_series(A).term(2).members
        if not a2 <= A.dot.center():
            continue
        checked += 1
        rs = right_series(A)
        for n in (2, 3, 4):
            W = family("left-star", n)
            v = verbal_sub_skew_brace(A, W)
            sub = verbal_dot_subgroup(A, W)
            ok = ok and v.members == rs.term(n).members
            ok = ok and sub.members == v.members
    acceptance_report(
        8, f"A^(n) equals left-star verbal term when two-sided and central ({checked} braces)", ok
    )


def _identity_suite(A, X, Y1, Y2):
    """Evaluate the star expansion identities on index arrays of equal shape.

    Returns (ok_31, ok_32, ok_33, ok_lambda); 3.2 is meaningful only for
    two-sided braces and is returned raw for the caller to gate.
    """
    dot, dinv, circ, st, lam = A.dot.op, A.dot.inv, A.circ.op, A.star_table, A.lam
    cinv = A.circ.inv

    lhs = st[X, dot[Y1, Y2]]
    rhs = dot[dot[dot[st[X, Y1], Y1], st[X, Y2]], dinv[Y1]]
    ok31 = np.array_equal(lhs, rhs)
    ok31 = ok31 and np.array_equal(
        st[X, dinv[Y1]], dot[dot[dinv[Y1], dinv[st[X, Y1]]], Y1]
    )

    lhs = st[dot[Y1, Y2], X]
    rhs = dot[dot[dot[dinv[Y2], st[Y1, X]], Y2], st[Y2, X]]
    ok32 = np.array_equal(lhs, rhs)
    ok32 = ok32 and np.array_equal(
        st[dinv[Y1], X], dot[dot[Y1, dinv[st[Y1, X]]], dinv[Y1]]
    )

    lhs = st[circ[Y1, Y2], X]
    rhs = dot[dot[st[Y1, st[Y2, X]], st[Y2, X]], st[Y1, X]]
    ok33 = np.array_equal(lhs, rhs)

    lhs = lam[Y1, st[X, Y2]]
    rhs = st[circ[circ[Y1, X], cinv[Y1]], lam[Y1, Y2]]
    ok_lam = np.array_equal(lhs, rhs)
    return ok31, ok32, ok33, ok_lam


def test_criterion_09_identity_suites(acceptance_report, corpus_braces):
    ok = True
    rng = np.random.default_rng(20260824)
    for _, A in corpus_braces:
        if A.order <= 16:
            ar = np.arange(A.order)
            X = ar[:, None, None]
            Y1 = ar[None, :, None]
            Y2 = ar[None, None, :]
        else:
            X, Y1, Y2 = rng.integers(0, A.order, size=(3, 100_000))
        ok31, ok32, ok33, ok_lam = _identity_suite(A, X, Y1, Y2)
        ok = ok and ok31 and ok33 and ok_lam
        if is_two_sided(A)[0]:
            ok = ok and ok32
    acceptance_report(
        9, "star expansion and lambda conjugation identities hold on the corpus", ok
    )


def test_criterion_10_group_suite(acceptance_report):
    ok = True
    for name in ("s3", "d4", "q8", "z2xz4", "heis3"):
        G = named_group(name)
        lower = lower_central_series(G)
        upper = upper_central_series(G)
        for n in (2, 3):
            gamma = nth_term(lower, n).members
            ok = ok and verbal_subgroup(G, right_normed(comm_word, n)).members == gamma
            ok = ok and verbal_subgroup(G, left_normed(comm_word, n)).members == gamma
        for n in (1, 2, 3):
            zeta = ascending_term(upper, n).members
            ok = (
                ok
                and marginal_subgroup(G, right_normed(comm_word, n + 1)).members == zeta
            )
            ok = (
                ok
                and marginal_subgroup(G, left_normed(comm_word, n + 1)).members == zeta
            )
        for n in (2, 3):
            for i in range(1, n + 1):
                zn = ascending_term(upper, n).members
                gm = nth_term(lower, n - i + 1).members
                target = ascending_term(upper, i - 1).members
                gens = {G.comm(z, g) for z in zn for g in gm}
                ok = ok and subgroup_generated(G, gens).members <= target
        rng = range(G.order)
        for x1, x2, x3 in itertools.product(rng, rng, rng):
            right = right_normed_commutator(G, [x1, x2, x3])
            conv = G.comm(G.comm(x3, x2), G.conj(G.comm(x2, x3), x1))
            left = G.comm(G.comm(x1, x2), x3)
            conv2 = right_normed_commutator(G, [G.conj(G.comm(x1, x2), x3), x2, x1])
            if right != conv or left != conv2:
                ok = False
                break
    acceptance_report(
        10, "verbal/marginal subgroups match central series; commutator conversions hold", ok
    )


def test_criterion_11_group_isoclinism(acceptance_report):
    t0 = time.perf_counter()
    G, H = named_group("d4"), named_group("q8")
    ok = group_n_isoclinism(G, H, 1) is not None
    ok = ok and group_n_isoclinism(G, H, 2) is not None
    for A, B in ((G, H), (G, G)):
        for n in (1, 2):
            if group_n_isoclinism(A, B, n) is not None:
                ok = ok and group_n_isoclinism(A, B, n + 1) is not None
    elapsed = time.perf_counter() - t0
    acceptance_report(
        11,
        f"D4 and Q8 are 1- and 2-isoclinic; witnesses lift ({elapsed:.1f}s)",
        ok and elapsed < 10,
    )


def test_criterion_12_w_monotonicity_and_coincidence(
    acceptance_report, small_brace_corpus
):
    braces = [A for _, A in small_brace_corpus]
    W1, W2 = family("Wn", 1), family("Wn", 2)
    ok = True
    isoclinic_pairs = []
    for i in range(len(braces)):
        for j in range(i, len(braces)):
            A, B = braces[i], braces[j]
            ok = ok and coincidence_check_W1(A, B)
            if w_isoclinism_search(A, B, W1) is not None:
                isoclinic_pairs.append((A, B))
    for A, B in isoclinic_pairs:
        ok = ok and w_isoclinism_search(A, B, W2) is not None
    acceptance_report(
        12,
        f"W1 isoclinism implies W2 on {len(isoclinic_pairs)} pairs; "
        "coincides with the two-word variant on all pairs",
        ok,
    )


def test_criterion_13_core_oracle(acceptance_report, small_brace_corpus):
    ok = True
    for _, A in small_brace_corpus:
        subsets = []
        elements = list(range(A.order))
        for r in range(1, A.order + 1):
            for comb in itertools.combinations(elements, r):
                s = frozenset(comb)
                if A.identity in s:
                    subsets.append((s, classify_subset(A, s)))
        ideals = [s for s, rep in subsets if rep.ideal]
        for z, rep in subsets:
            if not rep.sub_skew_brace:
                continue
            expected = max(
                (i for i in ideals if i <= z), key=len, default=frozenset()
            )
            got = core_of(A, _subset(z))
            ok = ok and got.members == expected
        for i_set in ideals:
            for j_set in ideals:
                prod = frozenset(
                    A.dot.mul(x, y) for x in i_set for y in j_set
                )
                circ_prod = frozenset(
                    A.circ.mul(x, y) for x in i_set for y in j_set
                )
                ok = ok and prod == circ_prod
                ok = ok and classify_subset(A, prod).ideal
    acceptance_report(
        13, "core matches brute-forced maximal ideal; ideal products agree", ok
    )


def _subset(members):
    from skewbrace.brace import BraceSubset

    return BraceSubset(frozenset(members), "sub-skew-brace")


def test_criterion_14_enumeration_sanity(acceptance_report):
    ok = True
    for p in (2, 3, 5):
        braces = enumerate_braces_on(cyclic(p))
        ok = ok and len(braces) == 1
    first = enumerate_braces_on(cyclic(4))
    second = enumerate_braces_on(cyclic(4))
    ok = ok and len(first) == 2 and first == second
    for A in first:
        ok = ok and validate_brace(A.dot.op, A.circ.op) == A
    acceptance_report(
        14, "cyclic-group enumeration counts, validity, and determinism", ok
    )


def test_criterion_15_open_question_search(acceptance_report):
    t0 = time.perf_counter()
    report = search_strict_verbal_inclusion(8, 4)
    elapsed = time.perf_counter() - t0
    ok = report.examined == 62 and isinstance(report.counterexamples, tuple)
    acceptance_report(
        15,
        f"strict-inclusion search over {report.examined} braces finished in "
        f"{elapsed:.1f}s (counterexamples: {len(report.counterexamples)})",
        ok and elapsed < 300,
    )
