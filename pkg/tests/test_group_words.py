"""Verbal and marginal subgroups of groups, commutator identities, and group
n-isoclinism, exercised on a fixed corpus of small groups."""

import itertools

import pytest

from skewbrace import named_group
from skewbrace.errors import WordUsesCircOnGroup
from skewbrace.groups import (
    ascending_term,
    group_n_isoclinism,
    lower_central_series,
    nth_term,
    right_normed_commutator,
    subgroup_generated,
    upper_central_series,
)
from skewbrace.words import (
    Var,
    comm_word,
    family,
    left_normed,
    marginal_subgroup,
    right_normed,
    star_word,
    verbal_subgroup,
)

CORPUS = ["s3", "d4", "q8", "z2xz4", "heis3"]


def _groups():
    return [(name, named_group(name)) for name in CORPUS]


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("n", [2, 3])
def test_verbal_equals_lower_central(name, n):
    G = named_group(name)
    gamma = nth_term(lower_central_series(G), n)
    right = verbal_subgroup(G, right_normed(comm_word, n))
    left = verbal_subgroup(G, left_normed(comm_word, n))
    assert right.members == gamma.members
    assert left.members == gamma.members


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_marginal_equals_upper_central(name, n):
    G = named_group(name)
    zeta = ascending_term(upper_central_series(G), n)
    right = marginal_subgroup(G, right_normed(comm_word, n + 1))
    left = marginal_subgroup(G, left_normed(comm_word, n + 1))
    assert right.members == zeta.members
    assert left.members == zeta.members


def test_marginal_of_comm_is_center():
    G = named_group("d4")
    assert marginal_subgroup(G, comm_word(Var(1), Var(2))).members == G.center()


def test_verbal_rejects_circ_words():
    with pytest.raises(WordUsesCircOnGroup):
        verbal_subgroup(named_group("s3"), star_word(Var(1), Var(2)))


@pytest.mark.parametrize("name", CORPUS)
def test_commutator_expansion_identities(name):
    """[x,y1y2] = [x,y1][^{y1}x,^{y1}y2] and [x,y^-1] = [^{y^-1}x,y]^-1,
    plus the left-normed mirror versions."""
    G = named_group(name)
    rng = range(G.order)
    for x, y1, y2 in itertools.product(rng, rng, rng):
        lhs = G.comm(x, G.mul(y1, y2))
        rhs = G.mul(G.comm(x, y1), G.comm(G.conj(y1, x), G.conj(y1, y2)))
        assert lhs == rhs
        lhs2 = G.comm(G.mul(y1, y2), x)
        rhs2 = G.mul(G.comm(G.conj(y1, y2), G.conj(y1, x)), G.comm(y1, x))
        assert lhs2 == rhs2
    for x, y in itertools.product(rng, rng):
        yi = G.inverse(y)
        assert G.comm(x, yi) == G.inverse(G.comm(G.conj(yi, x), y))
        assert G.comm(yi, x) == G.inverse(G.comm(y, G.conj(yi, x)))


@pytest.mark.parametrize("name", CORPUS)
def test_conjugation_distributes_over_normed_commutators(name):
    G = named_group(name)
    rng = range(G.order)
    for y, x1, x2, x3 in itertools.product(rng, rng, rng, rng):
        lhs = G.conj(y, right_normed_commutator(G, [x1, x2, x3]))
        rhs = right_normed_commutator(
            G, [G.conj(y, x1), G.conj(y, x2), G.conj(y, x3)]
        )
        assert lhs == rhs
        lhs_l = G.conj(y, G.comm(G.comm(x1, x2), x3))
        rhs_l = G.comm(G.comm(G.conj(y, x1), G.conj(y, x2)), G.conj(y, x3))
        assert lhs_l == rhs_l


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("n", [2, 3])
def test_central_commutator_inclusion(name, n):
    """[zeta_n(G), gamma_{n-i+1}(G)] is contained in zeta_{i-1}(G)."""
    G = named_group(name)
    upper = upper_central_series(G)
    lower = lower_central_series(G)
    for i in range(1, n + 1):
        zn = ascending_term(upper, n)
        gm = nth_term(lower, n - i + 1)
        target = ascending_term(upper, i - 1).members
        gens = {G.comm(z, g) for z in zn.members for g in gm.members}
        assert subgroup_generated(G, gens).members <= target


@pytest.mark.parametrize("name", CORPUS)
def test_right_left_normed_conversion(name):
    """The right-normed triple commutator rewrites as a left-normed one and
    vice versa, using conjugated arguments."""
    G = named_group(name)
    rng = range(G.order)
    for x1, x2, x3 in itertools.product(rng, rng, rng):
        right = right_normed_commutator(G, [x1, x2, x3])
        conv = G.comm(G.comm(x3, x2), G.conj(G.comm(x2, x3), x1))
        assert right == conv
        left = G.comm(G.comm(x1, x2), x3)
        conv2 = right_normed_commutator(
            G, [G.conj(G.comm(x1, x2), x3), x2, x1]
        )
        assert left == conv2
    for x1, x2 in itertools.product(rng, rng):
        assert G.comm(x1, x2) == right_normed_commutator(G, [x1, x2])


def test_wn_family_on_group_context_matches():
    W = family("Wn", 2)
    assert W.arity == 3 and len(W.words) == 3


@pytest.mark.parametrize("n", [1, 2])
def test_d4_q8_n_isoclinic(n):
    G = named_group("d4")
    H = named_group("q8")
    witness = group_n_isoclinism(G, H, n)
    assert witness is not None


def test_d4_not_1_isoclinic_to_abelian():
    assert group_n_isoclinism(named_group("d4"), named_group("z2xz4"), 1) is None


@pytest.mark.parametrize("name", ["s3", "d4", "q8"])
def test_n_isoclinism_reflexive(name):
    G = named_group(name)
    for n in (1, 2):
        assert group_n_isoclinism(G, G, n) is not None


def test_witness_lifts_to_next_level():
    """A found n-witness pair implies an (n+1)-witness is found."""
    pairs = [("d4", "q8"), ("s3", "s3"), ("heis3", "heis3")]
    for a, b in pairs:
        G, H = named_group(a), named_group(b)
        for n in (1, 2):
            if group_n_isoclinism(G, H, n) is not None:
                assert group_n_isoclinism(G, H, n + 1) is not None
