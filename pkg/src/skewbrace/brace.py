"""The skew brace data model.

A skew brace is stored as two validated Cayley tables on a shared element set
together with the precomputed lambda table lambda[a][b] = a^-1 . (a o b).
Precomputing lambda (and the star table) makes word evaluation pure table
lookup.  Everything is immutable after validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import (
    BraceRelationFails,
    CircInvalid,
    DotInvalid,
    GroupValidationError,
    IdentityMismatch,
    LambdaNotAutomorphism,
    LambdaNotHomomorphism,
    NotAnIdeal,
    NotASubgroup,
)
from .groups import (
    GroupSubset,
    GroupTable,
    is_subgroup,
    is_normal_subgroup,
    subgroup_generated,
    subgroup_table,
    validate_group,
)


@dataclass(frozen=True, eq=False)
class SkewBrace:
    order: int
    dot: GroupTable
    circ: GroupTable
    lam: np.ndarray        # lam[a, b] = lambda_a(b)
    star_table: np.ndarray  # star[a, b] = lambda_a(b) . b^-1

    @property
    def identity(self) -> int:
        return self.dot.identity

    def star(self, a: int, b: int) -> int:
        return int(self.star_table[a, b])

    def circ_inv(self, a: int) -> int:
        return int(self.circ.inv[a])

    def is_trivial(self) -> bool:
        return bool(np.array_equal(self.dot.op, self.circ.op))

    def __eq__(self, other):
        return (
            isinstance(other, SkewBrace)
            and self.order == other.order
            and np.array_equal(self.dot.op, other.dot.op)
            and np.array_equal(self.circ.op, other.circ.op)
        )

    def __hash__(self):
        return hash((self.order, self.dot.op.tobytes(), self.circ.op.tobytes()))


@dataclass(frozen=True)
class BraceSubset:
    members: frozenset[int]
    role: str  # "dot-subgroup", "sub-skew-brace", "left-ideal" or "ideal"

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class BraceMorphism:
    mapping: tuple[int, ...]
    preserves_dot: bool
    preserves_circ: bool
    bijective: bool

    def __call__(self, a: int) -> int:
        return self.mapping[a]


@dataclass(frozen=True, eq=False)
class QuotientBrace:
    brace: SkewBrace
    cosets: tuple[frozenset[int], ...]
    projection: np.ndarray
    lift: np.ndarray


@dataclass(frozen=True)
class RoleReport:
    """Which structural roles a subset satisfies, each by direct check."""

    dot_subgroup: bool
    sub_skew_brace: bool
    left_ideal: bool
    ideal: bool

    def best_role(self) -> Optional[str]:
        if self.ideal:
            return "ideal"
        if self.left_ideal:
            return "left-ideal"
        if self.sub_skew_brace:
            return "sub-skew-brace"
        if self.dot_subgroup:
            return "dot-subgroup"
        return None


def _build_lambda(dot: GroupTable, circ: GroupTable) -> np.ndarray:
    return dot.op[dot.inv[:, None], circ.op]


def validate_brace(dot_table, circ_table) -> SkewBrace:
    """Validate the full skew brace axioms over all order^3 triples."""
    try:
        dot = dot_table if isinstance(dot_table, GroupTable) else validate_group(dot_table)
    except GroupValidationError as exc:
        raise DotInvalid(str(exc)) from exc
    try:
        circ = circ_table if isinstance(circ_table, GroupTable) else validate_group(circ_table)
    except GroupValidationError as exc:
        raise CircInvalid(str(exc)) from exc

    if dot.order != circ.order:
        raise CircInvalid(f"order mismatch: dot {dot.order} vs circ {circ.order}")
    if dot.identity != circ.identity:
        raise IdentityMismatch(dot.identity, circ.identity)
    n = dot.order

    # a o (b . c)  ==  (a o b) . a^-1 . (a o c)
    left = circ.op[:, dot.op]
    t1 = dot.op[circ.op, dot.inv[:, None]]
    right = dot.op[t1[:, :, None], circ.op[:, None, :]]
    mism = np.argwhere(left != right)
    if mism.size:
        a, b, c = (int(x) for x in mism[0])
        raise BraceRelationFails(a, b, c)

    lam = _build_lambda(dot, circ)

    # each lambda_a is an automorphism of (A, .)
    sorted_rows = np.sort(lam, axis=1)
    idx = np.arange(n)
    for a in range(n):
        if not np.array_equal(sorted_rows[a], idx):
            raise LambdaNotAutomorphism(a)
    hom_ok = lam[:, dot.op] == dot.op[lam[:, :, None], lam[:, None, :]]
    bad = np.argwhere(~hom_ok)
    if bad.size:
        raise LambdaNotAutomorphism(int(bad[0][0]))

    # a -> lambda_a is a homomorphism (A, o) -> Aut(A, .)
    comp = lam[np.arange(n)[:, None, None], lam[None, :, :]]  # lambda_a(lambda_b(c))
    mism = np.argwhere(lam[circ.op] != comp)
    if mism.size:
        a, b = int(mism[0][0]), int(mism[0][1])
        raise LambdaNotHomomorphism(a, b)

    # linking formulae (sanity; should follow from the axioms)
    ar = np.arange(n)
    assert np.array_equal(circ.op, dot.op[ar[:, None], lam]), "a o b != a . lambda_a(b)"
    assert np.array_equal(
        dot.op, circ.op[ar[:, None], lam[circ.inv[:], :]]
    ), "a . b != a o lambda_{bar a}(b)"
    assert np.array_equal(circ.inv, lam[circ.inv, dot.inv]), "bar a != lambda_{bar a}(a^-1)"
    assert np.array_equal(dot.inv, lam[ar, circ.inv]), "a^-1 != lambda_a(bar a)"

    star = dot.op[lam, dot.inv[None, :]]
    lam.setflags(write=False)
    star.setflags(write=False)
    return SkewBrace(order=n, dot=dot, circ=circ, lam=lam, star_table=star)


def trivial_brace_unchecked(G: GroupTable) -> SkewBrace:
    """The trivial brace a o b = a . b, built without re-running validation."""
    n = G.order
    lam = np.broadcast_to(np.arange(n), (n, n)).copy()
    star = np.broadcast_to(np.full(n, G.identity), (n, n)).copy()
    lam.setflags(write=False)
    star.setflags(write=False)
    return SkewBrace(order=n, dot=G, circ=G, lam=lam, star_table=star)


def star(A: SkewBrace, a: int, b: int) -> int:
    """a * b, computed from both defining expressions and checked equal."""
    via_lambda = int(A.dot.op[A.lam[a, b], A.dot.inv[b]])
    direct = int(
        A.dot.op[A.dot.op[A.dot.inv[a], A.circ.op[a, b]], A.dot.inv[b]]
    )
    assert via_lambda == direct
    return via_lambda


def star_closure(A: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> BraceSubset:
    """The subgroup of (A, .) generated by {x * y : x in X, y in Y}."""
    xs = np.asarray(sorted(set(X)), dtype=np.int64)
    ys = np.asarray(sorted(set(Y)), dtype=np.int64)
    if xs.size == 0 or ys.size == 0:
        return BraceSubset(frozenset({A.identity}), "dot-subgroup")
    vals = np.unique(A.star_table[np.ix_(xs, ys)])
    sub = subgroup_generated(A.dot, (int(v) for v in vals))
    return BraceSubset(sub.members, "dot-subgroup")


def _lambda_invariant(A: SkewBrace, members: frozenset[int]) -> bool:
    m = np.asarray(sorted(members))
    return bool(np.isin(A.lam[:, m], m).all())


def classify_subset(A: SkewBrace, S: Iterable[int]) -> RoleReport:
    members = frozenset(int(x) for x in S)
    dot_sub = is_subgroup(A.dot, members)
    sub_brace = dot_sub and is_subgroup(A.circ, members)
    left_ideal = dot_sub and _lambda_invariant(A, members)
    if left_ideal:
        # a left ideal is automatically circ-closed via a o b = a . lambda_a(b)
        assert is_subgroup(A.circ, members)
    ideal = (
        left_ideal
        and is_normal_subgroup(A.dot, members)
        and is_normal_subgroup(A.circ, members)
    )
    return RoleReport(dot_sub, sub_brace, left_ideal, ideal)


def sub_brace_closure(A: SkewBrace, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing the seed closed under both ops and inverses."""
    members = {A.identity} | {int(s) for s in seed}
    changed = True
    while changed:
        changed = False
        m = np.asarray(sorted(members))
        vals = set(
            int(v)
            for v in np.unique(
                np.concatenate(
                    [
                        A.dot.op[np.ix_(m, m)].ravel(),
                        A.circ.op[np.ix_(m, m)].ravel(),
                        A.dot.inv[m],
                        A.circ.inv[m],
                    ]
                )
            )
        )
        if not vals <= members:
            members |= vals
            changed = True
    return frozenset(members)


def left_ideal_closure(A: SkewBrace, S: Iterable[int]) -> BraceSubset:
    """Smallest left ideal containing S: dot-subgroup closed under every lambda_a."""
    members = subgroup_generated(A.dot, S).members
    while True:
        m = np.asarray(sorted(members))
        extra = set(int(v) for v in np.unique(A.lam[:, m])) - members
        if not extra:
            break
        members = subgroup_generated(A.dot, members | extra).members
    result = BraceSubset(members, "left-ideal")
    assert classify_subset(A, members).left_ideal
    return result


def ideal_closure(A: SkewBrace, S: Iterable[int]) -> BraceSubset:
    """Smallest ideal containing S (adds dot- and circ-conjugation closure)."""
    members = subgroup_generated(A.dot, S).members
    ar = np.arange(A.order)
    while True:
        m = np.asarray(sorted(members))
        extra = set(int(v) for v in np.unique(A.lam[:, m]))
        extra |= set(
            int(v) for v in np.unique(A.dot.op[A.dot.op[ar[:, None], m], A.dot.inv[ar][:, None]])
        )
        extra |= set(
            int(v)
            for v in np.unique(A.circ.op[A.circ.op[ar[:, None], m], A.circ.inv[ar][:, None]])
        )
        extra -= members
        if not extra:
            break
        members = subgroup_generated(A.dot, members | extra).members
    result = BraceSubset(members, "ideal")
    assert classify_subset(A, members).ideal
    return result


def quotient_brace(A: SkewBrace, I: BraceSubset | Iterable[int]) -> QuotientBrace:
    members = I.members if isinstance(I, BraceSubset) else frozenset(int(x) for x in I)
    if not classify_subset(A, members).ideal:
        raise NotAnIdeal(f"{sorted(members)} is not an ideal")

    m = np.asarray(sorted(members))
    proj = np.full(A.order, -1, dtype=np.int64)
    cosets: list[frozenset[int]] = []
    for g in range(A.order):
        if proj[g] >= 0:
            continue
        coset = frozenset(int(x) for x in A.dot.op[g, m])
        # dot- and circ-cosets of an ideal coincide
        assert coset == frozenset(int(x) for x in A.circ.op[g, m])
        for x in coset:
            proj[x] = len(cosets)
        cosets.append(coset)
    lift = np.asarray([min(c) for c in cosets], dtype=np.int64)
    dot_q = proj[A.dot.op[np.ix_(lift, lift)]]
    circ_q = proj[A.circ.op[np.ix_(lift, lift)]]
    brace = validate_brace(dot_q, circ_q)
    proj.setflags(write=False)
    lift.setflags(write=False)
    return QuotientBrace(brace=brace, cosets=tuple(cosets), projection=proj, lift=lift)


def is_two_sided(A: SkewBrace) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Whether the right brace relation (b.c) o a = (b o a).a^-1.(c o a) holds.

    Returns (True, None) or (False, witness (a, b, c))."""
    # index order: [b, c, a]
    left = A.circ.op[A.dot.op, :]
    t = A.dot.op[A.circ.op, A.dot.inv[None, :]]  # t[b, a] = (b o a) . a^-1
    right = A.dot.op[t[:, None, :], A.circ.op[None, :, :]]
    mism = np.argwhere(left != right)
    if mism.size:
        b, c, a = (int(x) for x in mism[0])
        return False, (a, b, c)
    return True, None


def lambda_image_normalized_by_inn(
    A: SkewBrace,
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether conj(b) lambda_a conj(b)^-1 is again some lambda row, for all a, b."""
    rows = {A.lam[a].tobytes() for a in range(A.order)}
    ar = np.arange(A.order)
    for b in range(A.order):
        cb = A.dot.op[A.dot.op[b, ar], A.dot.inv[b]]
        if np.array_equal(cb, ar):
            continue
        cb_inv = np.empty_like(cb)
        cb_inv[cb] = ar
        for a in range(A.order):
            if np.ascontiguousarray(cb[A.lam[a][cb_inv]]).tobytes() not in rows:
                return False, (b, a)
    return True, None


def brace_subset_table(
    A: SkewBrace, members: frozenset[int]
) -> tuple[SkewBrace, list[int]]:
    """Reindex a sub-skew brace as a standalone SkewBrace."""
    elems = sorted(members)
    pos = {g: i for i, g in enumerate(elems)}
    dot = [[pos[int(A.dot.op[a, b])] for b in elems] for a in elems]
    circ = [[pos[int(A.circ.op[a, b])] for b in elems] for a in elems]
    return validate_brace(dot, circ), elems


def _brace_fingerprint(A: SkewBrace):
    """A cheap isomorphism invariant used to fail searches fast."""
    pairs = sorted(
        (A.dot.element_order(a), A.circ.element_order(a)) for a in range(A.order)
    )
    return (
        A.order,
        A.dot.is_abelian(),
        A.circ.is_abelian(),
        tuple(pairs),
        tuple(sorted(len({int(x) for x in A.lam[a]}) for a in range(A.order))),
    )


def brace_isomorphisms(A: SkewBrace, B: SkewBrace) -> Iterator[BraceMorphism]:
    """Yield every bijection preserving both operations.

    Backtracks over a dot-generating set of A; candidates are pruned by the
    (dot order, circ order) pair of each element.
    """
    if A.order != B.order:
        return
    if A.order == 1:
        yield BraceMorphism((B.identity,), True, True, True)
        return
    if _brace_fingerprint(A) != _brace_fingerprint(B):
        return

    from .groups import _words_in_generators, generating_set

    gens = generating_set(A.dot)
    words = _words_in_generators(A.dot, gens)
    a_sig = [
        (A.dot.element_order(a), A.circ.element_order(a)) for a in range(A.order)
    ]
    b_sig = [
        (B.dot.element_order(b), B.circ.element_order(b)) for b in range(B.order)
    ]
    candidates = [[b for b in range(B.order) if b_sig[b] == a_sig[g]] for g in gens]

    def attempt(images: list[int]) -> Optional[tuple[int, ...]]:
        mapping = []
        for w in words:
            x = B.identity
            for i in w:
                x = int(B.dot.op[x, images[i]])
            mapping.append(x)
        if len(set(mapping)) != B.order:
            return None
        m = np.asarray(mapping)
        if not np.array_equal(m[A.dot.op], B.dot.op[np.ix_(m, m)]):
            return None
        if not np.array_equal(m[A.circ.op], B.circ.op[np.ix_(m, m)]):
            return None
        return tuple(mapping)

    for images in itertools.product(*candidates):
        mapping = attempt(list(images))
        if mapping is not None:
            yield BraceMorphism(mapping, True, True, True)


def brace_commutator_LV(A: SkewBrace) -> BraceSubset:
    """A' = subgroup of (A, .) generated by dot-commutators and star values."""
    comm = A.dot.op[A.dot.op[A.dot.op, A.dot.inv[:, None]], A.dot.inv[None, :]]
    gens = set(int(v) for v in np.unique(comm)) | set(
        int(v) for v in np.unique(A.star_table)
    )
    members = subgroup_generated(A.dot, gens).members
    role = classify_subset(A, members).best_role() or "dot-subgroup"
    return BraceSubset(members, role)
