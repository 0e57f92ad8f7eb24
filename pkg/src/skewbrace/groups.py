"""Finite groups as Cayley tables.

Elements are dense indices 0..order-1.  The identity may sit at any index; it
is located during validation.  All structures are immutable after
construction, so every function here is pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotASubgroup,
    NotClosed,
    NotNormal,
)


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its multiplication table."""

    order: int
    op: np.ndarray        # shape (order, order)
    identity: int
    inv: np.ndarray       # shape (order,)

    def mul(self, a: int, b: int) -> int:
        return int(self.op[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conj(self, g: int, a: int) -> int:
        """g a g^-1."""
        return int(self.op[self.op[g, a], self.inv[g]])

    def comm(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1."""
        return int(self.op[self.op[self.op[a, b], self.inv[a]], self.inv[b]])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = int(self.op[x, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.op, self.op.T))

    def center(self) -> frozenset[int]:
        mask = (self.op == self.op.T).all(axis=1)
        return frozenset(int(z) for z in np.flatnonzero(mask))

    def conjugacy_class(self, a: int) -> frozenset[int]:
        g = np.arange(self.order)
        return frozenset(int(x) for x in self.op[self.op[g, a], self.inv[g]])

    def __eq__(self, other):
        return (
            isinstance(other, GroupTable)
            and self.order == other.order
            and np.array_equal(self.op, other.op)
        )

    def __hash__(self):
        return hash((self.order, self.op.tobytes()))


@dataclass(frozen=True)
class GroupSubset:
    """A subset of element indices with a verified structural role."""

    members: frozenset[int]
    role: str  # "subgroup" or "normal-subgroup"

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True, eq=False)
class GroupQuotient:
    """Quotient G/N with coset representatives chosen as least indices."""

    table: GroupTable
    cosets: tuple[frozenset[int], ...]
    projection: np.ndarray  # element -> coset index
    lift: np.ndarray        # coset index -> least representative


@dataclass(frozen=True)
class Morphism:
    """An element mapping between two groups with verified properties."""

    mapping: tuple[int, ...]
    bijective: bool
    preserves_op: bool

    def __call__(self, a: int) -> int:
        return self.mapping[a]


def validate_group(op_table) -> GroupTable:
    """Check all group axioms for a square table; locate identity and inverses.

    Raises NotClosed, NotAssociative (with a witness triple), NoIdentity or
    NoInverse naming the first failed axiom.
    """
    op = np.ascontiguousarray(np.asarray(op_table, dtype=np.int64))
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise NotClosed(-1, -1, -1)
    n = op.shape[0]
    if n == 0:
        raise NoIdentity()

    bad = np.argwhere((op < 0) | (op >= n))
    if bad.size:
        r, c = (int(x) for x in bad[0])
        raise NotClosed(r, c, int(op[r, c]))

    # (a b) c  vs  a (b c), all triples at once
    left = op[op, :]
    right = op[:, op]
    mism = np.argwhere(left != right)
    if mism.size:
        a, b, c = (int(x) for x in mism[0])
        raise NotAssociative(a, b, c)

    idx = np.arange(n)
    ident = [e for e in range(n) if np.array_equal(op[e], idx) and np.array_equal(op[:, e], idx)]
    if not ident:
        raise NoIdentity()
    e = ident[0]

    inv = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        hits = np.flatnonzero(op[a] == e)
        if hits.size != 1 or op[hits[0], a] != e:
            raise NoInverse(a)
        inv[a] = hits[0]

    op.setflags(write=False)
    inv.setflags(write=False)
    return GroupTable(order=n, op=op, identity=e, inv=inv)


def subgroup_generated(G: GroupTable, seed: Iterable[int]) -> GroupSubset:
    """Smallest subgroup containing the seed: closure under op and inv."""
    members = {G.identity}
    frontier = list({int(s) for s in seed})
    for s in frontier:
        members.add(s)
        members.add(int(G.inv[s]))
    frontier = list(members)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(members):
                for x in (int(G.op[a, b]), int(G.op[b, a])):
                    if x not in members:
                        new.add(x)
        for x in list(new):
            new.add(int(G.inv[x]))
        members |= new
        frontier = list(new)
    role = "normal-subgroup" if _is_normal(G, members) else "subgroup"
    return GroupSubset(frozenset(members), role)


def is_subgroup(G: GroupTable, members: frozenset[int]) -> bool:
    if G.identity not in members:
        return False
    m = sorted(members)
    sub = G.op[np.ix_(m, m)]
    return bool(np.isin(sub, m).all()) and all(int(G.inv[a]) in members for a in m)


def _is_normal(G: GroupTable, members) -> bool:
    m = sorted(members)
    g = np.arange(G.order)
    conj = G.op[G.op[g[:, None], np.asarray(m)[None, :]], G.inv[g][:, None]]
    return bool(np.isin(conj, m).all())


def is_normal_subgroup(G: GroupTable, S: GroupSubset | frozenset[int]) -> bool:
    members = S.members if isinstance(S, GroupSubset) else S
    return is_subgroup(G, frozenset(members)) and _is_normal(G, members)


def _commutator_subgroup(G: GroupTable, A: Iterable[int], B: Iterable[int]) -> GroupSubset:
    gens = set()
    a_idx = np.asarray(sorted(A))
    b_idx = np.asarray(sorted(B))
    ab = G.op[np.ix_(a_idx, b_idx)]
    vals = G.op[G.op[ab, G.inv[a_idx][:, None]], G.inv[b_idx][None, :]]
    gens.update(int(v) for v in np.unique(vals))
    return subgroup_generated(G, gens)


def lower_central_series(G: GroupTable, max_n: int = 32) -> list[GroupSubset]:
    """[gamma_1, gamma_2, ...]; stops once the series stabilizes.

    The stabilized term is repeated once unless it is already trivial.
    """
    everything = frozenset(range(G.order))
    terms = [GroupSubset(everything, "normal-subgroup")]
    while len(terms) < max_n:
        nxt = _commutator_subgroup(G, range(G.order), terms[-1].members)
        terms.append(nxt)
        if nxt.members == terms[-2].members or len(nxt) == 1:
            break
    return terms


def upper_central_series(G: GroupTable, max_n: int = 32) -> list[GroupSubset]:
    """[zeta_0 = 1, zeta_1, ...]; stabilized term repeated once unless zeta = G."""
    terms = [GroupSubset(frozenset({G.identity}), "normal-subgroup")]
    while len(terms) < max_n:
        q = quotient_group(G, terms[-1])
        zq = q.table.center()
        pulled = frozenset(a for a in range(G.order) if int(q.projection[a]) in zq)
        nxt = GroupSubset(pulled, "normal-subgroup")
        terms.append(nxt)
        if nxt.members == terms[-2].members or len(nxt) == G.order:
            break
    return terms


def nth_term(series: Sequence[GroupSubset], n: int) -> GroupSubset:
    """Term at 1-based index n for descending series ([G, gamma_2, ...]).

    Indices past the stabilization point return the stable term.
    """
    return series[min(n - 1, len(series) - 1)]


def ascending_term(series: Sequence[GroupSubset], n: int) -> GroupSubset:
    """Term at 0-based index n for ascending series ([1, zeta_1, ...])."""
    return series[min(n, len(series) - 1)]


def quotient_group(G: GroupTable, N: GroupSubset | frozenset[int]) -> GroupQuotient:
    members = N.members if isinstance(N, GroupSubset) else frozenset(N)
    if not is_subgroup(G, members):
        raise NotASubgroup(f"{sorted(members)} is not a subgroup")
    if not _is_normal(G, members):
        g, s = next(
            (g, s)
            for g in range(G.order)
            for s in members
            if G.conj(g, s) not in members
        )
        raise NotNormal(g, s)

    m = np.asarray(sorted(members))
    coset_of: dict[frozenset[int], int] = {}
    proj = np.full(G.order, -1, dtype=np.int64)
    cosets: list[frozenset[int]] = []
    for g in range(G.order):
        if proj[g] >= 0:
            continue
        coset = frozenset(int(x) for x in G.op[g, m])
        coset_of[coset] = len(cosets)
        for x in coset:
            proj[x] = len(cosets)
        cosets.append(coset)
    lift = np.asarray([min(c) for c in cosets], dtype=np.int64)
    table = validate_group(proj[G.op[np.ix_(lift, lift)]])
    proj.setflags(write=False)
    lift.setflags(write=False)
    return GroupQuotient(table=table, cosets=tuple(cosets), projection=proj, lift=lift)


def subgroup_table(G: GroupTable, members: frozenset[int]) -> tuple[GroupTable, list[int]]:
    """Reindex a subgroup as a standalone GroupTable.

    Returns the table together with the sorted element list; position i of the
    list is element i of the new table.
    """
    elems = sorted(members)
    pos = {g: i for i, g in enumerate(elems)}
    sub = np.asarray(
        [[pos[int(G.op[a, b])] for b in elems] for a in elems], dtype=np.int64
    )
    return validate_group(sub), elems


def generating_set(G: GroupTable) -> list[int]:
    """A small generating set, found greedily from high-order elements."""
    if G.order == 1:
        return []
    by_order = sorted(range(G.order), key=lambda a: (-G.element_order(a), a))
    gens: list[int] = []
    closure: frozenset[int] = frozenset({G.identity})
    for a in by_order:
        if a in closure:
            continue
        gens.append(a)
        closure = subgroup_generated(G, gens).members
        if len(closure) == G.order:
            return gens
    return gens


def _words_in_generators(G: GroupTable, gens: list[int]) -> list[tuple[int, ...]]:
    """For every element, a word (sequence of generator positions) reaching it."""
    words: dict[int, tuple[int, ...]] = {G.identity: ()}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for i, s in enumerate(gens):
                t = int(G.op[g, s])
                if t not in words:
                    words[t] = words[g] + (i,)
                    nxt.append(t)
        frontier = nxt
    return [words[g] for g in range(G.order)]


def group_isomorphisms(G: GroupTable, H: GroupTable) -> Iterator[Morphism]:
    """Yield every isomorphism G -> H by backtracking on a generating set.

    Candidate images are pruned by element order and conjugacy-class size.
    """
    if G.order != H.order:
        return
    if G.order == 1:
        yield Morphism((H.identity,), True, True)
        return

    g_orders = [G.element_order(a) for a in range(G.order)]
    h_orders = [H.element_order(a) for a in range(H.order)]
    if sorted(g_orders) != sorted(h_orders):
        return
    g_cc = [len(G.conjugacy_class(a)) for a in range(G.order)]
    h_cc = [len(H.conjugacy_class(a)) for a in range(H.order)]

    gens = generating_set(G)
    words = _words_in_generators(G, gens)
    candidates = [
        [
            b
            for b in range(H.order)
            if h_orders[b] == g_orders[g] and h_cc[b] == g_cc[g]
        ]
        for g in gens
    ]

    def build(images: list[int]) -> Optional[tuple[int, ...]]:
        mapping = []
        for w in words:
            x = H.identity
            for i in w:
                x = int(H.op[x, images[i]])
            mapping.append(x)
        if len(set(mapping)) != H.order:
            return None
        m = np.asarray(mapping)
        if not np.array_equal(m[G.op], H.op[np.ix_(m, m)]):
            return None
        return tuple(mapping)

    def rec(pos: int, images: list[int]):
        if pos == len(gens):
            mapping = build(images)
            if mapping is not None:
                yield Morphism(mapping, True, True)
            return
        for b in candidates[pos]:
            yield from rec(pos + 1, images + [b])

    yield from rec(0, [])


def are_isomorphic(G: GroupTable, H: GroupTable) -> bool:
    return next(group_isomorphisms(G, H), None) is not None


def group_automorphisms(G: GroupTable) -> list[Morphism]:
    return list(group_isomorphisms(G, G))


def right_normed_commutator(G: GroupTable, elems: Sequence[int]) -> int:
    """[e_1, [e_2, [..., [e_{k-1}, e_k]]...]]."""
    x = elems[-1]
    for a in reversed(elems[:-1]):
        x = G.comm(a, x)
    return x


def group_n_isoclinism(
    G: GroupTable, H: GroupTable, n: int
) -> Optional[tuple[Morphism, Morphism]]:
    """Search for an n-isoclinism witness (xi, theta); None if none exists.

    xi runs over isomorphisms of the central quotients, theta over
    isomorphisms of the (n+1)st lower central terms, and the pair must make
    the right-normed commutator diagram commute on every tuple.
    """
    ucsG, ucsH = upper_central_series(G), upper_central_series(H)
    lcsG, lcsH = lower_central_series(G), lower_central_series(H)
    zG, zH = ascending_term(ucsG, n), ascending_term(ucsH, n)
    gG, gH = nth_term(lcsG, n + 1), nth_term(lcsH, n + 1)
    if G.order // len(zG) != H.order // len(zH) or len(gG) != len(gH):
        return None

    qG, qH = quotient_group(G, zG), quotient_group(H, zH)
    tG, elemsG = subgroup_table(G, gG.members)
    tH, elemsH = subgroup_table(H, gH.members)
    posG = {g: i for i, g in enumerate(elemsG)}
    posH = {g: i for i, g in enumerate(elemsH)}

    # commutator grids over quotient tuples, in local subgroup coordinates
    def grid(Gx, q, pos):
        k = n + 1
        shape = (q.table.order,) * k
        out = np.empty(shape, dtype=np.int64)
        for t in np.ndindex(shape):
            out[t] = pos[right_normed_commutator(Gx, [int(q.lift[i]) for i in t])]
        return out

    gridG = grid(G, qG, posG)
    gridH = grid(H, qH, posH)

    thetas = list(group_isomorphisms(tG, tH))
    if not thetas:
        return None
    for xi in group_isomorphisms(qG.table, qH.table):
        xi_arr = np.asarray(xi.mapping)
        rhs = gridH[np.ix_(*([xi_arr] * (n + 1)))]
        for theta in thetas:
            if np.array_equal(np.asarray(theta.mapping)[gridG], rhs):
                return xi, theta
    return None
