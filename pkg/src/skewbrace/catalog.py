"""Example braces with known invariants, plus bounded enumeration.

The three closed-form constructions come with an `expected` table of orders
(|A^2|, |A^3|, |Ann|, |Ann_2|) that is recomputed and checked on every build.
Enumeration finds all skew braces on a given group, one per isomorphism class,
via regular subgroups of the holomorph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace, brace_isomorphisms, validate_brace
from .errors import NotOddPrime, OrderExceedsCap, UnknownCatalogName
from .groups import GroupTable, group_automorphisms
from .groups_catalog import NAMED_GROUPS, cyclic, direct_product, named_group
from .series import annihilator, annihilator_series, left_series


def c2(a: int) -> int:
    """C(a,2) = a(a-1)/2, the binomial coefficient extended by C(0,2)=C(1,2)=0."""
    return a * (a - 1) // 2


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    brace: SkewBrace
    expected: dict[str, int] = field(default_factory=dict)
    parameters: dict[str, int | str] = field(default_factory=dict)

    def __post_init__(self):
        if self.expected:
            got = {
                "A2": len(left_series(self.brace).term(2)),
                "A3": len(left_series(self.brace).term(3)),
                "Ann": len(annihilator(self.brace)),
                "Ann2": len(annihilator_series(self.brace).term(2)),
            }
            assert got == self.expected, f"{self.name}: computed {got}"


def _brace_from_formulas(sizes, circ_fn) -> SkewBrace:
    """Componentwise-additive dot on Z/m1 x ... with little-endian packing."""
    dot_group = cyclic(sizes[0])
    for m in sizes[1:]:
        dot_group = direct_product(dot_group, cyclic(m))
    n = dot_group.order

    strides = [1]
    for m in sizes[:-1]:
        strides.append(strides[-1] * m)

    def unpack(x):
        return tuple((x // s) % m for s, m in zip(strides, sizes))

    def pack(coords):
        return sum((c % m) * s for c, m, s in zip(coords, sizes, strides))

    circ = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        a = unpack(x)
        for y in range(n):
            circ[x, y] = pack(circ_fn(a, unpack(y)))
    return validate_brace(dot_group.op, circ)


def brace_2_4() -> CatalogEntry:
    """Order-8 brace on Z/2 x Z/4 with a nilpotent but nontrivial structure."""

    def circ(a, b):
        return (a[0] + b[0] + c2(a[1]) * b[1], a[1] + b[1] + 2 * a[1] * b[1])

    return CatalogEntry(
        "ex1-2x4",
        _brace_from_formulas((2, 4), circ),
        expected={"A2": 4, "A3": 1, "Ann": 2, "Ann2": 4},
    )


def _check_odd_prime(p: int):
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise NotOddPrime(p)


def least_nonresidue(p: int) -> int:
    squares = {(x * x) % p for x in range(1, p)}
    return min(x for x in range(2, p) if x not in squares)


def brace_p_p2(p: int, zeta_kind: str = "one") -> CatalogEntry:
    """Order-p^3 brace on Z/p x Z/p^2; the two zeta variants are
    non-isomorphic but share every series order."""
    _check_odd_prime(p)
    if zeta_kind not in ("one", "nonresidue"):
        raise ValueError(f"zeta_kind must be 'one' or 'nonresidue', got {zeta_kind!r}")
    zeta = 1 if zeta_kind == "one" else least_nonresidue(p)

    def circ(a, b):
        return (
            a[0] + b[0] + a[1] * b[1],
            a[1] + b[1] + p * (a[0] * b[1] - c2(a[1]) * b[1]) * zeta,
        )

    return CatalogEntry(
        "ex2-p-p2",
        _brace_from_formulas((p, p * p), circ),
        expected={"A2": p * p, "A3": 1, "Ann": p, "Ann2": p * p},
        parameters={"p": p, "zeta_kind": zeta_kind, "zeta": zeta},
    )


def brace_p_cubed(p: int) -> CatalogEntry:
    """Order-p^3 brace on (Z/p)^3 with elementary abelian dot group."""
    _check_odd_prime(p)

    def circ(a, b):
        return (
            a[0] + b[0] + (a[1] - c2(a[2])) * b[2],
            a[1] + b[1] + a[2] * b[2],
            a[2] + b[2],
        )

    return CatalogEntry(
        "ex3-p3",
        _brace_from_formulas((p, p, p), circ),
        expected={"A2": p * p, "A3": 1, "Ann": p, "Ann2": p * p},
        parameters={"p": p},
    )


def trivial_brace(G: GroupTable) -> SkewBrace:
    return validate_brace(G.op, G.op)


def opposite_trivial_brace(G: GroupTable) -> SkewBrace:
    return validate_brace(G.op, G.op.T)


def catalog_names() -> list[str]:
    names = ["ex1-2x4", "ex2-p-p2", "ex3-p3"]
    names += [f"trivial:{g}" for g in sorted(NAMED_GROUPS)]
    names += [f"opposite:{g}" for g in sorted(NAMED_GROUPS)]
    return names


def catalog_brace(name: str, p: int = 3, zeta_kind: str = "one") -> SkewBrace:
    """Resolve a catalog name to a brace; prefixed names take a group."""
    if name == "ex1-2x4":
        return brace_2_4().brace
    if name == "ex2-p-p2":
        return brace_p_p2(p, zeta_kind).brace
    if name == "ex3-p3":
        return brace_p_cubed(p).brace
    if name.startswith("trivial:"):
        return trivial_brace(named_group(name.split(":", 1)[1]))
    if name.startswith("opposite:"):
        return opposite_trivial_brace(named_group(name.split(":", 1)[1]))
    raise UnknownCatalogName(name)


def enumerate_braces_on(G: GroupTable, cap: int = 16) -> list[SkewBrace]:
    """All skew braces with dot group G, one per isomorphism class.

    Works inside the holomorph: elements (g, alpha) acting by x -> g.alpha(x).
    A subgroup acting regularly on G gives circ via a o b = a . alpha_a(b)
    where (a, alpha_a) is the unique member sending the identity to a.
    Regularity on a subgroup of order |G| is exactly distinct first
    components, so the search tracks covered first components directly.
    """
    if G.order > cap:
        raise OrderExceedsCap(G.order, cap)
    n = G.order
    auts = [np.asarray(m.mapping) for m in group_automorphisms(G)]
    na = len(auts)
    aut_key = {a.tobytes(): i for i, a in enumerate(auts)}
    aut_mul = np.empty((na, na), dtype=np.int64)
    for i, a in enumerate(auts):
        for j, b in enumerate(auts):
            aut_mul[i, j] = aut_key[a[b].tobytes()]

    def compose(x, y):
        # (g, a)(h, b) = (g . a(h), a b)
        g, a = x
        h, b = y
        return int(G.op[g, auts[a][h]]), int(aut_mul[a, b])

    def closure(gens, limit):
        """Subgroup closure, bailing out as soon as it exceeds `limit`."""
        seen = {(G.identity, 0)}
        frontier = []
        for gen in gens:
            if gen not in seen:
                seen.add(gen)
                frontier.append(gen)
        while frontier:
            nxt = []
            for x in frontier:
                for y in list(seen):
                    for z in (compose(x, y), compose(y, x)):
                        if z not in seen:
                            seen.add(z)
                            nxt.append(z)
                            if len(seen) > limit:
                                return seen
            frontier = nxt
        return seen

    regular: list[dict[int, int]] = []
    seen_subgroups: set[frozenset] = set()

    def extend(current: set, first_of: dict[int, int]):
        if len(current) == n:
            key = frozenset(current)
            if key not in seen_subgroups:
                seen_subgroups.add(key)
                regular.append(dict(first_of))
            return
        if len(current) > n:
            return
        g = min(x for x in range(n) if x not in first_of)
        for a in range(na):
            cand = (g, a)
            new = closure(list(current) + [cand], n)
            if len(new) > n:
                continue
            firsts = {}
            ok = True
            for h, b in new:
                if h in firsts:
                    ok = False
                    break
                firsts[h] = b
            if ok:
                extend(new, firsts)

    extend({(G.identity, 0)}, {G.identity: 0})

    braces = []
    for first_of in regular:
        circ = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            circ[a] = G.op[a, auts[first_of[a]]]
        braces.append(validate_brace(G.op, circ))

    braces.sort(key=lambda b: b.circ.op.tobytes())
    unique: list[SkewBrace] = []
    for b in braces:
        if not any(
            next(iter(brace_isomorphisms(b, u)), None) is not None for u in unique
        ):
            unique.append(b)
    return unique


@dataclass(frozen=True)
class StrictInclusionReport:
    examined: int
    counterexamples: tuple[tuple[str, str, int], ...]  # (group, series, n)

    @property
    def none_found(self) -> bool:
        return not self.counterexamples


def search_strict_verbal_inclusion(
    order_cap: int = 8, n_max: int = 4
) -> StrictInclusionReport:
    """Look for a brace where a verbal series term is strictly smaller than
    the corresponding left or right series term, for n up to n_max."""
    from .groups_catalog import small_groups
    from .series import (
        right_series,
        verbal_left_series,
        verbal_right_series,
    )

    if order_cap > 16:
        raise OrderExceedsCap(order_cap, 16)
    examined = 0
    hits = []
    for order in range(1, order_cap + 1):
        for gname, G in small_groups(order):
            for A in enumerate_braces_on(G):
                examined += 1
                for series, vseries, tag in (
                    (left_series(A), verbal_left_series(A, n_max), "left"),
                    (right_series(A), verbal_right_series(A, n_max), "right"),
                ):
                    for nn in range(2, n_max + 1):
                        v, s = vseries.term(nn), series.term(nn)
                        assert v.members <= s.members
                        if v.members < s.members:
                            hits.append((gname, tag, nn))
    return StrictInclusionReport(examined, tuple(hits))
