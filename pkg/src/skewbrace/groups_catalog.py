"""Constructors for the small groups used throughout the test corpus.

Conventions:
  - direct products pack indices little-endian: (a, b) -> a + |G| * b with the
    first printed coordinate varying fastest;
  - dihedral(n) elements are r^i s^j at index i + n*j;
  - dicyclic(n) elements are a^i b^j (a of order 2n, b^2 = a^n) at i + 2n*j.
"""

from __future__ import annotations

import itertools

import numpy as np

from .groups import GroupTable, validate_group


def cyclic(n: int) -> GroupTable:
    idx = np.arange(n)
    return validate_group((idx[:, None] + idx[None, :]) % n)


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    nG, nH = G.order, H.order
    op = np.empty((nG * nH, nG * nH), dtype=np.int64)
    for b1 in range(nH):
        for b2 in range(nH):
            block = G.op + nG * int(H.op[b1, b2])
            op[b1 * nG : (b1 + 1) * nG, b2 * nG : (b2 + 1) * nG] = block
    return validate_group(op)


def klein_four() -> GroupTable:
    return direct_product(cyclic(2), cyclic(2))


def dihedral(n: int) -> GroupTable:
    """D_n of order 2n (so dihedral(4) is the symmetry group of the square)."""
    op = np.empty((2 * n, 2 * n), dtype=np.int64)
    for i1, j1, i2, j2 in itertools.product(range(n), range(2), range(n), range(2)):
        i = (i1 + (i2 if j1 == 0 else -i2)) % n
        j = (j1 + j2) % 2
        op[i1 + n * j1, i2 + n * j2] = i + n * j
    return validate_group(op)


def dicyclic(n: int) -> GroupTable:
    """Dic_n of order 4n; dicyclic(2) is the quaternion group Q8."""
    m = 2 * n
    op = np.empty((2 * m, 2 * m), dtype=np.int64)
    for i1, j1, i2, j2 in itertools.product(range(m), range(2), range(m), range(2)):
        if j1 == 0:
            i, j = (i1 + i2) % m, j2
        else:
            i = (i1 - i2 + (n if j2 == 1 else 0)) % m
            j = (1 + j2) % 2
        op[i1 + m * j1, i2 + m * j2] = i + m * j
    return validate_group(op)


def quaternion8() -> GroupTable:
    return dicyclic(2)


def symmetric(n: int) -> GroupTable:
    perms = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    op = np.empty((len(perms), len(perms)), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            op[i, j] = pos[tuple(p[q[k]] for k in range(n))]
    return validate_group(op)


def alternating4() -> GroupTable:
    def sign(p):
        s = 1
        for i in range(4):
            for j in range(i + 1, 4):
                if p[i] > p[j]:
                    s = -s
        return s

    perms = sorted(p for p in itertools.permutations(range(4)) if sign(p) == 1)
    pos = {p: i for i, p in enumerate(perms)}
    op = np.empty((12, 12), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            op[i, j] = pos[tuple(p[q[k]] for k in range(4))]
    return validate_group(op)


def heisenberg(p: int) -> GroupTable:
    """Upper unitriangular 3x3 matrices over Z/p; order p^3, class 2."""
    n = p * p * p

    def unpack(x):
        return x % p, (x // p) % p, x // (p * p)

    op = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        a1, b1, c1 = unpack(x)
        for y in range(n):
            a2, b2, c2 = unpack(y)
            a, b = (a1 + a2) % p, (b1 + b2) % p
            c = (c1 + c2 + a1 * b2) % p
            op[x, y] = a + p * b + p * p * c
    return validate_group(op)


NAMED_GROUPS = {
    "z1": lambda: cyclic(1),
    "z2": lambda: cyclic(2),
    "z3": lambda: cyclic(3),
    "z4": lambda: cyclic(4),
    "z5": lambda: cyclic(5),
    "z6": lambda: cyclic(6),
    "z7": lambda: cyclic(7),
    "z8": lambda: cyclic(8),
    "z9": lambda: cyclic(9),
    "klein": klein_four,
    "z2xz4": lambda: direct_product(cyclic(2), cyclic(4)),
    "z2xz2xz2": lambda: direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
    "z3xz3": lambda: direct_product(cyclic(3), cyclic(3)),
    "s3": lambda: symmetric(3),
    "d4": lambda: dihedral(4),
    "d5": lambda: dihedral(5),
    "d6": lambda: dihedral(6),
    "d7": lambda: dihedral(7),
    "q8": quaternion8,
    "dic3": lambda: dicyclic(3),
    "a4": alternating4,
    "z10": lambda: cyclic(10),
    "z11": lambda: cyclic(11),
    "z12": lambda: cyclic(12),
    "z13": lambda: cyclic(13),
    "z14": lambda: cyclic(14),
    "z15": lambda: cyclic(15),
    "z2xz6": lambda: direct_product(cyclic(2), cyclic(6)),
    "heis3": lambda: heisenberg(3),
}


def named_group(name: str) -> GroupTable:
    try:
        return NAMED_GROUPS[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown group name {name!r}; known: {sorted(NAMED_GROUPS)}")


_BY_ORDER = {
    1: ["z1"],
    2: ["z2"],
    3: ["z3"],
    4: ["z4", "klein"],
    5: ["z5"],
    6: ["z6", "s3"],
    7: ["z7"],
    8: ["z8", "z2xz4", "z2xz2xz2", "d4", "q8"],
    9: ["z9", "z3xz3"],
    10: ["z10", "d5"],
    11: ["z11"],
    12: ["z12", "z2xz6", "d6", "a4", "dic3"],
    13: ["z13"],
    14: ["z14", "d7"],
    15: ["z15"],
}


def small_groups(order: int) -> list[tuple[str, GroupTable]]:
    """All groups of the given order up to isomorphism (orders 1..15)."""
    if order not in _BY_ORDER:
        raise ValueError(f"no complete group list for order {order} (supported: 1..15)")
    return [(name, named_group(name)) for name in _BY_ORDER[order]]
