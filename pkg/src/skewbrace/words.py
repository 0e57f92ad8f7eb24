"""The skew-brace word mini-language.

Words are finite expression trees over variables x1, x2, ... combining both
multiplications and both inversions.  star/comm/commo are sugar that desugars
at construction time, so evaluation only ever sees the four core node kinds.

Evaluation accepts plain ints or numpy arrays as variable values; passing
broadcastable meshgrid axes evaluates a word over the whole tuple grid while
keeping intermediate results as small as their variable support allows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .brace import (
    BraceSubset,
    SkewBrace,
    classify_subset,
    ideal_closure,
    sub_brace_closure,
)
from .errors import (
    MissingAssignment,
    NotASubgroup,
    SeedArityNotTwo,
    UnknownFamily,
    WordSyntaxError,
    WordUsesCircOnGroup,
    ZeroVariableIndex,
)
from .groups import GroupSubset, GroupTable, subgroup_generated


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class DotMul:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class CircMul:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class DotInv:
    child: "Word"


@dataclass(frozen=True)
class CircInv:
    child: "Word"


Word = Union[Var, DotMul, CircMul, DotInv, CircInv]


def arity(w: Word) -> int:
    if isinstance(w, Var):
        return w.index
    if isinstance(w, (DotInv, CircInv)):
        return arity(w.child)
    return max(arity(w.left), arity(w.right))


def uses_circ(w: Word) -> bool:
    if isinstance(w, Var):
        return False
    if isinstance(w, (CircMul, CircInv)):
        return True
    if isinstance(w, DotInv):
        return uses_circ(w.child)
    return uses_circ(w.left) or uses_circ(w.right)


def substitute(w: Word, mapping: Mapping[int, Word]) -> Word:
    if isinstance(w, Var):
        return mapping.get(w.index, w)
    if isinstance(w, DotInv):
        return DotInv(substitute(w.child, mapping))
    if isinstance(w, CircInv):
        return CircInv(substitute(w.child, mapping))
    cls = type(w)
    return cls(substitute(w.left, mapping), substitute(w.right, mapping))


def shift_vars(w: Word, k: int) -> Word:
    if isinstance(w, Var):
        return Var(w.index + k)
    if isinstance(w, DotInv):
        return DotInv(shift_vars(w.child, k))
    if isinstance(w, CircInv):
        return CircInv(shift_vars(w.child, k))
    cls = type(w)
    return cls(shift_vars(w.left, k), shift_vars(w.right, k))


# sugar builders; these define the desugaring used everywhere (parser included)

def star_word(u: Word, v: Word) -> Word:
    """u * v = u^-1 . (u o v) . v^-1."""
    return DotMul(DotMul(DotInv(u), CircMul(u, v)), DotInv(v))


def comm_word(u: Word, v: Word) -> Word:
    """[u, v] = u . v . u^-1 . v^-1."""
    return DotMul(DotMul(DotMul(u, v), DotInv(u)), DotInv(v))


def commo_word(u: Word, v: Word) -> Word:
    """[u, v]_o, the circ-group commutator."""
    return CircMul(CircMul(CircMul(u, v), CircInv(u)), CircInv(v))


# --- parser ----------------------------------------------------------------

_SUGAR = {"star": star_word, "comm": comm_word, "commo": commo_word}
_BINARY = {"dot": DotMul, "circ": CircMul}
_UNARY = {"dinv": DotInv, "cinv": CircInv}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise WordSyntaxError(self.pos, f"expected {ch!r}")
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos:
            raise WordSyntaxError(start, "expected a name or variable")
        return self.text[start:self.pos]

    def word(self) -> Word:
        start = self.pos
        name = self.ident()
        if name.startswith("x") and name[1:].isdigit():
            index = int(name[1:])
            if index == 0:
                raise ZeroVariableIndex(start)
            return Var(index)
        if name in _UNARY:
            self.expect("(")
            child = self.word()
            self.expect(")")
            return _UNARY[name](child)
        if name in _BINARY or name in _SUGAR:
            self.expect("(")
            left = self.word()
            self.expect(",")
            right = self.word()
            self.expect(")")
            if name in _BINARY:
                return _BINARY[name](left, right)
            return _SUGAR[name](left, right)
        raise WordSyntaxError(start, f"unknown form {name!r}")


def parse_word(text: str) -> Word:
    p = _Parser(text)
    w = p.word()
    p.skip_ws()
    if p.pos != len(p.text):
        raise WordSyntaxError(p.pos, "trailing input")
    return w


# --- evaluation ------------------------------------------------------------

def eval_word(A: SkewBrace, w: Word, assignment: Sequence) -> Union[int, np.ndarray]:
    """Evaluate a word; assignment[i] is the value of x_{i+1} (int or array)."""
    if isinstance(w, Var):
        if w.index > len(assignment):
            raise MissingAssignment(w.index)
        return assignment[w.index - 1]
    if isinstance(w, DotInv):
        return A.dot.inv[eval_word(A, w.child, assignment)]
    if isinstance(w, CircInv):
        return A.circ.inv[eval_word(A, w.child, assignment)]
    left = eval_word(A, w.left, assignment)
    right = eval_word(A, w.right, assignment)
    if isinstance(w, DotMul):
        return A.dot.op[left, right]
    return A.circ.op[left, right]


def grid_axes(order: int, k: int) -> list[np.ndarray]:
    """Broadcastable meshgrid axes covering all k-tuples of elements."""
    ar = np.arange(order)
    return [ar.reshape((1,) * i + (order,) + (1,) * (k - 1 - i)) for i in range(k)]


def word_values(A: SkewBrace, w: Word) -> set[int]:
    """All values of w over all assignments."""
    axes = grid_axes(A.order, arity(w))
    vals = eval_word(A, w, axes)
    return {int(v) for v in np.unique(np.asarray(vals))}


# --- named families --------------------------------------------------------

@dataclass(frozen=True)
class WordCollection:
    name: str
    words: tuple[Word, ...]
    arity: int

    def __post_init__(self):
        assert self.words, "a word collection must be non-empty"


def right_normed(builder, n: int) -> Word:
    """x1 . x2 . ... . xn nested to the right under the given binary builder."""
    if n < 1:
        raise UnknownFamily(f"n must be >= 1, got {n}")
    if n == 1:
        return Var(1)
    return builder(Var(1), shift_vars(right_normed(builder, n - 1), 1))


def left_normed(builder, n: int) -> Word:
    if n < 1:
        raise UnknownFamily(f"n must be >= 1, got {n}")
    if n == 1:
        return Var(1)
    return builder(left_normed(builder, n - 1), Var(n))


_FAMILIES = {
    "right-star": lambda n: (right_normed(star_word, n),),
    "left-star": lambda n: (left_normed(star_word, n),),
    "dot-comm-right": lambda n: (right_normed(comm_word, n),),
    "dot-comm-left": lambda n: (left_normed(comm_word, n),),
    "circ-comm-right": lambda n: (right_normed(commo_word, n),),
    "circ-comm-left": lambda n: (left_normed(commo_word, n),),
    "Wn": lambda n: (
        right_normed(comm_word, n + 1),
        right_normed(commo_word, n + 1),
        right_normed(star_word, n + 1),
    ),
    "W(n)": lambda n: (
        right_normed(comm_word, n + 1),
        right_normed(commo_word, n + 1),
        left_normed(star_word, n + 1),
    ),
}


def family(name: str, n: int) -> WordCollection:
    """Build a named single-word or three-word collection.

    For "Wn" and "W(n)" the parameter n indexes the family (words have n+1
    variables); for the normed single words it is the number of variables.
    """
    if name not in _FAMILIES:
        raise UnknownFamily(name)
    if n < 1:
        raise UnknownFamily(f"{name} requires n >= 1")
    words = _FAMILIES[name](n)
    display = {"Wn": f"W{n}", "W(n)": f"W({n})"}.get(name, f"{name}({n})")
    return WordCollection(display, words, max(arity(w) for w in words))


def collection_by_label(label: str) -> WordCollection:
    """Resolve labels like "W1", "W2", "W(2)" used by the CLI and files."""
    label = label.strip()
    if label.startswith("W(") and label.endswith(")"):
        return family("W(n)", int(label[2:-1]))
    if label.startswith("W") and label[1:].isdigit():
        return family("Wn", int(label[1:]))
    raise UnknownFamily(label)


def iterate_word_family(
    W_R: Iterable[Word], W_L: Iterable[Word], n: int
) -> WordCollection:
    """Build W^n from arity-2 seeds: right seeds nest in the last slot,
    left seeds in the first."""
    right = tuple(W_R)
    left = tuple(W_L)
    for w in right + left:
        if arity(w) != 2:
            raise SeedArityNotTwo(arity(w))

    def iterate(w: Word, nest_right: bool, k: int) -> Word:
        if k == 1:
            return w
        prev = iterate(w, nest_right, k - 1)
        if nest_right:
            return substitute(w, {1: Var(1), 2: shift_vars(prev, 1)})
        return substitute(w, {1: prev, 2: Var(k + 1)})

    words = tuple(iterate(w, True, n) for w in right) + tuple(
        iterate(w, False, n) for w in left
    )
    return WordCollection(f"W^{n}", words, n + 1)


# --- verbal / marginal / core ----------------------------------------------

def _as_words(W) -> tuple[Word, ...]:
    if isinstance(W, WordCollection):
        return W.words
    if isinstance(W, (Var, DotMul, CircMul, DotInv, CircInv)):
        return (W,)
    return tuple(W)


def verbal_sub_skew_brace(A: SkewBrace, W) -> BraceSubset:
    """Smallest sub-skew brace containing every word value."""
    vals: set[int] = set()
    for w in _as_words(W):
        vals |= word_values(A, w)
    members = sub_brace_closure(A, vals)
    assert classify_subset(A, members).sub_skew_brace
    return BraceSubset(members, "sub-skew-brace")


def verbal_dot_subgroup(A: SkewBrace, W) -> BraceSubset:
    """Subgroup of (A, .) generated by word values; no circ closure."""
    vals: set[int] = set()
    for w in _as_words(W):
        vals |= word_values(A, w)
    members = subgroup_generated(A.dot, vals).members
    return BraceSubset(members, "dot-subgroup")


def _marginal_stage1(A: SkewBrace, words: tuple[Word, ...]) -> set[int]:
    """Elements c whose dot-insertion on either side never changes any value."""
    n = A.order
    survivors = set(range(n))
    for w in words:
        k = arity(w)
        axes = grid_axes(n, k)
        base = np.asarray(eval_word(A, w, axes))
        dead = set()
        for c in survivors:
            if c == A.identity:
                continue
            ok = True
            for i in range(k):
                for modified in (A.dot.op[axes[i], c], A.dot.op[c, axes[i]]):
                    assign = list(axes)
                    assign[i] = modified
                    if not np.array_equal(base, np.asarray(eval_word(A, w, assign))):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                dead.add(c)
        survivors -= dead
    return survivors


def marginal_left_ideal(A: SkewBrace, W) -> BraceSubset:
    """M_W(A): elements z all of whose lambda-images pass the insertion test.

    The universally quantified lambda-twist in the definition is absorbed by
    first computing the plain insertion-stable set S and then keeping the z
    with lambda_b(z) in S for every b (lambda_1 = id makes this equivalent).
    """
    words = _as_words(W)
    S = _marginal_stage1(A, words)
    mask = np.zeros(A.order, dtype=bool)
    mask[list(S)] = True
    members = frozenset(
        z for z in range(A.order) if bool(mask[A.lam[:, z]].all())
    )
    assert classify_subset(A, members).left_ideal
    return BraceSubset(members, "left-ideal")


def core_of(A: SkewBrace, Z) -> BraceSubset:
    """Core_A(Z): the unique largest ideal of A contained in Z.

    Z may be any dot-subgroup (sub-skew braces and left ideals included);
    computed element-wise as {z in Z : ideal_closure({z}) subset of Z}.
    """
    members = Z.members if isinstance(Z, (BraceSubset, GroupSubset)) else frozenset(Z)
    report = classify_subset(A, members)
    if not report.dot_subgroup:
        raise NotASubgroup(f"{sorted(members)} is not a dot-subgroup")
    core = frozenset(
        z for z in members if ideal_closure(A, {z}).members <= members
    )
    assert classify_subset(A, core).ideal
    assert core <= members
    return BraceSubset(core, "ideal")


# --- group words -----------------------------------------------------------

def _require_dot_only(words: tuple[Word, ...]):
    for w in words:
        if uses_circ(w):
            raise WordUsesCircOnGroup()


def group_context(G: GroupTable) -> SkewBrace:
    from .brace import trivial_brace_unchecked

    return trivial_brace_unchecked(G)


def verbal_subgroup(G: GroupTable, W) -> GroupSubset:
    """Verbal subgroup of G for a collection of dot-only words."""
    words = _as_words(W)
    _require_dot_only(words)
    A = group_context(G)
    vals: set[int] = set()
    for w in words:
        vals |= word_values(A, w)
    return subgroup_generated(G, vals)


def marginal_subgroup(G: GroupTable, W) -> GroupSubset:
    """Marginal subgroup of G for a collection of dot-only words."""
    words = _as_words(W)
    _require_dot_only(words)
    A = group_context(G)
    S = _marginal_stage1(A, words)
    from .groups import is_subgroup

    members = frozenset(S)
    assert is_subgroup(G, members)
    sub = subgroup_generated(G, members)
    assert sub.members == members
    return sub
