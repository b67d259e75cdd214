"""Projection operators attached to standard Young tableaux.

Three constructions, all returning exactly normalized idempotents in the
S_m group algebra:

* ``young_projector`` -- row symmetrizers times column antisymmetrizers,
  rescaled so the square equals the operator itself.  Not Hermitian for
  mixed shapes.
* ``hermitian_staircase`` -- the palindromic product of the Young projectors
  of all ancestors around the tableau's own Young projector.  Hermitian,
  same image as the Young projector.
* ``hermitian_mold`` -- the shortened construction that climbs only to the
  nearest *ordered* ancestor and sandwiches the tableau's symmetrizer pair
  between alternating ancestor sets.  Equal to the staircase operator.

``cancel_simplify`` evaluates sandwich products of the form
(row set) * M * (column set) that are guaranteed to collapse to a scalar
multiple of the tableau's Young projector, and returns that scalar.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Literal, Optional

from .algebra import AlgebraElement, multiply, proportionality, trace
from .coefficients import PolyN, Surd
from .permutations import Permutation
from .tableaux import YoungDiagram, YoungTableau

SetKind = Literal["sym", "anti"]


@dataclass(frozen=True)
class SymmetrizerSet:
    """A product of (anti)symmetrizers over pairwise disjoint index blocks.

    Blocks of size one contribute identity factors but are kept so the
    originating tableau can be reconstructed from its row/column sets.
    """

    degree: int
    blocks: tuple[tuple[int, ...], ...]
    kind: SetKind

    def __post_init__(self) -> None:
        if self.kind not in ("sym", "anti"):
            raise ValueError(f"kind must be 'sym' or 'anti', got {self.kind!r}")
        seen: set[int] = set()
        for b in self.blocks:
            if tuple(sorted(b)) != b:
                raise ValueError(f"block not sorted: {b}")
            for x in b:
                if not 1 <= x <= self.degree:
                    raise ValueError(f"block entry {x} outside 1..{self.degree}")
                if x in seen:
                    raise ValueError(f"blocks not disjoint at {x}")
                seen.add(x)

    def element(self) -> AlgebraElement:
        return _set_element(self)

    def __str__(self) -> str:
        tag = "S" if self.kind == "sym" else "A"
        return " ".join(
            f"{tag}_{''.join(map(str, b))}" for b in self.blocks if len(b) > 1
        ) or "id"


def _block_parity(block: tuple[int, ...], target: tuple[int, ...]) -> int:
    """Sign of the permutation sending block[k] -> target[k]."""
    pos = {v: i for i, v in enumerate(block)}
    idx = [pos[v] for v in target]
    inversions = sum(
        1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j]
    )
    return -1 if inversions % 2 else 1


@cache
def _set_element(s: SymmetrizerSet) -> AlgebraElement:
    m = s.degree
    anti = s.kind == "anti"
    denom = 1
    for b in s.blocks:
        denom *= factorial(len(b))
    live = [b for b in s.blocks if len(b) > 1]
    terms: dict[Permutation, Surd] = {}
    for choice in itertools.product(*(itertools.permutations(b) for b in live)):
        images = list(range(1, m + 1))
        sgn = 1
        for b, target in zip(live, choice):
            for src, dst in zip(b, target):
                images[src - 1] = dst
            if anti:
                sgn *= _block_parity(b, target)
        terms[Permutation(tuple(images))] = Surd.rational(Fraction(sgn, denom))
    return AlgebraElement(m, terms)


def symmetrizer(
    blocks: tuple[tuple[int, ...], ...], m: int, kind: SetKind
) -> AlgebraElement:
    """The normalized (anti)symmetrizer over the given disjoint blocks in S_m."""
    return SymmetrizerSet(m, tuple(tuple(b) for b in blocks), kind).element()


def rows_of(t: YoungTableau, degree: int | None = None) -> SymmetrizerSet:
    return SymmetrizerSet(degree or t.n, t.rows, "sym")


def columns_of(t: YoungTableau, degree: int | None = None) -> SymmetrizerSet:
    return SymmetrizerSet(degree or t.n, t.columns(), "anti")


# -- projectors ------------------------------------------------------------


@dataclass(frozen=True)
class Projector:
    tableau: YoungTableau
    kind: Literal["young", "staircase", "mold"]
    element: AlgebraElement
    normalization: Surd
    """Scalar relating the element to the bare product of its symmetrizer
    sets (all per-set 1/k! weights included, no other constants)."""


def _idempotency_scale(bar: AlgebraElement) -> Surd:
    """The c with bar*bar == c*bar; errors if the square is not proportional."""
    c = proportionality(multiply(bar, bar), bar)
    if c is None:
        raise ValueError("operator square is not proportional to the operator")
    if not c:
        raise ValueError("operator squares to zero; cannot normalize")
    return c


@cache
def young_projector(t: YoungTableau) -> Projector:
    """Rows symmetrized, then columns antisymmetrized, exactly normalized."""
    bar = multiply(rows_of(t).element(), columns_of(t).element())
    alpha = Surd.rational(1) / _idempotency_scale(bar)
    return Projector(t, "young", bar.scale(alpha), alpha)


def alpha_formula(t: YoungTableau) -> Fraction:
    """Closed form for the Young normalization:
    (product of row lengths factorial) * (product of column lengths factorial)
    divided by the shape's hook length."""
    num = 1
    for r in t.shape.rows:
        num *= factorial(r)
    for c in t.shape.column_lengths():
        num *= factorial(c)
    return Fraction(num, t.shape.hook_length())


def cancel_simplify(
    s: SymmetrizerSet, mid: AlgebraElement, a: SymmetrizerSet
) -> tuple[Surd, YoungTableau]:
    """Collapse s * mid * a to a scalar multiple of a Young projector.

    ``s`` must be the full row set and ``a`` the full column set of one
    standard tableau (possibly embedded in a larger degree); the product is
    then guaranteed to be proportional to that tableau's Young projector.
    Returns (scalar, tableau); scalar 0 when the product vanishes.
    """
    if s.kind != "sym" or a.kind != "anti":
        raise ValueError("need a symmetrizer set and an antisymmetrizer set")
    if not (s.degree == mid.m == a.degree):
        raise ValueError("degree mismatch between sets and middle element")
    t = _tableau_from_sets(s, a)
    prod = multiply(multiply(s.element(), mid), a.element())
    if prod.is_zero():
        return Surd(), t
    y = young_projector(t).element.embed(s.degree)
    lam = proportionality(prod, y)
    if lam is None:
        raise ValueError("product is not proportional to the Young projector")
    return lam, t


def _tableau_from_sets(s: SymmetrizerSet, a: SymmetrizerSet) -> YoungTableau:
    n = sum(len(b) for b in s.blocks)
    covered = {x for b in s.blocks for x in b}
    if covered != set(range(1, n + 1)):
        raise ValueError("row blocks must cover 1..n exactly")
    rows = sorted(s.blocks, key=lambda b: (-len(b), b[0]))
    t = YoungTableau(tuple(rows))  # validates standardness
    if set(a.blocks) != set(t.columns()):
        raise ValueError("column set does not match the row set's tableau")
    return t


@cache
def hermitian_staircase(t: YoungTableau) -> Projector:
    """Palindromic ancestor product; Hermitian idempotent."""
    n = t.n
    ancestors = [t.ancestor(k) for k in range(max(n - 2, 0), 0, -1)]
    left = [young_projector(a).element.embed(n) for a in ancestors]
    p = AlgebraElement.identity(n)
    for el in left:
        p = multiply(p, el)
    p = multiply(p, young_projector(t).element)
    for el in reversed(left):
        p = multiply(p, el)
    c = _idempotency_scale(p)
    if c != Surd.rational(1):
        p = p.scale(Surd.rational(1) / c)
    bar_factors = [fs for a in ancestors for fs in (rows_of(a, n), columns_of(a, n))]
    bar_factors += [rows_of(t), columns_of(t)]
    for a in reversed(ancestors):
        bar_factors += [rows_of(a, n), columns_of(a, n)]
    beta = proportionality(p, _product(n, bar_factors))
    if beta is None:
        raise ValueError("staircase operator not proportional to its bar product")
    return Projector(t, "staircase", p, beta)


def _product(n: int, factors: list[SymmetrizerSet]) -> AlgebraElement:
    p = AlgebraElement.identity(n)
    for f in factors:
        p = multiply(p, f.element())
    return p


@cache
def mold_factors(t: YoungTableau) -> tuple[tuple[SymmetrizerSet, int], ...]:
    """The symmetrizer-set factor sequence of the shortened Hermitian
    construction, each tagged with its ancestor level (0 = the tableau
    itself).  The sequence is palindromic; the central triple alternates
    against the ancestor chain and contributes the level-0 sets.
    """
    n = t.n
    m = t.mold()
    row_branch = t.ancestor(m).is_row_ordered()  # ties resolve to the row form

    def factor(level: int, sym: bool) -> tuple[SymmetrizerSet, int]:
        anc = t.ancestor(level)
        return (rows_of(anc, n) if sym else columns_of(anc, n), level)

    def is_sym(level: int) -> bool:
        return row_branch if (m - level) % 2 == 0 else not row_branch

    prefix = [factor(k, is_sym(k)) for k in range(m, 0, -1)]
    center = [factor(0, is_sym(0)), factor(0, not is_sym(0)), factor(0, is_sym(0))]
    return tuple(prefix + center + list(reversed(prefix)))


@cache
def hermitian_mold(t: YoungTableau) -> Projector:
    """Shortened Hermitian construction; equals hermitian_staircase exactly."""
    factors = mold_factors(t)
    bar = _product(t.n, [f for f, _ in factors])
    beta = Surd.rational(1) / _idempotency_scale(bar)
    return Projector(t, "mold", bar.scale(beta), beta)


@cache
def hermitian_projector(t: YoungTableau) -> Projector:
    """Canonical Hermitian projector used by transitions and basis assembly."""
    return hermitian_mold(t)


def dimension_poly(p: Projector) -> PolyN:
    """Dimension of the projector's invariant image as a polynomial in N."""
    return trace(p.element)


def dimension_formula(shape: YoungDiagram) -> PolyN:
    """Image dimension as a polynomial in N, from the shape alone.

    Product over boxes of (N + column - row), divided by the shape's hook
    length.  Agrees with ``dimension_poly`` of any projector of that shape
    but needs no group-algebra products, so it stays cheap at high degree.
    """
    poly = PolyN.constant(1)
    for i, r in enumerate(shape.rows):
        for j in range(r):
            poly = poly * PolyN({1: Surd.rational(1), 0: Surd.rational(j - i)})
    return poly * Fraction(1, shape.hook_length())
