"""Concrete evaluation of algebra elements as exact matrices.

For an integer dimension ``n`` every permutation acts on the tensor power
of an ``n``-dimensional space by shuffling factors; extending linearly
turns any algebra element into an ``n**m`` by ``n**m`` matrix with surd
entries.  This makes statements that are invisible at the symbolic level
checkable: operators whose tableau has a column longer than ``n`` vanish
outright, and the rank of a surviving projector equals its dimension
polynomial evaluated at ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ._linalg import surd_rank
from .algebra import AlgebraElement
from .coefficients import Surd, surd_from_json, surd_to_json

__all__ = [
    "ConcreteMatrix",
    "represent",
    "rank",
    "matrix_to_json",
    "matrix_from_json",
]


@dataclass(frozen=True, eq=False, slots=True)
class ConcreteMatrix:
    """Sparse square matrix over the surd field, indexed 0..n**m - 1.

    Entries map (row, column) to a nonzero Surd; absent pairs are zero.
    """

    n: int
    m: int
    entries: dict[tuple[int, int], Surd] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError("both dimensions must be positive")
        cleaned = {pos: v for pos, v in self.entries.items() if v}
        object.__setattr__(self, "entries", cleaned)

    @property
    def size(self) -> int:
        return self.n**self.m

    def is_zero(self) -> bool:
        return not self.entries

    def entry(self, row: int, col: int) -> Surd:
        return self.entries.get((row, col), Surd())

    def transpose(self) -> "ConcreteMatrix":
        return ConcreteMatrix(
            self.n, self.m, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def trace(self) -> Surd:
        total = Surd()
        for (r, c), v in self.entries.items():
            if r == c:
                total = total + v
        return total

    def __add__(self, other: "ConcreteMatrix") -> "ConcreteMatrix":
        self._check_compatible(other)
        merged = dict(self.entries)
        for pos, v in other.entries.items():
            merged[pos] = merged.get(pos, Surd()) + v
        return ConcreteMatrix(self.n, self.m, merged)

    def __matmul__(self, other: "ConcreteMatrix") -> "ConcreteMatrix":
        self._check_compatible(other)
        by_row: dict[int, list[tuple[int, Surd]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], Surd] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                pos = (r, c)
                out[pos] = out.get(pos, Surd()) + v * w
        return ConcreteMatrix(self.n, self.m, out)

    def scale(self, factor: Surd) -> "ConcreteMatrix":
        return ConcreteMatrix(
            self.n, self.m, {pos: v * factor for pos, v in self.entries.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConcreteMatrix):
            return NotImplemented
        return (
            self.n == other.n and self.m == other.m and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"ConcreteMatrix(n={self.n}, m={self.m}, nonzeros={len(self.entries)})"

    def _check_compatible(self, other: "ConcreteMatrix") -> None:
        if self.n != other.n or self.m != other.m:
            raise ValueError("matrices act on different tensor spaces")


def represent(a: AlgebraElement, n: int, *, cap: int = 10_000) -> ConcreteMatrix:
    """Exact matrix of an element on the degree-``m`` power of an ``n``-space.

    A permutation moves the tensor factor at slot ``k`` to the slot the
    permutation sends ``k`` to; equivalently, column ``t`` holds a single 1
    in the row whose index tuple reads ``t`` through the inverse
    permutation.  Elements extend linearly, entry by entry.
    """
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    size = n**a.m
    if size > cap:
        raise ValueError(
            f"matrix would have {size} rows, above the cap of {cap}; "
            f"pass cap={size} or more to allow it"
        )
    m = a.m
    entries: dict[tuple[int, int], Surd] = {}
    terms = list(a.items())
    inverses = [(p.inverse().images, coeff) for p, coeff in terms]
    for t in product(range(n), repeat=m):
        col = 0
        for x in t:
            col = col * n + x
        for inv_images, coeff in inverses:
            row = 0
            for k in range(m):
                row = row * n + t[inv_images[k] - 1]
            pos = (row, col)
            prev = entries.get(pos)
            entries[pos] = coeff if prev is None else prev + coeff
    return ConcreteMatrix(n, m, entries)


def rank(c: ConcreteMatrix) -> int:
    """Exact rank over the surd field.

    Rows are densified before elimination, so this is meant for the small
    dimensions where concrete certification is useful.
    """
    if c.is_zero():
        return 0
    width = c.size
    rows: dict[int, list[Surd]] = {}
    zero = Surd()
    for (r, col), v in c.entries.items():
        row = rows.get(r)
        if row is None:
            row = rows[r] = [zero] * width
        row[col] = v
    return surd_rank([rows[r] for r in sorted(rows)])


# -- JSON wire format ---------------------------------------------------------


def matrix_to_json(c: ConcreteMatrix) -> dict:
    return {
        "n": c.n,
        "m": c.m,
        "size": c.size,
        "entries": [
            [r, col, surd_to_json(v)]
            for (r, col), v in sorted(c.entries.items())
        ],
    }


def matrix_from_json(obj: dict) -> ConcreteMatrix:
    return ConcreteMatrix(
        obj["n"],
        obj["m"],
        {(r, c): surd_from_json(v) for r, c, v in obj["entries"]},
    )
