"""The group algebra of S_m over the surd field, with an N-dependent trace.

An ``AlgebraElement`` is a finite formal sum of permutations of a common
degree m with ``Surd`` coefficients.  The product is the convolution induced
by group multiplication (right factor acts first, matching
``permutations.compose``).  ``dagger`` maps every permutation to its inverse
and is an anti-automorphism; ``trace`` weights each permutation by
N^(cycle count), producing a polynomial in the symbolic dimension N.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

from .coefficients import (
    PolyN,
    Surd,
    SurdLike,
    surd_from_json,
    surd_to_json,
)
from .permutations import Permutation

_Scalar = Union[int, Fraction, Surd]


class AlgebraElement:
    """A Q(sqrt)-linear combination of permutations of fixed degree."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: dict[Permutation, SurdLike] | None = None):
        if m < 1:
            raise ValueError(f"degree must be >= 1, got {m}")
        canon: dict[Permutation, Surd] = {}
        if terms:
            for p, c in terms.items():
                if p.degree != m:
                    raise ValueError(f"term degree {p.degree} != element degree {m}")
                c = Surd._coerce(c)
                if c:
                    prev = canon.get(p)
                    c = prev + c if prev is not None else c
                    if c:
                        canon[p] = c
                    else:
                        del canon[p]
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_terms", canon)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(m: int) -> "AlgebraElement":
        return AlgebraElement(m)

    @staticmethod
    def identity(m: int) -> "AlgebraElement":
        return AlgebraElement(m, {Permutation.identity(m): Surd.rational(1)})

    @staticmethod
    def from_permutation(p: Permutation, coeff: SurdLike = 1) -> "AlgebraElement":
        return AlgebraElement(p.degree, {p: Surd._coerce(coeff)})

    # -- inspection --------------------------------------------------------

    def coefficient(self, p: Permutation) -> Surd:
        return self._terms.get(p, Surd())

    def support(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self._terms))

    def items(self) -> Iterator[tuple[Permutation, Surd]]:
        return iter(self._terms.items())

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- linear structure -------------------------------------------------

    def _require_same_degree(self, other: "AlgebraElement") -> None:
        if self.m != other.m:
            raise ValueError(f"degree mismatch: {self.m} != {other.m}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same_degree(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            prev = out.get(p)
            s = prev + c if prev is not None else c
            if s:
                out[p] = s
            else:
                del out[p]
        return AlgebraElement._raw(self.m, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw(self.m, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: _Scalar) -> "AlgebraElement":
        c = Surd._coerce(c)
        if not c:
            return AlgebraElement.zero(self.m)
        return AlgebraElement._raw(self.m, {p: x * c for p, x in self._terms.items()})

    def __rmul__(self, c):  # scalar * element
        if isinstance(c, (int, Fraction, Surd)):
            return self.scale(c)
        return NotImplemented

    @classmethod
    def _raw(cls, m: int, terms: dict[Permutation, Surd]) -> "AlgebraElement":
        """Trusted constructor: terms already canonical (no zeros, right degree)."""
        el = object.__new__(cls)
        object.__setattr__(el, "m", m)
        object.__setattr__(el, "_terms", terms)
        return el

    # -- multiplicative structure ------------------------------------------

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, Permutation):
            return multiply(self, AlgebraElement.from_permutation(other))
        if isinstance(other, (int, Fraction, Surd)):
            return self.scale(other)
        return NotImplemented

    def dagger(self) -> "AlgebraElement":
        return dagger(self)

    def trace(self) -> PolyN:
        return trace(self)

    def embed(self, m: int) -> "AlgebraElement":
        """View as an element of the S_m algebra (each permutation padded)."""
        if m < self.m:
            raise ValueError(f"cannot embed degree {self.m} into degree {m}")
        return AlgebraElement._raw(m, {p.embed(m): c for p, c in self._terms.items()})

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.m, tuple(sorted(self._terms.items()))))

    def __repr__(self) -> str:
        return f"AlgebraElement(m={self.m}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p in self.support():
            c = self._terms[p]
            cs = str(c)
            if "+" in cs or "-" in cs[1:] or " " in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{p}")
        return " + ".join(parts)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product; the right factor acts first."""
    a._require_same_degree(b)
    out: dict[Permutation, Surd] = {}
    for p, cp in a._terms.items():
        pi = p.images
        for q, cq in b._terms.items():
            r = Permutation(tuple(pi[qi - 1] for qi in q.images))
            c = cp * cq
            prev = out.get(r)
            s = prev + c if prev is not None else c
            if s:
                out[r] = s
            else:
                del out[r]
    return AlgebraElement._raw(a.m, out)


def dagger(a: AlgebraElement) -> AlgebraElement:
    """The linear anti-automorphism sending each permutation to its inverse."""
    return AlgebraElement._raw(a.m, {p.inverse(): c for p, c in a._terms.items()})


def trace(a: AlgebraElement) -> PolyN:
    """Sum of coeff * N^(cycle count) over all terms, as a polynomial in N."""
    coeffs: dict[int, Surd] = {}
    for p, c in a._terms.items():
        k = p.cycle_count()
        prev = coeffs.get(k)
        coeffs[k] = prev + c if prev is not None else c
    return PolyN({k: c for k, c in coeffs.items() if c})


def scalar_product(a: AlgebraElement, b: AlgebraElement) -> PolyN:
    """<a, b> = trace(dagger(a) * b); symmetric and positive definite for N >= m."""
    a._require_same_degree(b)
    return trace(multiply(dagger(a), b))


def proportionality(a: AlgebraElement, b: AlgebraElement) -> Optional[Surd]:
    """The scalar c with a == c*b if one exists (b nonzero), else None.

    Prefers the identity permutation's coefficient as the probe when present.
    """
    a._require_same_degree(b)
    if b.is_zero():
        return None
    if a.is_zero():
        return Surd()
    probe = Permutation.identity(b.m)
    if not b.coefficient(probe):
        probe = next(iter(b._terms))
    cb = b.coefficient(probe)
    if not cb:
        return None
    c = a.coefficient(probe) / cb
    return c if a == b.scale(c) else None


# -- JSON wire format -----------------------------------------------------
#
# operator -> {"m": int, "terms": [{"perm": [one-line ints], "coeff": surd}]}
# with terms sorted by one-line form; bit-exact round trip.


def element_to_json(a: AlgebraElement) -> dict:
    return {
        "m": a.m,
        "terms": [
            {"perm": list(p.images), "coeff": surd_to_json(a.coefficient(p))}
            for p in a.support()
        ],
    }


def element_from_json(obj: dict) -> AlgebraElement:
    if not isinstance(obj, dict) or "m" not in obj or "terms" not in obj:
        raise ValueError("operator JSON must have 'm' and 'terms'")
    m = int(obj["m"])
    terms: dict[Permutation, Surd] = {}
    for t in obj["terms"]:
        p = Permutation(tuple(int(i) for i in t["perm"]))
        c = surd_from_json(t["coeff"])
        prev = terms.get(p)
        terms[p] = prev + c if prev is not None else c
    return AlgebraElement(m, terms)
