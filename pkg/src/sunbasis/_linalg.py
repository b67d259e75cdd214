"""Exact rank computation over the rationals and the surd field."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coefficients import Surd


def fraction_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix of rationals by exact Gaussian elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        lead = work[row]
        inv = 1 / lead[col]
        for i in range(row + 1, len(work)):
            f = work[i][col]
            if f:
                ratio = f * inv
                work[i] = [a - ratio * b for a, b in zip(work[i], lead)]
        row += 1
        rank += 1
        if row == len(work):
            break
    return rank


def _single_radicand(row: Sequence[Surd]) -> int | None:
    """The lone radicand shared by a row's entries, or None if mixed."""
    rads: set[int] = set()
    for entry in row:
        rads.update(d for d, _ in entry.terms())
        if len(rads) > 1:
            return None
    return next(iter(rads), 1)


def surd_rank(rows: Sequence[Sequence[Surd]]) -> int:
    """Rank of a matrix over the surd field.

    Scaling a row by a nonzero scalar keeps the rank, so rows whose entries
    share one radicand are divided by its root; if that rationalizes every
    row the cheap rational elimination applies, otherwise a full elimination
    over the surd field runs.
    """
    rational_rows: list[list[Fraction]] = []
    for row in rows:
        d = _single_radicand(row)
        if d is None:
            return _surd_elimination(rows)
        scaled = [entry.coefficient(d) for entry in row]
        if any(scaled):
            rational_rows.append(scaled)
    return fraction_rank(rational_rows)


def _surd_elimination(rows: Sequence[Sequence[Surd]]) -> int:
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        lead = work[row]
        inv = lead[col].inverse()
        for i in range(row + 1, len(work)):
            f = work[i][col]
            if f:
                ratio = f * inv
                work[i] = [a - ratio * b for a, b in zip(work[i], lead)]
        row += 1
        rank += 1
        if row == len(work):
            break
    return rank
