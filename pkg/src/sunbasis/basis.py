"""Block basis assembly and the verification suite.

The m! operators — one projector per standard tableau plus all same-shape
transition pairs — arrange into a block matrix indexed by Young diagram,
with projectors on the diagonal of each block and transitions off it.  The
functions here assemble that matrix and check, with exact arithmetic, the
four properties that make it a basis: matrix-unit multiplication,
orthonormality of the trace pairing, completeness/nesting of the
projectors, and linear independence over the permutation expansion.

Verification reports are structured: every failed identity carries an exact
witness string, and a report with no failures means every instance of the
identity was checked and held.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from . import _fast
from ._linalg import surd_rank
from .algebra import AlgebraElement, multiply
from .coefficients import PolyN
from .permutations import all_permutations
from .projectors import hermitian_projector, young_projector
from .tableaux import (
    YoungDiagram,
    YoungTableau,
    enumerate_tableaux,
    partitions,
    tableau_to_json,
    tableau_from_json,
    tableaux_of_shape,
)
from .transitions import unitary_transition_compact, young_transition

__all__ = [
    "BasisBlock",
    "BasisMatrix",
    "CheckFailure",
    "VerificationReport",
    "assemble",
    "verify_multiplication_table",
    "verify_orthonormality",
    "verify_completeness_and_nesting",
    "verify_linear_independence",
    "run_suite",
    "resolve_jobs",
    "basis_to_json",
    "basis_from_json",
]

_BASIS_KINDS = frozenset({"young", "hermitian"})


@dataclass(frozen=True, slots=True)
class BasisBlock:
    """All operators attached to one Young diagram.

    ``operators[i][j]`` carries the image of ``tableaux[j]``'s projector
    onto the image of ``tableaux[i]``'s, so diagonal entries are the
    projectors themselves.
    """

    diagram: YoungDiagram
    tableaux: tuple[YoungTableau, ...]
    operators: tuple[tuple[AlgebraElement, ...], ...]

    @property
    def size(self) -> int:
        return len(self.tableaux)


@dataclass(frozen=True, slots=True)
class BasisMatrix:
    """The full block matrix of projectors and transitions at degree ``m``."""

    m: int
    kind: str
    blocks: tuple[BasisBlock, ...]

    def labels(self) -> list[tuple[int, int, int]]:
        """Global operator order: (block position, row, column), rows first."""
        out = []
        for b, block in enumerate(self.blocks):
            for i in range(block.size):
                for j in range(block.size):
                    out.append((b, i, j))
        return out

    def operator(self, label: tuple[int, int, int]) -> AlgebraElement:
        b, i, j = label
        return self.blocks[b].operators[i][j]

    def flat(self) -> list[tuple[tuple[int, int, int], AlgebraElement]]:
        return [(label, self.operator(label)) for label in self.labels()]

    def describe(self, label: tuple[int, int, int]) -> str:
        """Human-readable name, 1-based within the block."""
        b, i, j = label
        shape = ",".join(map(str, self.blocks[b].diagram.rows))
        return f"({shape})[{i + 1},{j + 1}]"


@dataclass(frozen=True, slots=True)
class CheckFailure:
    identity: str
    witness: str


@dataclass(frozen=True, slots=True)
class VerificationReport:
    name: str
    checked: int
    failures: tuple[CheckFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [
                {"identity": f.identity, "witness": f.witness} for f in self.failures
            ],
        }


@cache
def assemble(m: int, kind: str = "hermitian") -> BasisMatrix:
    """Build the basis matrix: projectors on block diagonals, transitions off.

    Blocks follow the reverse-lexicographic diagram order and tableaux the
    canonical row-word order, so identical calls produce identical layouts.
    """
    if m < 1:
        raise ValueError(f"degree must be at least 1, got {m}")
    if kind not in _BASIS_KINDS:
        raise ValueError(f"unknown basis kind: {kind!r}")
    if kind == "young" and m >= 5:
        raise ValueError("Young transition basis undefined beyond m=4")
    blocks = []
    for diagram in partitions(m):
        ts = tableaux_of_shape(diagram)
        grid = []
        for ti in ts:
            row = []
            for tj in ts:
                if ti == tj:
                    proj = young_projector(ti) if kind == "young" else hermitian_projector(ti)
                    row.append(proj.element)
                elif kind == "young":
                    row.append(young_transition(ti, tj).element)
                else:
                    row.append(unitary_transition_compact(ti, tj).element)
            grid.append(tuple(row))
        blocks.append(BasisBlock(diagram, ts, tuple(grid)))
    matrix = BasisMatrix(m, kind, tuple(blocks))
    sizes = [b.size for b in matrix.blocks]
    assert all(b.size == b.diagram.tableau_count() for b in matrix.blocks)
    assert sum(s * s for s in sizes) == factorial(m)
    return matrix


def resolve_jobs(jobs: int | None = None) -> int:
    """Worker count: explicit argument, then SUNBASIS_JOBS, then all cores."""
    if jobs is not None:
        return max(1, jobs)
    env = os.environ.get("SUNBASIS_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- parallel execution ------------------------------------------------------
#
# Work is split into contiguous spans of a flat index space; each span maps
# to a list of failures and the spans are concatenated in order, so the
# report is identical whatever the worker count.  Workers read their inputs
# from a module global installed before the fork.

_WORKER_STATE: dict = {}


def _run_spans(worker, total: int, jobs: int) -> list:
    spans = _spans(total, jobs)
    if len(spans) <= 1:
        out = []
        for span in spans:
            out.extend(worker(span))
        return out
    import multiprocessing

    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        out = []
        for span in spans:
            out.extend(worker(span))
        return out
    with ctx.Pool(min(jobs, len(spans))) as pool:
        chunks = pool.map(worker, spans)
    return [f for chunk in chunks for f in chunk]


def _spans(total: int, jobs: int) -> list[tuple[int, int]]:
    if total == 0:
        return []
    jobs = max(1, min(jobs, total))
    step = -(-total // jobs)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _table_worker(span: tuple[int, int]) -> list[CheckFailure]:
    state = _WORKER_STATE
    m = state["m"]
    labels = state["labels"]
    lowered = state["lowered"]
    position = state["position"]
    names = state["names"]
    n = len(labels)
    failures = []
    for flat in range(*span):
        a, c = divmod(flat, n)
        ba, ia, ja = labels[a]
        bc, kc, lc = labels[c]
        prod = _fast.convolve(m, lowered[a], lowered[c])
        if ba == bc and ja == kc:
            expected = lowered[position[(ba, ia, lc)]]
            ok = _fast.equal(prod, expected)
            rhs = names[position[(ba, ia, lc)]]
        else:
            ok = _fast.is_zero(prod)
            rhs = "0"
        if not ok:
            failures.append(
                CheckFailure(
                    identity=f"{names[a]} * {names[c]} == {rhs}",
                    witness=f"product has {len(prod)} radicand component(s), expected {rhs}",
                )
            )
    return failures


def verify_multiplication_table(
    b: BasisMatrix, *, jobs: int | None = None, engine: str = "fast"
) -> VerificationReport:
    """Check the matrix-unit law over every ordered pair of basis operators.

    A product keeps only chains whose inner endpoints agree — block and
    tableau both — and then equals the outer-endpoint operator; everything
    else must vanish.  ``engine="core"`` repeats the check with the generic
    sparse arithmetic and exists to cross-validate the lowered fast path.
    """
    labels = b.labels()
    names = [b.describe(label) for label in labels]
    n = len(labels)
    if engine == "core":
        failures = []
        ops = [b.operator(label) for label in labels]
        position = {label: k for k, label in enumerate(labels)}
        for (a, (ba, ia, ja)), (c, (bc, kc, lc)) in itertools.product(
            enumerate(labels), repeat=2
        ):
            prod = multiply(ops[a], ops[c])
            if ba == bc and ja == kc:
                expected = ops[position[(ba, ia, lc)]]
                rhs = names[position[(ba, ia, lc)]]
                ok = prod == expected
            else:
                ok = prod.is_zero()
                rhs = "0"
            if not ok:
                failures.append(
                    CheckFailure(
                        identity=f"{names[a]} * {names[c]} == {rhs}",
                        witness=f"got {prod}",
                    )
                )
        return VerificationReport("multiplication_table", n * n, tuple(failures))
    if engine != "fast":
        raise ValueError(f"unknown engine: {engine!r}")
    _WORKER_STATE.clear()
    _WORKER_STATE.update(
        m=b.m,
        labels=labels,
        names=names,
        lowered=[_fast.lower(b.operator(label)) for label in labels],
        position={label: k for k, label in enumerate(labels)},
    )
    failures = _run_spans(_table_worker, n * n, resolve_jobs(jobs))
    return VerificationReport("multiplication_table", n * n, tuple(failures))


def _orthonormality_worker(span: tuple[int, int]) -> list[CheckFailure]:
    state = _WORKER_STATE
    m = state["m"]
    labels = state["labels"]
    lowered = state["lowered"]
    names = state["names"]
    dims = state["dims"]
    pairs = state["pairs"]
    failures = []
    for flat in range(*span):
        a, c = pairs[flat]
        ba, ia, ja = labels[a]
        bc, kc, lc = labels[c]
        value = _fast.scalar_product_lowered(m, lowered[a], lowered[c])
        if ba == bc and ia == kc and ja == lc:
            expected = dims[ba]
            rhs = f"dim({names[a]})"
        else:
            expected = PolyN()
            rhs = "0"
        if value != expected:
            failures.append(
                CheckFailure(
                    identity=f"<{names[a]}, {names[c]}> == {rhs}",
                    witness=f"got {value}",
                )
            )
    return failures


def verify_orthonormality(
    b: BasisMatrix,
    *,
    sample: int | None = None,
    seed: int | None = None,
    jobs: int | None = None,
) -> VerificationReport:
    """Check ⟨x, y⟩ = δ·dim over operator pairs, as exact polynomial identities.

    Distinct operators must pair to zero; an operator against itself gives
    the dimension polynomial of its block's diagram.  With ``sample`` the
    pairs are drawn uniformly (seeded) instead of exhaustively — the pair
    count grows with the fourth power of the block sizes.
    """
    if b.kind != "hermitian":
        raise ValueError("orthonormality holds only for the hermitian basis kind")
    labels = b.labels()
    names = [b.describe(label) for label in labels]
    n = len(labels)
    if sample is None:
        pairs = [(a, c) for a in range(n) for c in range(n)]
    else:
        rng = random.Random(seed)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(sample)]
    lowered = [_fast.lower(b.operator(label)) for label in labels]
    dims = [
        _fast.trace_lowered(b.m, _fast.lower(block.operators[0][0]))
        for block in b.blocks
    ]
    _WORKER_STATE.clear()
    _WORKER_STATE.update(
        m=b.m, labels=labels, names=names, lowered=lowered, dims=dims, pairs=pairs
    )
    failures = _run_spans(_orthonormality_worker, len(pairs), resolve_jobs(jobs))
    return VerificationReport("orthonormality", len(pairs), tuple(failures))


def verify_completeness_and_nesting(m: int) -> VerificationReport:
    """Check that projectors resolve the identity and refine by descent.

    At degree ``m`` the Hermitian projectors over all standard tableaux sum
    to the identity; and each degree-``m-1`` projector, embedded, equals the
    sum of its descendants' projectors.
    """
    if m < 1:
        raise ValueError(f"degree must be at least 1, got {m}")
    failures = []
    total = AlgebraElement.zero(m)
    for t in enumerate_tableaux(m):
        total = total + hermitian_projector(t).element
    checked = 1
    if total != AlgebraElement.identity(m):
        failures.append(
            CheckFailure(
                identity=f"sum of all degree-{m} projectors == id",
                witness=f"got {total}",
            )
        )
    if m >= 2:
        for parent in enumerate_tableaux(m - 1):
            checked += 1
            child_sum = AlgebraElement.zero(m)
            for child in parent.descendants():
                child_sum = child_sum + hermitian_projector(child).element
            embedded = hermitian_projector(parent).element.embed(m)
            if child_sum != embedded:
                failures.append(
                    CheckFailure(
                        identity=f"descendant projector sum == embedded projector of {parent}",
                        witness=f"difference over {child_sum.term_count()} terms",
                    )
                )
    return VerificationReport("completeness_and_nesting", checked, tuple(failures))


def verify_linear_independence(b: BasisMatrix) -> VerificationReport:
    """Check that the m! operators span the full group algebra.

    Each operator expands to a coefficient row over the m! permutations;
    the stacked matrix must have full rank over the surd field.
    """
    perms = all_permutations(b.m)
    rows = [[op.coefficient(p) for p in perms] for _, op in b.flat()]
    rank = surd_rank(rows)
    expected = len(perms)
    failures = ()
    if rank != expected:
        failures = (
            CheckFailure(
                identity=f"rank of the {len(rows)}x{expected} expansion == {expected}",
                witness=f"got rank {rank}",
            ),
        )
    return VerificationReport("linear_independence", 1, failures)


_SUITES = ("table", "ortho", "complete", "independence")


def run_suite(
    m: int,
    kind: str = "hermitian",
    suites: tuple[str, ...] | None = None,
    *,
    sample: int | None = None,
    seed: int | None = None,
    jobs: int | None = None,
) -> list[VerificationReport]:
    """Run the named verification suites and return their reports in order.

    ``suites=None`` selects every suite applicable to the kind (the
    orthonormality property does not hold for the young kind, so it is
    included only for the hermitian one).  At degree five and above an
    unspecified ``sample`` defaults to 500 orthonormality pairs.
    """
    if suites is None:
        suites = _SUITES if kind == "hermitian" else ("table", "complete", "independence")
    unknown = [s for s in suites if s not in _SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    b = assemble(m, kind)
    if sample is None and m >= 5:
        sample = 500
    reports = []
    for name in suites:
        if name == "table":
            reports.append(verify_multiplication_table(b, jobs=jobs))
        elif name == "ortho":
            reports.append(verify_orthonormality(b, sample=sample, seed=seed, jobs=jobs))
        elif name == "complete":
            reports.append(verify_completeness_and_nesting(m))
        elif name == "independence":
            reports.append(verify_linear_independence(b))
    return reports


# -- JSON wire format ---------------------------------------------------------


def basis_to_json(b: BasisMatrix) -> dict:
    from .algebra import element_to_json

    return {
        "m": b.m,
        "kind": b.kind,
        "blocks": [
            {
                "diagram": list(block.diagram.rows),
                "tableaux": [tableau_to_json(t) for t in block.tableaux],
                "operators": [
                    [element_to_json(op) for op in row] for row in block.operators
                ],
            }
            for block in b.blocks
        ],
    }


def basis_from_json(obj: dict) -> BasisMatrix:
    from .algebra import element_from_json

    blocks = tuple(
        BasisBlock(
            YoungDiagram(tuple(blk["diagram"])),
            tuple(tableau_from_json(t) for t in blk["tableaux"]),
            tuple(
                tuple(element_from_json(op) for op in row) for row in blk["operators"]
            ),
        )
        for blk in obj["blocks"]
    )
    return BasisMatrix(obj["m"], obj["kind"], blocks)
