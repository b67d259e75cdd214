import math
from fractions import Fraction

import pytest

from sunbasis.algebra import AlgebraElement, element_from_json, multiply
from sunbasis.basis import (
    BasisBlock,
    BasisMatrix,
    assemble,
    basis_from_json,
    basis_to_json,
    resolve_jobs,
    run_suite,
    verify_completeness_and_nesting,
    verify_linear_independence,
    verify_multiplication_table,
    verify_orthonormality,
)
from sunbasis.coefficients import Surd
from sunbasis.projectors import hermitian_projector, symmetrizer, young_projector
from sunbasis.tableaux import YoungTableau


def T(*rows):
    return YoungTableau(tuple(tuple(r) for r in rows))


# -- assembly ----------------------------------------------------------------


def test_single_box_is_identity_block():
    b = assemble(1, "hermitian")
    assert [blk.size for blk in b.blocks] == [1]
    assert b.blocks[0].operators[0][0] == AlgebraElement.identity(1)


@pytest.mark.parametrize(
    "m,sizes",
    [(1, [1]), (2, [1, 1]), (3, [1, 2, 1]), (4, [1, 3, 2, 3, 1])],
)
def test_block_sizes(m, sizes):
    for kind in ("hermitian", "young"):
        b = assemble(m, kind)
        assert [blk.size for blk in b.blocks] == sizes
        assert sum(s * s for s in sizes) == math.factorial(m)


def test_m3_hermitian_grid_entries():
    b = assemble(3, "hermitian")
    full_sym = symmetrizer(((1, 2, 3),), 3, "sym")
    full_anti = symmetrizer(((1, 2, 3),), 3, "anti")
    assert b.blocks[0].operators[0][0] == full_sym
    assert b.blocks[2].operators[0][0] == full_anti
    mixed = b.blocks[1]
    assert mixed.tableaux == (T((1, 2), (3,)), T((1, 3), (2,)))
    for i in range(2):
        assert mixed.operators[i][i] == hermitian_projector(mixed.tableaux[i]).element
    # off-diagonal entries are each other's daggers and compose to the diagonal
    t01, t10 = mixed.operators[0][1], mixed.operators[1][0]
    assert multiply(t01, t10) == mixed.operators[0][0]
    assert multiply(t10, t01) == mixed.operators[1][1]


def test_young_kind_diagonal_uses_young_projectors():
    b = assemble(3, "young")
    mixed = b.blocks[1]
    for i in range(2):
        assert mixed.operators[i][i] == young_projector(mixed.tableaux[i]).element


def test_young_kind_rejected_beyond_four():
    with pytest.raises(ValueError, match="beyond m=4"):
        assemble(5, "young")


def test_assemble_validation():
    with pytest.raises(ValueError, match="at least 1"):
        assemble(0, "hermitian")
    with pytest.raises(ValueError, match="unknown basis kind"):
        assemble(3, "block")


def test_labels_and_describe():
    b = assemble(3, "hermitian")
    labels = b.labels()
    assert len(labels) == 6
    assert labels[0] == (0, 0, 0)
    assert b.describe((1, 0, 1)) == "(2,1)[1,2]"
    assert b.operator((1, 0, 1)) == b.blocks[1].operators[0][1]


# -- multiplication table ------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("kind", ["hermitian", "young"])
def test_multiplication_table_passes(m, kind):
    report = verify_multiplication_table(assemble(m, kind))
    assert report.passed
    assert report.checked == math.factorial(m) ** 2


@pytest.mark.parametrize("m", [2, 3, 4])
def test_table_engines_agree(m):
    b = assemble(m, "hermitian")
    assert verify_multiplication_table(b, engine="fast") == verify_multiplication_table(
        b, engine="core"
    )


def test_table_unknown_engine():
    with pytest.raises(ValueError, match="unknown engine"):
        verify_multiplication_table(assemble(2, "hermitian"), engine="float")


def test_table_parallel_matches_serial():
    b = assemble(3, "hermitian")
    assert verify_multiplication_table(b, jobs=1) == verify_multiplication_table(
        b, jobs=3
    )


def _corrupted(b: BasisMatrix, scale=Fraction(2)) -> BasisMatrix:
    """Copy with the first off-diagonal operator of the first size-2+ block rescaled."""
    blocks = []
    done = False
    for blk in b.blocks:
        if not done and blk.size >= 2:
            grid = [list(row) for row in blk.operators]
            grid[0][1] = grid[0][1].scale(Surd.rational(scale))
            blocks.append(
                BasisBlock(blk.diagram, blk.tableaux, tuple(tuple(r) for r in grid))
            )
            done = True
        else:
            blocks.append(blk)
    assert done
    return BasisMatrix(b.m, b.kind, tuple(blocks))


def test_table_detects_corruption():
    bad = _corrupted(assemble(3, "hermitian"))
    for engine in ("fast", "core"):
        report = verify_multiplication_table(bad, engine=engine)
        assert not report.passed
        assert report.failures
        assert all("==" in f.identity for f in report.failures)


# -- orthonormality -------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_orthonormality_exhaustive(m):
    report = verify_orthonormality(assemble(m, "hermitian"))
    assert report.passed
    assert report.checked == math.factorial(m) ** 2


def test_orthonormality_rejects_young():
    with pytest.raises(ValueError, match="hermitian basis kind"):
        verify_orthonormality(assemble(3, "young"))


def test_orthonormality_sampling_is_seeded():
    b = assemble(4, "hermitian")
    r1 = verify_orthonormality(b, sample=50, seed=11)
    r2 = verify_orthonormality(b, sample=50, seed=11)
    assert r1 == r2
    assert r1.checked == 50
    assert r1.passed


def test_orthonormality_detects_corruption():
    report = verify_orthonormality(_corrupted(assemble(3, "hermitian")))
    assert not report.passed


# -- completeness, nesting, independence ---------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_completeness_and_nesting(m):
    report = verify_completeness_and_nesting(m)
    assert report.passed
    # one identity check plus one nesting check per lower-degree tableau
    parents = sum(blk.size for blk in assemble(max(m - 1, 1), "hermitian").blocks)
    assert report.checked == (1 if m == 1 else 1 + parents)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("kind", ["hermitian", "young"])
def test_linear_independence(m, kind):
    report = verify_linear_independence(assemble(m, kind))
    assert report.passed


def test_linear_independence_detects_degeneracy():
    b = assemble(3, "hermitian")
    blocks = list(b.blocks)
    blk = blocks[1]
    grid = [list(row) for row in blk.operators]
    grid[0][1] = grid[1][0]  # duplicate row: operators no longer span
    blocks[1] = BasisBlock(blk.diagram, blk.tableaux, tuple(tuple(r) for r in grid))
    report = verify_linear_independence(BasisMatrix(3, "hermitian", tuple(blocks)))
    assert not report.passed
    assert "rank" in report.failures[0].witness


# -- basis-change invariance -----------------------------------------------------


def test_orthogonal_rotation_preserves_reports():
    # conjugating one block's grid by a rational orthogonal matrix keeps
    # both the multiplication table and the orthonormality pairing intact
    b = assemble(3, "hermitian")
    R = ((Fraction(3, 5), Fraction(4, 5)), (Fraction(-4, 5), Fraction(3, 5)))
    blk = b.blocks[1]
    rotated = []
    for a in range(2):
        row = []
        for c in range(2):
            acc = AlgebraElement.zero(3)
            for i in range(2):
                for j in range(2):
                    acc = acc + blk.operators[i][j].scale(
                        Surd.rational(R[a][i] * R[c][j])
                    )
            row.append(acc)
        rotated.append(tuple(row))
    blocks = (b.blocks[0], BasisBlock(blk.diagram, blk.tableaux, tuple(rotated)), b.blocks[2])
    rotated_basis = BasisMatrix(3, "hermitian", blocks)
    assert rotated_basis.blocks[1].operators[0][0] != blk.operators[0][0]
    assert verify_multiplication_table(rotated_basis).passed
    assert verify_orthonormality(rotated_basis).passed
    assert verify_linear_independence(rotated_basis).passed


# -- suite runner and serialization ----------------------------------------------


def test_run_suite_hermitian_all():
    reports = run_suite(3, "hermitian", jobs=1)
    assert [r.name for r in reports] == [
        "multiplication_table",
        "orthonormality",
        "completeness_and_nesting",
        "linear_independence",
    ]
    assert all(r.passed for r in reports)


def test_run_suite_young_skips_orthonormality():
    reports = run_suite(3, "young", jobs=1)
    assert [r.name for r in reports] == [
        "multiplication_table",
        "completeness_and_nesting",
        "linear_independence",
    ]
    assert all(r.passed for r in reports)


def test_run_suite_unknown_name():
    with pytest.raises(ValueError, match="unknown suites"):
        run_suite(3, "hermitian", ("table", "unitarity"))


def test_report_json_shape():
    report = verify_multiplication_table(assemble(2, "hermitian"))
    data = report.to_json()
    assert data == {
        "name": "multiplication_table",
        "checked": 4,
        "passed": True,
        "failures": [],
    }
    bad = verify_multiplication_table(_corrupted(assemble(3, "hermitian")))
    data = bad.to_json()
    assert data["passed"] is False
    assert data["failures"] and set(data["failures"][0]) == {"identity", "witness"}


def test_basis_json_round_trip():
    for kind in ("hermitian", "young"):
        b = assemble(3, kind)
        data = basis_to_json(b)
        again = basis_from_json(data)
        assert again == b
        # every emitted operator re-parses to an equal element
        for blk in data["blocks"]:
            for row in blk["operators"]:
                for op in row:
                    assert element_from_json(op).m == 3


def test_resolve_jobs(monkeypatch):
    assert resolve_jobs(3) == 3
    assert resolve_jobs(0) == 1
    monkeypatch.setenv("SUNBASIS_JOBS", "5")
    assert resolve_jobs() == 5
    monkeypatch.delenv("SUNBASIS_JOBS")
    assert resolve_jobs() >= 1
