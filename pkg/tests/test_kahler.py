"""Duality, Lefschetz, and definiteness verdicts on the three families.

Small cases are pinned by hand; the singly graded exterior space is the
documented counterexample and its inertia values are frozen.
"""

import pytest

from kahlercheck.kahler import (
    lefschetz_gram,
    primitive_subspace,
    run_package,
    usual_grading_signature_report,
    verify_dimensions,
    verify_equivariance,
    verify_hl,
    verify_hr,
    verify_isometry_and_orthogonality,
    verify_pd,
    verify_sl2,
)
from kahlercheck.ratlin import rank, signature
from kahlercheck.spaces import Case, build_space

GRID = [
    ("poly", 1, 2),
    ("poly", 2, 2),
    ("poly", 2, 3),
    ("poly", 3, 2),
    ("ext", 1, 1),
    ("ext", 1, 2),
    ("ext", 2, 2),
    ("ext", 2, 3),
    ("ext", 3, 3),
    ("ext-usual", 1, None),
    ("ext-usual", 2, None),
    ("ext-usual", 3, None),
]


@pytest.mark.parametrize("case,n,m", GRID)
def test_full_suite_passes(case, n, m):
    report = run_package(case, n, m)
    assert report.passed, [c.name for c in report.checks if not c.passed]


def test_smallest_primitive_space():
    space = build_space(Case.POLY, 1, 2)
    prim = primitive_subspace(space, -2)
    assert prim.dim == 1
    # <a, L^2 a> = 4 for the bottom vector: positive definite at the bottom
    assert prim.lefschetz_gram.to_lists() == [[4]]
    assert primitive_subspace(space, 0).dim == 0


def test_primitive_dims_match_betti_differences():
    for case, n, m in [(Case.POLY, 2, 3), (Case.EXT, 3, 3), (Case.POLY, 3, 2)]:
        space = build_space(case, n, m)
        for d in space.degrees:
            if d > 0:
                continue
            below = space.dim(d - 2) if (d - 2) in space.degrees else 0
            assert primitive_subspace(space, d).dim == space.dim(d) - below


def test_lefschetz_form_nondegenerate_where_hl_holds():
    for case, n, m in [(Case.POLY, 2, 2), (Case.EXT, 2, 3), (Case.EXT_USUAL, 2, None)]:
        space = build_space(case, n, m)
        assert verify_hl(space).passed
        for d in space.degrees:
            if d > 0:
                continue
            g = lefschetz_gram(space, d)
            assert rank(g) == space.dim(d)


def test_usual_grading_rank_one_inertia():
    report = usual_grading_signature_report(1)
    assert not report.hr_holds
    assert [(d, s.astuple()) for d, s in report.signatures] == [
        (-1, (1, 0, 0)),
        (0, (1, 1, 0)),
    ]


def test_usual_grading_rank_two_inertia():
    # the definiteness failure: split signatures on the middle degrees
    report = usual_grading_signature_report(2)
    assert not report.hr_holds
    sigs = dict((d, s.astuple()) for d, s in report.signatures)
    assert sigs[-2] == (1, 0, 0)
    assert sigs[-1] == (2, 2, 0)
    assert sigs[0] == (3, 3, 0)


def test_usual_grading_failure_is_reported_as_documented():
    report = run_package("ext-usual", 2)
    check = {c.name: c for c in report.checks}["hodge_riemann_failure_documented"]
    assert check.passed
    assert check.details["hr_holds"] is False
    sigs = {e["degree"]: tuple(e["signature"]) for e in check.details["full_piece_signatures"]}
    assert sigs[-1] == (2, 2, 0)
    assert sigs[0] == (3, 3, 0)


def test_hr_implies_hl_on_grid():
    # definiteness of every primitive piece forces maximal rank of L powers
    for case, n, m in GRID:
        space = build_space(case, n, m)
        hr = verify_hr(space) if case != "ext-usual" else None
        if hr is not None and hr.passed:
            assert verify_hl(space).passed


def test_verdict_details():
    space = build_space(Case.POLY, 2, 2)
    dims = verify_dimensions(space)
    assert dims.passed
    assert dims.details["symmetric"] and dims.details["unimodal"]
    sl2 = verify_sl2(space)
    assert sl2.passed
    pd = verify_pd(space)
    assert pd.passed
    iso = verify_isometry_and_orthogonality(space)
    assert iso.passed
    eq = verify_equivariance(space)
    assert eq.passed


def test_report_serialization():
    report = run_package("poly", 1, 2)
    d = report.to_dict()
    assert d["schema_version"] == "1"
    assert d["case"] == "poly" and d["n"] == 1 and d["m"] == 2
    assert d["pass"] is True
    assert all(set(c) >= {"name", "pass"} for c in d["checks"])
    md = report.to_markdown()
    assert "hodge_riemann" in md
    assert "| pass |" in md or "pass" in md


def test_prebuilt_space_is_accepted():
    space = build_space(Case.EXT, 2, 2)
    report = run_package("ext", 2, 2, space=space)
    assert report.passed


def test_bottom_primitive_forms_positive_on_grid():
    # the form at the lowest nonzero degree is positive definite in every
    # doubly graded case, which anchors the alternating sign pattern
    for case, n, m in [(Case.POLY, 2, 3), (Case.EXT, 2, 2), (Case.EXT, 2, 3)]:
        space = build_space(case, n, m)
        bottom = space.degrees[0]
        prim = primitive_subspace(space, bottom)
        sig = signature(prim.lefschetz_gram)
        assert sig.astuple() == (prim.dim, 0, 0)


def test_primitive_signature_property():
    space = build_space(Case.POLY, 2, 2)
    for d in space.degrees:
        if d > 0:
            continue
        prim = primitive_subspace(space, d)
        assert prim.signature == signature(prim.lefschetz_gram)


def test_lefschetz_nondegeneracy_equals_hard_lefschetz():
    # rank of the Lefschetz form on degree -i equals rank of the i-fold
    # raising map, because the pairing blocks are invertible; so the form
    # is nondegenerate exactly where the lift is a bijection
    for case, n, m in GRID:
        space = build_space(case, n, m)
        hl = verify_hl(space)
        for d in space.degrees:
            if d > 0:
                continue
            form_full = rank(lefschetz_gram(space, d)) == space.dim(d)
            lift_full = hl.details["lifted_ranks"][str(-d)] == space.dim(d)
            assert form_full == lift_full
