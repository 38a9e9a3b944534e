from fractions import Fraction

import pytest

import bpoly

T_AC = "digraph 3; 1 2; 2 3; 1 3"
T_CYC = "digraph 3; 1 2; 2 3; 3 1"


def as_dict(poly):
    return {tuple(t["e"]): Fraction(t["c"]) for t in poly["terms"]}


def value(poly, **values):
    total = Fraction(0)
    for exps, c in as_dict(poly).items():
        term = c
        for name, e in zip(poly["vars"], exps):
            term *= Fraction(values[name]) ** e
        total += term
    return total


def test_single_arc():
    p = bpoly.b_poly("digraph 2; 1 2")
    assert p["vars"] == ["q", "y", "z"]
    # q + q(q-1)(y+z)/2
    for q in range(1, 5):
        assert value(p, q=q, y=2, z=3) == q + Fraction(q * (q - 1) * 5, 2)


def test_polynomial_matches_direct_enumeration():
    p = bpoly.b_poly(T_AC)
    for q in (1, 2, 3):
        direct = bpoly.b_eval_direct(T_AC, q)
        for y, z in ((0, 1), (2, 5), (3, 3)):
            assert value(p, q=q, y=y, z=z) == value(direct, y=y, z=z)


def test_structure():
    s = bpoly.structure(T_CYC)
    assert s["is_totally_cyclic"] and not s["is_acyclic"]
    assert s["longest_path_arcs"] == "infinite"


def test_tutte_triangle():
    t = bpoly.tutte("graph 3; 1 2; 2 3; 1 3")
    named = {tuple(sorted(zip(t["vars"], e))): c for e, c in as_dict(t).items()}
    assert named == {(("x", 2), ("y", 0)): 1, (("x", 1), ("y", 0)): 1, (("x", 0), ("y", 1)): 1}


def test_check_reports():
    reports = bpoly.check("gf-acyclic-reorient", T_AC)
    assert len(reports) == 1 and reports[0]["passed"]
    assert len(bpoly.check_ids()) >= 50


def test_errors():
    with pytest.raises(bpoly.ParseError):
        bpoly.b_poly("digraph 2; 1 7")
    with pytest.raises(bpoly.PreconditionError):
        bpoly.check("symmetry-acyclic", T_CYC)
    with pytest.raises(bpoly.ParseError):
        bpoly.check("no-such-check", T_AC)


def test_small_survey():
    s = bpoly.survey(2, 2, ["rec-arc", "bm-one"])
    assert s["failures"] == 0 and not s["errors"]
    assert sum(c["passed"] for c in s["checks"]) > 0


def test_pretty():
    assert bpoly.pretty(bpoly.b_poly("digraph 1")) == "q"
