import dataclasses

import pytest

from conftest import A4, sub_by_order
from hyperinduct import (Case, DichotomyFailure, choose_N, classify, classify_all,
                         goursat_enumerate, make_group, verify_alpha, verify_diagram)
from hyperinduct.checks import choose_N_minimal
from hyperinduct.classify import satisfies_N_conditions


def test_choose_N_examples():
    assert choose_N(2, 6, 2) == 27
    assert choose_N(2, 6, 3) == 16
    assert choose_N(3, 6, 2) == 27
    assert choose_N(2, 8, 2) == 1  # no prime other than 2
    with pytest.raises(ValueError):
        choose_N(2, 6, 4)


@pytest.mark.parametrize("M", [1, 2, 3, 5])
@pytest.mark.parametrize("n", [1, 2, 6, 8, 12, 30])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_choose_N_minimal(M, n, p):
    assert satisfies_N_conditions(choose_N(M, n, p), M, n, p)
    assert choose_N_minimal(M, n, p)


def records_for(G, p, M):
    N = choose_N(M, G.order, p)
    return N, goursat_enumerate(G, N)


def test_s3_examples(S3):
    N, recs = records_for(S3, 2, 2)
    assert N == 27
    t = next(g for g in S3.elements() if S3.element_order(g) == 2)
    C2 = S3.generate([t])
    C3 = sub_by_order(S3, 3)
    rec = next(r for r in recs if r.A == C2 and r.B == C2 and r.d1 == 27)
    c = classify(rec.subgroup(), 2, 2)
    assert c.case is Case.ELEMENTARY
    assert (c.P, c.ell, c.k, c.g0) == (C2, 1, 1, S3.identity)
    rec = next(r for r in recs if r.A == S3.whole() and r.B == S3.whole() and r.d1 == 1)
    c = classify(rec.subgroup(), 2, 2)
    assert c.case is Case.DEEP and c.m == 27
    N, recs = records_for(S3, 3, 2)
    rec = next(r for r in goursat_enumerate(S3, 27) if r.A == C3 and r.B == C3 and r.d1 == 9)
    c = classify(rec.subgroup(), 2, 3)
    assert c.case is Case.DEEP and c.m == 3


def test_non_hyperelementary_rejected():
    G = make_group(A4)
    rec = next(r for r in goursat_enumerate(G, 3) if r.A == G.whole() and r.B == G.whole())
    with pytest.raises(ValueError):
        classify(rec.subgroup(), 2, 2)


@pytest.mark.parametrize("spec", ["sym:3", "cyclic:6", "dihedral:4"])
@pytest.mark.parametrize("p", [2, 3])
def test_every_elementary_record_verifies(spec, p):
    table = classify_all(make_group(spec), p, 2)
    for rec in table.records:
        if rec.case is Case.ELEMENTARY:
            assert rec.m < rec.M
            assert verify_alpha(rec, 3 * table.N)
            assert verify_diagram(rec)
        else:
            assert rec.m >= rec.M


def _elementary_with(table, pred):
    return next(r for r in table.records if r.case is Case.ELEMENTARY and pred(r))


def test_corrupted_g0_fails_alpha(S3):
    table = classify_all(S3, 2, 2)
    rec = _elementary_with(table, lambda r: r.ell > 1)
    assert verify_alpha(rec, 3 * table.N)
    bad = dataclasses.replace(rec, g0=S3.identity)
    v = verify_alpha(bad, 3 * table.N)
    assert not v and v.counterexample is not None


def test_corrupted_u_fails_diagram():
    G = make_group("cyclic:6")
    table = classify_all(G, 2, 2)
    rec = _elementary_with(table, lambda r: r.ell > 1 and r.P.order > 1)
    assert verify_diagram(rec)
    assert not verify_diagram(dataclasses.replace(rec, u=0))
    broken = (rec.splitting[0],) * rec.ell
    assert not verify_diagram(dataclasses.replace(rec, splitting=broken))


def test_alpha_on_windows(S3):
    table = classify_all(S3, 2, 2)
    for rec in table.records:
        if rec.case is Case.ELEMENTARY:
            for n in range(-5, 6):
                g, r = rec.alpha(S3.identity, n)
                assert rec.H.in_gamma(g, r)


def test_dichotomy_failure_is_raised(monkeypatch, S3):
    # cannot happen on real input; force the detector to disagree
    import sys
    cl = sys.modules["hyperinduct.classify"]
    table = classify_all(S3, 2, 2)
    rec = _elementary_with(table, lambda r: r.P.order > 1)
    monkeypatch.setattr(cl, "is_p_group", lambda X, p: False)
    with pytest.raises(DichotomyFailure):
        cl.classify(rec.H, 2, 2)


def test_table_summary(S3):
    table = classify_all(S3, 2, 2)
    assert table.N == 27
    assert all(r.case in (Case.DEEP, Case.ELEMENTARY) for r in table.records)
    assert len(table.not_deep) == sum(r.case is Case.ELEMENTARY for r in table.records)
    assert all(set(r.summary()) >= {"order", "m", "case"} for r in table.records)
