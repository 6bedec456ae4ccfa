import dataclasses
from fractions import Fraction

import pytest

from conftest import A4, Q8, sub_by_order
from hyperinduct import (NoSolution, subgroup_classes, dress_certificate, make_group, marks_matrix,
                         verify_certificate)
from hyperinduct.dress import DressCertificate, cyclic_classes, mark
from hyperinduct.groups import class_of
from hyperinduct.oracles import brute_mark

GROUPS = ["sym:3", "sym:4", "dihedral:4", "dihedral:6", A4, Q8, "cyclic:12",
          "product(sym:3,cyclic:2)", "semidirect(c:7,p:cyclic:3,action:[2])"]


def test_s3_marks(S3):
    mm = marks_matrix(S3, 3)
    assert [r.order for r in mm.rows] == [1, 2, 3]
    assert [c.order for c in mm.columns] == [1, 2, 3]
    assert [list(r) for r in mm.entries] == [[6, 0, 0], [3, 1, 0], [2, 0, 2]]


@pytest.mark.parametrize("spec", GROUPS)
def test_marks_against_oracle(spec):
    G = make_group(spec)
    for H in (c.representative for c in subgroup_classes(G)):
        for C in cyclic_classes(G):
            for K in C.conjugates:
                assert mark(G, H, K) == brute_mark(G, H, C.representative)
        # conjugate representatives give identical rows
        for H2 in class_of(H).conjugates:
            assert ([mark(G, H2, C.representative) for C in cyclic_classes(G)]
                    == [mark(G, H, C.representative) for C in cyclic_classes(G)])


@pytest.mark.parametrize("spec", GROUPS)
def test_marks_basic(spec):
    G = make_group(spec)
    cols = cyclic_classes(G)
    assert [mark(G, G.whole(), C.representative) for C in cols] == [1] * len(cols)
    for H in (c.representative for c in subgroup_classes(G)):
        for C in cols:
            if H.order % C.order:
                assert mark(G, H, C.representative) == 0
        assert mark(G, H, G.trivial()) == G.order // H.order


def test_s3_certificate(S3):
    cert = dress_certificate(S3, 3)
    got = {cls.order: a for cls, a in cert.coefficients}
    assert got == {1: Fraction(-1, 2), 2: Fraction(1), 3: Fraction(1, 2)}
    assert verify_certificate(S3, cert)
    mm = marks_matrix(S3, 3)
    for j in range(3):
        assert sum(a * mm.entries[[r.order for r in mm.rows].index(c.order)][j]
                   for c, a in cert.coefficients) == 1


def test_trivial_certificates(S3):
    cert = dress_certificate(S3, 2)
    assert [(c.order, a) for c, a in cert.coefficients] == [(6, 1)]
    P = make_group("dihedral:4")
    assert [(c.order, a) for c, a in dress_certificate(P, 2).coefficients] == [(8, 1)]
    G = make_group("cyclic:6")
    assert verify_certificate(G, DressCertificate(2, ((class_of(G.whole()), Fraction(1)),)))


@pytest.mark.parametrize("spec", GROUPS)
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_round_trip_and_negative_control(spec, p):
    G = make_group(spec)
    cert = dress_certificate(G, p)
    assert verify_certificate(G, cert)
    assert all(a.denominator % p for _, a in cert.coefficients)
    for i in range(len(cert.coefficients)):
        coeffs = list(cert.coefficients)
        cls, a = coeffs[i]
        coeffs[i] = (cls, a + 1)
        assert not verify_certificate(G, dataclasses.replace(cert, coefficients=tuple(coeffs)))


def test_verify_rejects_bad_denominator_and_family(S3):
    C = class_of(S3.whole())
    assert not verify_certificate(S3, DressCertificate(3, ((C, Fraction(1)),)))  # S3 not 3-hyper
    one = class_of(S3.trivial())
    cert = DressCertificate(2, ((one, Fraction(1, 6)),))
    assert not verify_certificate(S3, cert)
    other = make_group("sym:3")
    assert not verify_certificate(other, dress_certificate(S3, 2))


def test_certificate_json(S3):
    d = dress_certificate(S3, 3).as_dict()
    assert d["prime"] == 3
    assert [(e["numerator"], e["denominator"]) for e in d["entries"]] == [(-1, 2), (1, 1), (1, 2)]


def test_nosolution_is_surfaced(monkeypatch, S3):
    import sys
    dr = sys.modules["hyperinduct.dress"]
    monkeypatch.setattr(dr, "solve_plocal", lambda A, b, p: None)
    with pytest.raises(NoSolution):
        dr.dress_certificate(S3, 3)
