import math

import pytest
from hypothesis import given, strategies as st

from conftest import A4, Q8, sub_by_order
from hyperinduct import (elementary_cover, family_report, exponent_report, generation_data, make_group,
                         split_verschiebung, vanishing_report)
from hyperinduct._arith import factorize
from hyperinduct.families import corpus_p_groups, is_p_elementary
from hyperinduct.generation import VerschiebungSplit, c_q, dedupe, frobenius_verschiebung_identity


def test_s3_generation(S3):
    data = generation_data(S3, 2)
    assert [(d.P.order, S3.element_order(d.g), d.E.order) for d in data] == \
        [(1, 1, 1), (1, 3, 3), (1, 3, 3), (2, 1, 2)]
    assert [d.plain for d in data] == [True, False, False, True]
    assert data[1].allowed_primes == (3,)


def test_c6_generation(C6):
    data = generation_data(C6, 2)
    assert any(d.P.order == 2 and d.g_order == 3 and d.E == C6.whole() for d in data)


@pytest.mark.parametrize("G", corpus_p_groups(2, 16) + corpus_p_groups(3, 27), ids=lambda G: G.label)
def test_p_group_generation_is_plain(G):
    p = next(iter(factorize(G.order)), 2) if G.order > 1 else 2
    data = generation_data(G, p)
    assert all(d.g == G.identity for d in data)
    assert [c.order for c in elementary_cover(G, p)] == \
        sorted(c.order for c in family_report(G, p).p_subgroup_classes)


@pytest.mark.parametrize("spec", ["sym:3", "sym:4", "dihedral:6", A4, Q8, "cyclic:12"])
@pytest.mark.parametrize("p", [2, 3])
def test_generation_targets_are_elementary(spec, p):
    G = make_group(spec)
    for d in generation_data(G, p):
        assert is_p_elementary(d.E, p)
        assert d.E.order == d.g_order * d.P.order
        assert d.g_order % p
    deduped = dedupe(generation_data(G, p))
    assert len({(d.P.representative.members, d.g_order) for d in deduped}) <= len(deduped)


def test_elementary_cover(S3, C6):
    assert [c.order for c in elementary_cover(S3, 2)] == [1, 2, 3]
    assert C6.whole() in [c.representative for c in elementary_cover(C6, 2)]


def test_split_examples():
    assert split_verschiebung(6, 3) == VerschiebungSplit(2, 3, 2)
    s = split_verschiebung(1, 17)
    assert (s.k0, s.k1, s.l0) == (1, 1, 1)
    s = split_verschiebung(12, 6)
    assert (s.k0, s.k1, s.l0) == (1, 12, 1)
    with pytest.raises(ValueError):
        split_verschiebung(3, 0)
    with pytest.raises(ValueError):
        split_verschiebung(0, 3)


@given(st.integers(1, 10**6), st.integers(1, 10**4))
def test_split_laws(k, m):
    s = split_verschiebung(k, m)
    assert s.k0 * s.k1 == k
    assert all(m % q == 0 for q in factorize(s.k1))
    assert math.gcd(s.k0, m) == 1
    assert (s.l0 * s.k0 - 1) % m == 0
    assert math.gcd(s.l0, m) == 1


def test_frobenius_identity():
    assert frobenius_verschiebung_identity(5, 7) == 35
    with pytest.raises(ValueError):
        frobenius_verschiebung_identity(0, 1)


def _oracle_cq(n, q):
    k = 0
    while n % q ** (k + 1) == 0:
        k += 1
    l = 0
    while q ** l < k * n:
        l += 1
    return q ** l


def test_exponents_60():
    r = exponent_report(60)
    assert (r.c, r.d) == (1296000, 120)
    assert r.per_prime == {2: 128, 3: 81, 5: 125}
    assert r.per_prime == {q: _oracle_cq(60, q) for q in (2, 3, 5)}
    assert r.refined_nk0 == 8 and r.vanishing_primes == (3, 5)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 97])
def test_exponents_prime(p):
    r = exponent_report(p)
    assert r.c == r.d == p and r.refined_nk0 == 1 and r.vanishing_primes == (p,)


@given(st.integers(2, 10000))
def test_exponent_invariants(n):
    r = exponent_report(n)
    for q, e in factorize(n).items():
        cq = r.per_prime[q]
        assert cq == _oracle_cq(n, q)
        assert cq >= q ** e and cq < q * e * n
    assert r.c % r.d == 0
    assert r.d % r.refined_nk0 == 0


def test_slack():
    assert c_q(60, 2, slack=2) == 4 * c_q(60, 2)
    assert exponent_report(60, slack=1).c == 1296000 * 30


def test_vanishing_examples():
    r = vanishing_report(30)
    assert r.squarefree and r.zero_localizations == (2, 3, 5)
    assert "square-free" in r.statement and "NK_n(ZG) = 0 for n <= 1" in r.statement
    r = vanishing_report(12)
    assert r.zero_localizations == (3,) and not r.squarefree
    r = vanishing_report(4)
    assert r.zero_localizations == () and "no vanishing" in r.statement
    assert vanishing_report(make_group("sym:3")).zero_localizations == (2, 3)
    assert vanishing_report(1).squarefree
