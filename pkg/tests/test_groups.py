import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import A4, Q8, perm_index, sub_by_order
from hyperinduct import (CapExceeded, NotNormal, SpecError, abelianization_order,
                         all_subgroups, centralizer, make_group, quotient, subgroup_classes)
from hyperinduct._arith import divisors
from hyperinduct.groups import is_normal, sylow_subgroup
from hyperinduct.oracles import brute_force_subgroups, isomorphic

SMALL = ["cyclic:1", "cyclic:2", "cyclic:7", "cyclic:12", "sym:3", "sym:4", "dihedral:4",
         "dihedral:5", "dihedral:6", A4, Q8, "product(sym:3,cyclic:2)",
         "product(cyclic:2,cyclic:2)", "semidirect(c:7,p:cyclic:3,action:[2])",
         "semidirect(c:5,p:cyclic:4,action:[2])", "product(cyclic:4,cyclic:2)"]


@pytest.mark.parametrize("spec", SMALL)
def test_axioms_hold(spec):
    assert make_group(spec).check_axioms()


@pytest.mark.parametrize("spec,order", [
    ("cyclic:1", 1), ("sym:3", 6), ("sym:4", 24), ("dihedral:4", 8), (A4, 12), (Q8, 8),
    ("product(sym:3,cyclic:2)", 12), ("semidirect(c:3,p:cyclic:2,action:[2])", 6),
    ("semidirect(c:3, p:cyclic:2, action: inversion)", 6),
    ("perm(3;(1,2,3);(1 2))", 6), ("perm(4;())", 1),
])
def test_orders(spec, order):
    assert make_group(spec).order == order


def test_q8_has_single_involution():
    G = make_group(Q8)
    assert sum(1 for x in G.elements() if G.element_order(x) == 2) == 1
    assert not G.is_abelian()


def test_semidirect_inversion_is_s3(S3):
    G = make_group("semidirect(c:3,p:cyclic:2,action:[2])")
    assert not G.is_abelian()
    assert [c.size for c in subgroup_classes(G)] == [c.size for c in subgroup_classes(S3)]
    assert isomorphic(G, S3)
    assert not isomorphic(make_group("cyclic:6"), S3)


def test_semidirect_trivial_action_is_cyclic():
    assert isomorphic(make_group("semidirect(c:3,p:cyclic:2,action:[1])"), make_group("cyclic:6"))


@pytest.mark.parametrize("bad", [
    "cyclic", "cyclic:", "cyclic:0", "foo:3", "product(sym:3)", "sym:3 extra",
    "semidirect(c:3,p:cyclic:2,action:[3])",      # 3 is not a unit mod 3
    "semidirect(c:5,p:cyclic:2,action:[2])",      # 2 has order 4 mod 5: not a hom from C2
    "semidirect(c:5,p:cyclic:2,action:[1,1])",    # wrong number of entries
    "perm(3;(1 4))", "perm(3;(1 1 2))", "perm(3;1 2)",
])
def test_malformed_specs(bad):
    with pytest.raises(SpecError):
        make_group(bad)


def test_cap():
    with pytest.raises(CapExceeded):
        make_group("sym:6")
    with pytest.raises(CapExceeded):
        make_group("product(cyclic:20,cyclic:20)")
    assert make_group("sym:5", cap=120).order == 120
    assert make_group("cyclic:300", cap=300).order == 300


@pytest.mark.parametrize("spec", [s for s in SMALL if make_group(s).order <= 24])
def test_all_subgroups_matches_brute_force(spec):
    G = make_group(spec)
    assert {H.set for H in all_subgroups(G)} == brute_force_subgroups(G)


def test_subgroup_counts(S3):
    # frozen from the subset brute force
    assert len(brute_force_subgroups(S3)) == 6
    assert len(all_subgroups(S3)) == 6
    assert sorted(H.order for H in all_subgroups(S3)) == [1, 2, 2, 2, 3, 6]
    assert len(all_subgroups(make_group("cyclic:1"))) == 1
    assert len(all_subgroups(make_group("cyclic:12"))) == len(divisors(12)) == 6


def test_subgroup_classes(S3, D8):
    assert [c.size for c in subgroup_classes(S3)] == [1, 3, 1, 1]
    assert all(c.size == 1 for c in subgroup_classes(make_group("cyclic:12")))
    assert len(subgroup_classes(D8)) == 8


@pytest.mark.parametrize("spec", SMALL)
def test_class_invariants(spec):
    G = make_group(spec)
    classes = subgroup_classes(G)
    assert sum(c.size for c in classes) == len(all_subgroups(G))
    for c in classes:
        assert c.representative.members == min(K.members for K in c.conjugates)
        from hyperinduct.groups import normalizer
        assert c.size == G.order // normalizer(G, c.representative).order
        assert len({K.members for K in c.conjugates}) == c.size


@given(st.sampled_from(SMALL[:12]), st.data())
@settings(max_examples=30, deadline=None)
def test_subgroup_count_invariant_under_relabeling(spec, data):
    G = make_group(spec)
    perm = data.draw(st.permutations(range(G.order)))
    H = G.relabel(perm)
    assert H.check_axioms()
    assert len(all_subgroups(H)) == len(all_subgroups(G))
    assert sorted(c.size for c in subgroup_classes(H)) == sorted(c.size for c in subgroup_classes(G))


def test_quotients(S3):
    Q, proj = quotient(S3, S3.whole())
    assert Q.order == 1
    C3 = sub_by_order(S3, 3)
    Q, proj = quotient(S3, C3)
    assert Q.order == 2 and proj.is_homomorphism() and proj.is_surjective()
    assert proj.kernel() == C3
    C12 = make_group("cyclic:12")
    C4 = sub_by_order(C12, 4)
    Q, proj = quotient(C12, C4)
    assert Q.order == 3 and Q.is_abelian() and any(Q.element_order(x) == 3 for x in Q.elements())
    with pytest.raises(NotNormal):
        quotient(S3, sub_by_order(S3, 2))


@pytest.mark.parametrize("spec", SMALL)
def test_quotient_by_normal_subgroups(spec):
    G = make_group(spec)
    for N in all_subgroups(G):
        if is_normal(G, N):
            Q, proj = quotient(G, N)
            assert Q.order == G.order // N.order
            assert proj.kernel() == N
            assert Q.check_axioms()


def test_abelianization(S3, A4g):
    assert abelianization_order(make_group("cyclic:12")) == 12
    assert abelianization_order(S3) == 2
    assert abelianization_order(A4g) == 3
    assert abelianization_order(make_group(Q8)) == 4


def test_centralizer(S3):
    assert centralizer(S3, S3.trivial()) == S3.whole()
    C3 = sub_by_order(S3, 3)
    assert centralizer(S3, C3) == C3
    C12 = make_group("cyclic:12")
    for H in all_subgroups(C12):
        assert centralizer(C12, H) == C12.whole()
    # direct check on the six elements
    t = perm_index(S3, 1, 2)
    assert set(centralizer(S3, S3.generate([t])).members) == {S3.identity, t}


@pytest.mark.parametrize("spec", SMALL)
def test_sylow(spec):
    G = make_group(spec)
    for p in [2, 3, 5, 7]:
        P = sylow_subgroup(G, p)
        n = G.order
        while n % p == 0:
            n //= p
        assert P.order == G.order // n
        assert math.gcd(G.order // P.order, p) == 1
