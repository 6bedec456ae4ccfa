"""p-subgroups, p-elementary and p-hyperelementary subgroups.

The detectors accept anything exposing ``elements()``, ``mul``,
``element_order`` and ``identity``: a :class:`FiniteGroup`, a
:class:`Subgroup`, or a product subgroup of ``G x Z/N``.

Both detectors rest on one observation: in ``C ⋊ P`` (C cyclic of order
prime to p, P a p-group) the elements of order prime to p are exactly C.
So a group is p-hyperelementary iff its p'-elements form a cyclic subgroup
of p-power index, and p-elementary iff that subgroup is moreover central.
A set of p'-elements is a cyclic subgroup iff it contains an element whose
order equals the size of the set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import _arith
from .construct import action_map, cyclic, make_group, semidirect
from .errors import LemmaViolation
from .groups import (DEFAULT_CAP, FiniteGroup, Subgroup, SubgroupClass,
                     abelianization_order, centralizer, direct_product,
                     is_normal, subgroup_classes, sylow_subgroup)


def p_prime_elements(X, p: int) -> list:
    return [x for x in X.elements() if X.element_order(x) % p]


def _cyclic_p_prime_core(X, p: int):
    """Generator of the p'-elements if they form a cyclic subgroup of
    p-power index, else ``None``."""
    S = p_prime_elements(X, p)
    if X.order % len(S) or not _arith.is_power_of(X.order // len(S), p):
        return None, S
    for x in S:
        if X.element_order(x) == len(S):
            return x, S
    return None, S


def is_p_group(X, p: int) -> bool:
    """True iff the order of ``X`` is a power of ``p`` (order 1 included)."""
    _arith.require_prime(p)
    return _arith.is_power_of(X.order, p)


def is_p_hyperelementary(X, p: int) -> bool:
    _arith.require_prime(p)
    gen, _ = _cyclic_p_prime_core(X, p)
    return gen is not None


def is_p_elementary(X, p: int) -> bool:
    """Cyclic p'-part that is central, with p-power index."""
    _arith.require_prime(p)
    gen, _ = _cyclic_p_prime_core(X, p)
    if gen is None:
        return False
    return all(X.mul(gen, y) == X.mul(y, gen) for y in X.elements())


@dataclass(frozen=True)
class FamilyReport:
    prime: int
    p_subgroup_classes: tuple[SubgroupClass, ...]
    p_elementary_classes: tuple[SubgroupClass, ...]
    p_hyperelementary_classes: tuple[SubgroupClass, ...]


def family_report(G: FiniteGroup, p: int) -> FamilyReport:
    """Sort the subgroup classes of ``G`` into p-groups, p-elementary and
    p-hyperelementary classes."""
    _arith.require_prime(p)
    classes = subgroup_classes(G)
    return FamilyReport(
        p,
        tuple(c for c in classes if is_p_group(c.representative, p)),
        tuple(c for c in classes if is_p_elementary(c.representative, p)),
        tuple(c for c in classes if is_p_hyperelementary(c.representative, p)),
    )


def hyperelementary_classes(G: FiniteGroup, p: int) -> list[SubgroupClass]:
    return [c for c in subgroup_classes(G) if is_p_hyperelementary(c.representative, p)]


@dataclass(frozen=True)
class PerpSet:
    """Elements of order prime to p centralizing a p-subgroup."""

    base: Subgroup
    prime: int
    elements: tuple[int, ...]
    orders: tuple[int, ...]


def c_perp(G: FiniteGroup, P: Subgroup, p: int) -> PerpSet:
    _arith.require_prime(p)
    if not is_p_group(P, p):
        raise ValueError(f"{P.describe()} is not a {p}-group")
    elems = tuple(g for g in centralizer(G, P).members if G.element_order(g) % p)
    return PerpSet(P, p, elems, tuple(G.element_order(g) for g in elems))


def in_I(k: int, order_g: int) -> bool:
    """Every prime factor of ``k`` divides ``order_g``."""
    if k < 1 or order_g < 1:
        raise ValueError("k and the element order must be positive")
    return all(order_g % q == 0 for q in _arith.factorize(k))


def i_set(order_g: int, bound: int) -> list[int]:
    """All ``k <= bound`` whose prime factors divide ``order_g``, ascending."""
    return [k for k in range(1, bound + 1) if in_I(k, order_g)]


@dataclass(frozen=True)
class CyclicQuotientResult:
    hypothesis_holds: bool
    conclusion_holds: bool

    @property
    def consistent(self) -> bool:
        return self.conclusion_holds or not self.hypothesis_holds


def cyclic_quotient_check(G, p: int, strict: bool = True) -> CyclicQuotientResult:
    """For a p-hyperelementary group: does every prime q != p dividing the
    order also divide the abelianization order (so G maps onto a nontrivial
    cyclic q-group), and is G p-elementary?

    The first implies the second; with ``strict`` a counterexample raises
    :class:`LemmaViolation`.
    """
    _arith.require_prime(p)
    if not is_p_hyperelementary(G, p):
        raise ValueError(f"{G.label} is not {p}-hyperelementary")
    ab = abelianization_order(G)
    hyp = all(ab % q == 0 for q in _arith.prime_divisors(G.order) if q != p)
    result = CyclicQuotientResult(hyp, is_p_elementary(G, p))
    if strict and not result.consistent:
        raise LemmaViolation(f"{G.label}, p={p}: cyclic q-quotients exist but not p-elementary")
    return result


def sylow_centralizer_condition(G: FiniteGroup, p: int) -> bool:
    """Sylow p-subgroup normal, and ``C_G(P) <= P`` for each nontrivial P in it."""
    _arith.require_prime(p)
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    S = sylow_subgroup(G, p)
    if not is_normal(G, S):
        return False
    for cls in subgroup_classes(G):
        for P in cls.conjugates:
            if P.is_trivial() or not P <= S:
                continue
            if not centralizer(G, P) <= P:
                return False
    return True



# names used by the operation catalogue this package follows
lemma31_check = cyclic_quotient_check
example52_condition = sylow_centralizer_condition


Q8_SPEC = "perm(8;(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6))"


def corpus_p_groups(p: int, bound: int, cap: int = DEFAULT_CAP) -> list[FiniteGroup]:
    """The fixed p-group list used by :func:`hyperelementary_corpus`: trivial,
    cyclic ``p^k``, ``C_p x C_p``, and for p = 2 the dihedral and quaternion
    groups of order 8; only those of order ``<= bound``."""
    out = [cyclic(1)]
    q = p
    while q <= bound:
        out.append(cyclic(q, cap))
        q *= p
    if p * p <= bound:
        out.append(direct_product(cyclic(p), cyclic(p), cap))
    if p == 2 and bound >= 8:
        out.append(make_group("dihedral:4", cap))
        out.append(make_group(Q8_SPEC, cap))
    return out


def _actions(m: int, P: FiniteGroup):
    for acts in product(_arith.units(m), repeat=len(P.generators)):
        if action_map(m, P, list(acts)) is not None:
            yield list(acts)


def hyperelementary_corpus(p: int, order_bound: int, cap: int = DEFAULT_CAP) -> list[FiniteGroup]:
    """All ``Z/c ⋊ P`` with ``gcd(c, p) = 1``, P from :func:`corpus_p_groups`,
    every action ``P -> Aut(Z/c)``, and ``c |P| <= order_bound``.
    Isomorphic duplicates are kept."""
    _arith.require_prime(p)
    if order_bound > cap:
        raise ValueError(f"order bound {order_bound} exceeds cap {cap}")
    groups = []
    for P in corpus_p_groups(p, order_bound, cap):
        for c in range(1, order_bound // P.order + 1):
            if math.gcd(c, p) != 1:
                continue
            for acts in _actions(c, P):
                groups.append(semidirect(c, P, acts, cap))
    return groups
