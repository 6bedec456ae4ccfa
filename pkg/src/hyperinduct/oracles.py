"""Slow reference implementations used to cross-check the fast paths.

Nothing in the main computation imports this module.
"""

from __future__ import annotations

import itertools
import math

from . import _arith
from .construct import cyclic
from .groups import FiniteGroup, Subgroup, all_subgroups, closure, direct_product


def brute_force_subgroups(G: FiniteGroup) -> set[frozenset[int]]:
    """All subgroups of G.

    Up to order 12 every subset containing the identity is tested for
    closure.  Beyond that, the subgroups generated by every set of at most
    ``floor(log2 |G|)`` elements are collected (every group of order n has a
    generating set of that size).
    """
    if "brute_subgroups" in G._memo:
        return G._memo["brute_subgroups"]
    G._memo["brute_subgroups"] = out = _brute_force_subgroups(G)
    return out


def _brute_force_subgroups(G: FiniteGroup) -> set[frozenset[int]]:
    n = G.order
    e = G.identity
    others = [x for x in range(n) if x != e]
    out: set[frozenset[int]] = set()
    if n <= 12:
        for r in range(len(others) + 1):
            for combo in itertools.combinations(others, r):
                s = {e, *combo}
                if all(G.table[a][b] in s for a in s for b in s):
                    out.add(frozenset(s))
        return out
    for r in range(0, max(1, n.bit_length() - 1) + 1):
        for combo in itertools.combinations(others, r):
            out.add(frozenset(closure(G, list(combo))))
    return out


def _subgroups_within(H: Subgroup) -> list[frozenset[int]]:
    # past order 24 the generator-tuple search gets slow; fall back to the
    # lattice enumeration, which is itself checked against this oracle
    G = H.parent
    subs = (brute_force_subgroups(G) if G.order <= 24
            else [S.set for S in all_subgroups(G)])
    return [s for s in subs if s <= H.set]


def brute_is_p_hyperelementary(H: Subgroup, p: int) -> bool:
    """Search for a normal cyclic C <= H of order prime to p with p-power index."""
    G = H.parent
    for x in H.members:
        o = G.element_order(x)
        if o % p == 0 or H.order % o or not _arith.is_power_of(H.order // o, p):
            continue
        C = {G.power(x, i) for i in range(o)}
        if all(G.conj(h, c) in C for h in H.members for c in C):
            return True
    return False


def brute_is_p_elementary(H: Subgroup, p: int) -> bool:
    """Search for cyclic C (order prime to p) and a p-subgroup P with
    ``H = C x P`` as an internal direct product."""
    G = H.parent
    p_subs = [s for s in _subgroups_within(H) if _arith.is_power_of(len(s), p)]
    for x in H.members:
        o = G.element_order(x)
        if o % p == 0:
            continue
        C = {G.power(x, i) for i in range(o)}
        for P in p_subs:
            if o * len(P) != H.order or len(C & P) != 1:
                continue
            if all(G.commute(c, y) for c in C for y in P):
                return True
    return False


def materialized_product_subgroups(G: FiniteGroup, N: int, cap: int = 500):
    """Subgroups of the tabulated product ``G x Z/N`` as sets of pairs
    ``(g index, residue)``."""
    P = direct_product(G, cyclic(N, cap=max(N, 1)), cap=cap)
    subs = []
    for S in all_subgroups(P):
        subs.append(frozenset((x // N, x % N) for x in S.members))
    return subs


def brute_mark(G: FiniteGroup, H: Subgroup, C: Subgroup) -> int:
    """Count cosets gH (as sets) left fixed by every element of C."""
    cosets = {frozenset(G.table[g][h] for h in H.members) for g in range(G.order)}
    return sum(1 for X in cosets
               if all(frozenset(G.table[c][x] for x in X) == X for c in C.members))


def brute_c_perp(G: FiniteGroup, P: Subgroup, p: int) -> list[int]:
    return [g for g in range(G.order)
            if math.gcd(G.element_order(g), p) == 1
            and all(G.commute(g, x) for x in P.members)]


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Exhaustive isomorphism search (small orders only): map G's generators
    to every tuple of elements of matching orders and check the induced map."""
    if G.order != H.order:
        return False
    gens = list(G.generators)
    cands = [[h for h in range(H.order) if H.element_order(h) == G.element_order(g)]
             for g in gens]
    for images in itertools.product(*cands):
        f = {G.identity: H.identity}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, h in zip(gens, images):
                    y, v = G.table[x][g], H.table[f[x]][h]
                    if y in f:
                        if f[y] != v:
                            ok = False
                            break
                    else:
                        f[y] = v
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(set(f.values())) == G.order:
            return True
    return False
