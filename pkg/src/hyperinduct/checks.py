"""Machine checks of the properties the library relies on.

Each check returns a :class:`CheckResult`; ``run_all`` is what the ``verify``
CLI command executes.  ``full=True`` uses the larger sweep sizes.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import _arith
from .classify import Case, choose_N, classify_all, satisfies_N_conditions, verify_alpha, verify_diagram
from .construct import make_group
from .dress import dress_certificate, verify_certificate
from .families import (hyperelementary_corpus, in_I, is_p_elementary,
                       is_p_hyperelementary, cyclic_quotient_check)
from .generation import exponent_report, split_verschiebung
from .goursat import goursat_enumerate
from .groups import FiniteGroup, all_subgroups
from .oracles import (brute_force_subgroups, brute_is_p_elementary,
                      brute_is_p_hyperelementary, materialized_product_subgroups)

A4 = "perm(4;(1 2 3);(1 2)(3 4))"
NAMED = ["cyclic:1", "cyclic:2", "cyclic:4", "cyclic:6", "cyclic:12",
         "product(cyclic:2,cyclic:2)", "sym:3", "dihedral:4", "dihedral:5", "dihedral:6",
         "perm(8;(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6))", A4,
         "product(sym:3,cyclic:2)", "sym:4", "product(sym:3,cyclic:3)", "dihedral:12",
         "semidirect(c:7,p:cyclic:3,action:[2])", "semidirect(c:5,p:cyclic:4,action:[2])"]

DICHOTOMY_GROUPS = ["sym:3", "cyclic:6", "dihedral:4", A4, "product(sym:3,cyclic:2)"]


def standard_corpus(bound: int) -> list[FiniteGroup]:
    """Named groups plus the hyperelementary corpora for p = 2, 3, 5, all of
    order ``<= bound``, without repeated labels."""
    seen: dict[str, FiniteGroup] = {}
    for spec in NAMED:
        G = make_group(spec)
        if G.order <= bound:
            seen.setdefault(G.label, G)
    for p in (2, 3, 5):
        for G in hyperelementary_corpus(p, bound):
            seen.setdefault(G.label, G)
    return list(seen.values())


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name} ({self.cases} cases, {self.seconds:.2f}s){extra}"


def _run(name: str, body: Callable[[list], int]) -> CheckResult:
    failures: list = []
    t = time.perf_counter()
    cases = body(failures)
    return CheckResult(name, not failures, cases, failures, time.perf_counter() - t)


def check_group_axioms(groups: list[FiniteGroup]) -> CheckResult:
    def body(fail):
        for G in groups:
            if not G.check_axioms():
                fail.append(G.label)
        return len(groups)
    return _run("group axioms", body)


def check_subgroup_enumeration(groups: list[FiniteGroup], bound: int = 24) -> CheckResult:
    def body(fail):
        n = 0
        for G in groups:
            if G.order > bound:
                continue
            n += 1
            if {S.set for S in all_subgroups(G)} != brute_force_subgroups(G):
                fail.append(G.label)
        return n
    return _run(f"subgroup lattice vs brute force (order <= {bound})", body)


def check_family_detectors(groups: list[FiniteGroup], bound: int = 48) -> CheckResult:
    def body(fail):
        n = 0
        for G in groups:
            if G.order > bound:
                continue
            for p in _arith.prime_divisors(G.order) or [2]:
                for H in all_subgroups(G):
                    n += 1
                    he, el = is_p_hyperelementary(H, p), is_p_elementary(H, p)
                    if he != brute_is_p_hyperelementary(H, p) or el != brute_is_p_elementary(H, p):
                        fail.append((G.label, p, H.describe()))
                    if el and not he:
                        fail.append(("elementary but not hyperelementary", G.label, p))
        return n
    return _run(f"family detectors vs definition search (order <= {bound})", body)


def check_cyclic_quotients(bound: int = 100, primes=(2, 3, 5)) -> CheckResult:
    def body(fail):
        n = 0
        for p in primes:
            for G in hyperelementary_corpus(p, bound):
                n += 1
                r = cyclic_quotient_check(G, p, strict=False)
                if not r.consistent:
                    fail.append((G.label, p))
        return n
    return _run(f"cyclic q-quotients imply p-elementary (corpus, order <= {bound})", body)


def check_dichotomy(specs=DICHOTOMY_GROUPS, primes=(2, 3), Ms=(2, 3), window_factor: int = 3) -> CheckResult:
    def body(fail):
        n = 0
        for spec in specs:
            G = make_group(spec)
            for p in primes:
                for M in Ms:
                    table = classify_all(G, p, M)
                    if not satisfies_N_conditions(table.N, M, G.order, p):
                        fail.append(("N conditions", spec, p, M))
                    for rec in table.records:
                        n += 1
                        if rec.case is Case.ELEMENTARY:
                            a = verify_alpha(rec, window_factor * table.N)
                            d = verify_diagram(rec)
                            if not (a and d and rec.H.order == rec.P.order * rec.H.record.d1):
                                fail.append((spec, p, M, rec.H.record.describe(),
                                             a.counterexample, d.counterexample))
                        else:
                            m = rec.m
                            H = rec.H
                            bad = [(g, z) for z in range(-2 * table.N, 2 * table.N + 1) if z % m
                                   for g in range(G.order) if H.in_gamma(g, z)]
                            if bad:
                                fail.append(("deep unsound", spec, p, M, bad[0]))
        return n
    return _run("deep/elementary dichotomy with alpha and diagram verification", body)


def check_dress(groups: list[FiniteGroup], bound: int = 48) -> CheckResult:
    def body(fail):
        n = 0
        for G in groups:
            if G.order > bound:
                continue
            for p in _arith.prime_divisors(G.order):
                n += 1
                cert = dress_certificate(G, p)
                if not verify_certificate(G, cert):
                    fail.append((G.label, p))
        return n
    return _run(f"induction certificates round-trip (order <= {bound})", body)


def check_goursat(groups: list[FiniteGroup], max_order: int = 12, max_N: int = 8) -> CheckResult:
    def body(fail):
        n = 0
        for G in groups:
            if G.order > max_order:
                continue
            for N in range(1, max_N + 1):
                n += 1
                recs = goursat_enumerate(G, N)
                got = [frozenset(r.subgroup().elements()) for r in recs]
                want = materialized_product_subgroups(G, N)
                if (len(got) != len(want) or set(got) != set(want)
                        or Counter(map(len, got)) != Counter(map(len, want))):
                    fail.append((G.label, N, len(got), len(want)))
                for r in recs:
                    if len(r.subgroup().elements()) != r.order:
                        fail.append((G.label, N, "order mismatch"))
                        break
        return n
    return _run(f"Goursat enumeration vs materialized product (|G| <= {max_order}, N <= {max_N})", body)


def check_arithmetic(bound: int = 200) -> CheckResult:
    def body(fail):
        n = 0
        for k in range(1, bound + 1):
            for m in range(1, bound + 1):
                n += 1
                s = split_verschiebung(k, m)
                primes_ok = all(m % q == 0 for q in _arith.prime_divisors(s.k1))
                if not (s.k0 * s.k1 == k and primes_ok and math.gcd(s.k0, m) == 1
                        and (s.l0 * s.k0 - 1) % m == 0 and math.gcd(s.l0, m) == 1):
                    fail.append(("split", k, m))
                if in_I(k, m) and in_I(m, m) and k * m <= bound and not in_I(k * m, m):
                    fail.append(("I multiplicative", k, m))
        # closure of I(g) under products for every g order
        for o in range(1, bound + 1):
            I = [k for k in range(1, bound + 1) if in_I(k, o)]
            Iset = set(I)
            for a in I:
                for b in I:
                    if a * b > bound:
                        break
                    if a * b not in Iset:
                        fail.append(("I closure", o, a, b))
        return n
    return _run(f"Verschiebung splitting and I(g) laws (k, m <= {bound})", body)


def check_exponents(bound: int = 10000) -> CheckResult:
    def body(fail):
        r = exponent_report(60)
        if (r.c, r.d) != (1296000, 120):
            fail.append(("n=60", r.c, r.d))
        for n in range(1, bound + 1):
            r = exponent_report(n)
            if r.c % r.d or r.d % r.refined_nk0:
                fail.append(("divisibility", n))
        return bound
    return _run(f"exponent bounds d | c, refined | d (n <= {bound})", body)


def choose_N_minimal(M: int, n: int, p: int) -> bool:
    N = choose_N(M, n, p)
    if not satisfies_N_conditions(N, M, n, p):
        return False
    return not any(satisfies_N_conditions(c, M, n, p) for c in range(1, N))


def run_all(full: bool = False) -> list[CheckResult]:
    corpus = standard_corpus(48 if full else 24)
    return [
        check_group_axioms(corpus),
        check_subgroup_enumeration(corpus),
        check_family_detectors(corpus, 48 if full else 24),
        check_cyclic_quotients(100 if full else 48),
        check_dichotomy(primes=(2, 3), Ms=(2, 3) if full else (2,)),
        check_dress(corpus),
        check_goursat(corpus, 12, 8 if full else 4),
        check_arithmetic(200 if full else 60),
        check_exponents(10000 if full else 1000),
    ]
