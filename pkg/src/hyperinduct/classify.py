"""Deep/elementary classification of p-hyperelementary subgroups of ``G x Z/N``.

For ``H <= G x Z/N`` let ``Gamma_H`` be its preimage in ``G x Z``.  Its
projection to Z is ``m Z`` with ``m = N/N'`` (N' the order of the image of H
in Z/N).  Either ``m >= M`` ("deep"), or H is p-elementary and
``Gamma_H = P x Z`` through ``alpha(g, n) = (g g0^n, n k)``, where
``P = H ∩ (G x 0)`` is a p-group, ``k = m``, and ``g0`` is the image of a
generator ``u`` of ``Z/ell`` under a splitting ``s`` of ``G' -> Z/ell``.

Group-level data only; nothing here touches K-theory.  The infinite group
``Gamma_H`` is only ever probed on finite windows of the Z coordinate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from . import _arith
from .errors import DichotomyFailure
from .families import is_p_elementary, is_p_group, is_p_hyperelementary
from .goursat import ProductSubgroup, goursat_enumerate
from .groups import FiniteGroup, Subgroup


class Case(str, Enum):
    DEEP = "deep"
    ELEMENTARY = "elementary"


def choose_N(M: int, n: int, p: int) -> int:
    """Least N prime to p whose prime divisors are the primes q != p of n,
    with every full prime power ``q^k || N`` at least ``M n``."""
    _arith.require_prime(p)
    if M < 1 or n < 1:
        raise ValueError("M and n must be positive")
    N = 1
    for q in _arith.prime_divisors(n):
        if q == p:
            continue
        qk = q
        while qk < M * n:
            qk *= q
        N *= qk
    return N


def satisfies_N_conditions(N: int, M: int, n: int, p: int) -> bool:
    """Direct re-check of the two conditions ``choose_N`` is meant to meet."""
    if N % p == 0:
        return False
    fac = _arith.factorize(N)
    wanted = {q for q in _arith.prime_divisors(n) if q != p}
    if set(fac) != wanted:
        return False
    return all(q ** k >= M * n for q, k in fac.items())


@dataclass(frozen=True)
class Verification:
    ok: bool
    counterexample: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ClassificationRecord:
    H: ProductSubgroup
    p: int
    M: int
    case: Case
    m: int
    elementary: bool  # H is p-elementary (recorded in both cases)
    P: Subgroup | None = None
    ell: int | None = None
    u: int | None = None
    splitting: tuple[int, ...] | None = field(default=None, repr=False)  # s(i) for i in Z/ell
    g0: int | None = None
    k: int | None = None

    @property
    def G(self) -> FiniteGroup:
        return self.H.G

    @property
    def N(self) -> int:
        return self.H.N

    def j(self, g: int, i: int) -> int:
        """``j: P x Z/ell -> G``, ``(g, i) -> g s(i)``."""
        return self.G.table[g][self.splitting[i % self.ell]]

    def alpha(self, g: int, n: int) -> tuple[int, int]:
        """``(g, n) -> (g g0^n, n k)`` in ``G x Z``."""
        G = self.G
        return G.table[g][G.power(self.g0, n)], n * self.k

    def summary(self) -> dict:
        out = {"order": self.H.order, "m": self.m, "case": self.case.value,
               "elementary": self.elementary}
        if self.case is Case.ELEMENTARY:
            out.update({"P_order": self.P.order, "ell": self.ell, "k": self.k,
                        "g0": self.G.format(self.g0)})
        return out


def _splitting(rec, ell: int, G: FiniteGroup) -> tuple[int, ...] | None:
    """Least-index element of A with phase 1 and order ell, and its powers."""
    for a, ph in zip(rec.A.members, rec.phase):
        if ph == 1 % ell and G.element_order(a) == ell:
            return tuple(G.power(a, i) for i in range(ell))
    return None


def classify(H: ProductSubgroup, M: int, p: int) -> ClassificationRecord:
    """Classify one p-hyperelementary ``H <= G x Z/N``.

    Deep is returned whenever ``m >= M``, even if H is also elementary.
    Raises :class:`DichotomyFailure` if a non-deep H fails to produce verified
    elementary data.
    """
    if not is_p_hyperelementary(H, p):
        raise ValueError("H is not p-hyperelementary")
    rec = H.record
    G = H.G
    m = H.N // rec.d1
    elementary = is_p_elementary(H, p)
    if m >= M:
        return ClassificationRecord(H, p, M, Case.DEEP, m, elementary)
    P = rec.B  # = {g : (g, 0) in H}
    if not is_p_group(P, p):
        raise DichotomyFailure(f"{H!r}: m={m} < M={M} but H ∩ G = {P.describe()} is not a {p}-group")
    if not elementary:
        raise DichotomyFailure(f"{H!r}: m={m} < M={M} but H is not {p}-elementary")
    ell = rec.ell
    if math.gcd(ell, p) != 1:
        raise DichotomyFailure(f"{H!r}: ell={ell} not prime to {p}")
    s = _splitting(rec, ell, G)
    if s is None:
        raise DichotomyFailure(f"{H!r}: no splitting of A -> Z/{ell}")
    u = 1 % ell
    return ClassificationRecord(H, p, M, Case.ELEMENTARY, m, elementary,
                               P=P, ell=ell, u=u, splitting=s, g0=s[u], k=m)


def verify_alpha(rec: ClassificationRecord, window: int) -> Verification:
    """Check ``alpha`` on ``n in [-window, window]``: lands in Gamma_H, is
    injective, and hits every element of Gamma_H with Z coordinate ``n k``.
    Also checks that no element of Gamma_H in that range has a Z coordinate
    outside ``k Z``."""
    if rec.case is not Case.ELEMENTARY:
        raise ValueError("verify_alpha needs an elementary record")
    G, H, k = rec.G, rec.H, rec.k
    for n in range(-window, window + 1):
        fibre = set()
        for g in rec.P.members:
            h, z = rec.alpha(g, n)
            if not H.in_gamma(h, z):
                return Verification(False, ("not in Gamma_H", (g, n), (h, z)))
            if h in fibre:
                return Verification(False, ("not injective", (g, n), (h, z)))
            fibre.add(h)
        for h in range(G.order):
            if H.in_gamma(h, n * k) and h not in fibre:
                return Verification(False, ("not surjective", (h, n * k)))
    for z in range(-window * k, window * k + 1):
        if z % k and any(H.in_gamma(h, z) for h in range(G.order)):
            return Verification(False, ("Z-coordinate outside kZ", z))
    return Verification(True)


def verify_diagram(rec: ClassificationRecord) -> Verification:
    """Check ``(j x k) ∘ (id_P x beta) = i ∘ alpha`` on the generators
    ``(g, 0)`` (g generating P) and ``(e, 1)``, where ``beta(n) = (n u, n)``.

    Also checks that u generates Z/ell, that s splits the projection onto
    Z/ell, and that j is an injective homomorphism.
    """
    if rec.case is not Case.ELEMENTARY:
        raise ValueError("verify_diagram needs an elementary record")
    G, ell = rec.G, rec.ell
    if math.gcd(rec.u, ell) != 1:
        return Verification(False, ("u does not generate Z/ell", rec.u))
    phase = rec.H.record.phase_of
    s = rec.splitting
    for i in range(ell):
        if phase.get(s[i]) != i or G.table[s[i]][s[1 % ell]] != s[(i + 1) % ell]:
            return Verification(False, ("s is not a splitting", i))
    imgs = {}
    for g in rec.P.members:
        for i in range(ell):
            x = rec.j(g, i)
            if x in imgs:
                return Verification(False, ("j not injective", (g, i), imgs[x]))
            imgs[x] = (g, i)
    for g in rec.P.generators:
        for i in range(ell):
            if not G.commute(g, s[i]):
                return Verification(False, ("j not a homomorphism", (g, i)))
    gens = [(g, 0) for g in rec.P.generators] + [(G.identity, 1)]
    for g, n in gens:
        left = (rec.j(g, n * rec.u), rec.k * n)
        right = rec.alpha(g, n)
        if left != right:
            return Verification(False, ("diagram", (g, n), left, right))
    return Verification(True)


@dataclass(frozen=True)
class ClassificationTable:
    G: FiniteGroup
    p: int
    M: int
    N: int
    records: tuple[ClassificationRecord, ...]

    @property
    def not_deep(self) -> tuple[ClassificationRecord, ...]:
        """Records whose preimage is not inside ``G x mZ`` for any ``m >= M``."""
        return tuple(r for r in self.records if r.m < self.M)


def classify_all(G: FiniteGroup, p: int, M: int) -> ClassificationTable:
    N = choose_N(M, G.order, p)
    records = []
    for rec in goursat_enumerate(G, N):
        H = rec.subgroup()
        if is_p_hyperelementary(H, p):
            records.append(classify(H, M, p))
    return ClassificationTable(G, p, M, N, tuple(records))
