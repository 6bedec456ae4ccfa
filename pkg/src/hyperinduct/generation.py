"""Generation data from p-subgroups, the elementary cover, Verschiebung
splitting arithmetic, and exponent bounds for NK_0(ZG)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _arith
from .families import c_perp, family_report, is_p_elementary
from .groups import FiniteGroup, Subgroup, SubgroupClass, class_of


@dataclass(frozen=True)
class GenerationDatum:
    """One map ``phi(P, g)`` with its Verschiebung index set ``I(g)``.

    ``E = <g> x P`` is the p-elementary subgroup the map factors through.
    """

    P: SubgroupClass
    g: int
    g_order: int
    allowed_primes: tuple[int, ...]  # k in I(g) iff every prime of k is listed
    E: Subgroup

    @property
    def plain(self) -> bool:
        """``g = e``: ordinary induction from P."""
        return self.g == self.E.parent.identity


def generation_data(G: FiniteGroup, p: int) -> list[GenerationDatum]:
    """For each class of p-subgroups P (by representative) and every g in
    ``C_G^perp(P)``, the datum ``(P, g, I(g), <g> x P)``."""
    data = []
    for cls in family_report(G, p).p_subgroup_classes:
        P = cls.representative
        perp = c_perp(G, P, p)
        for g, og in zip(perp.elements, perp.orders):
            E = G.generate(P.generators + (g,))
            if E.order != og * P.order or not is_p_elementary(E, p):
                raise AssertionError(f"<{G.format(g)}> x {P.describe()} is not p-elementary")
            data.append(GenerationDatum(cls, g, og, tuple(_arith.prime_divisors(og)), E))
    return data


def dedupe(data: list[GenerationDatum]) -> list[GenerationDatum]:
    """Keep the first datum for each (P class, E class, |g|) triple."""
    seen, out = set(), []
    for d in data:
        key = (d.P.representative.members, class_of(d.E).representative.members, d.g_order)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


def elementary_cover(G: FiniteGroup, p: int) -> list[SubgroupClass]:
    """Distinct conjugacy classes of the subgroups E arising in the generation
    data, sorted by (order, representative)."""
    classes = {}
    for d in generation_data(G, p):
        cls = class_of(d.E)
        classes[cls.representative.members] = cls
    return sorted(classes.values(), key=lambda c: (c.order, c.representative.members))


@dataclass(frozen=True)
class VerschiebungSplit:
    k0: int
    k1: int
    l0: int


def split_verschiebung(k: int, m: int) -> VerschiebungSplit:
    """Write ``k = k0 k1`` with every prime of k1 dividing m and
    ``gcd(k0, m) = 1``; ``l0`` inverts k0 mod m, so ``(g^l0)^k0 = g`` for
    ``|g| = m``."""
    if k < 1:
        raise ValueError("k must be positive")
    if m < 1:
        raise ValueError("m = |g| must be positive")
    k1 = 1
    for q, e in _arith.factorize(k).items():
        if m % q == 0:
            k1 *= q ** e
    k0 = k // k1
    l0 = pow(k0, -1, m) if m > 1 else 1
    return VerschiebungSplit(k0, k1, l0)


def frobenius_verschiebung_identity(k: int, x: int) -> int:
    """Integer shadow of ``F_k ∘ V_k = k·id``: returns ``k x``."""
    if k < 1:
        raise ValueError("k must be positive")
    return k * x


def c_q(n: int, q: int, slack: int = 0) -> int:
    """``q^l`` with l the least integer with ``q^l >= k n`` (``q^k || n``),
    plus ``slack`` extra factors of q."""
    k = _arith.valuation(n, q)
    val = q
    while val < k * n:
        val *= q
    return val * q ** slack


def c_bound(n: int, slack: int = 0) -> int:
    return math.prod(c_q(n, q, slack) for q in _arith.prime_divisors(n))


@dataclass(frozen=True)
class ExponentReport:
    n: int
    per_prime: dict[int, int]
    c: int
    d: int
    refined_nk0: int
    vanishing_primes: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"n": self.n, "perPrime": {str(q): v for q, v in self.per_prime.items()},
                "c": self.c, "d": self.d, "refinedNK0": self.refined_nk0,
                "vanishingPrimes": list(self.vanishing_primes)}


def exponent_report(n: int, slack: int = 0) -> ExponentReport:
    """Exponent bounds for NK_0(ZG), ``|G| = n``.

    ``c(n) = prod_q c_q(n)``; ``d(n) = prod_q c(n_q)`` with ``n_q`` the
    q-primary part; ``refined_nk0`` keeps only the factors ``c(n_p)`` with
    ``p^2 | n``, since the p-localization vanishes in degrees ``<= 1`` when
    ``p^2`` does not divide n (a derived combination, not a quoted bound).
    """
    if n < 1:
        raise ValueError("n must be positive")
    fac = _arith.factorize(n)
    per_prime = {q: c_q(n, q, slack) for q in fac}
    d = math.prod(c_bound(q ** e, slack) for q, e in fac.items())
    refined = math.prod(c_bound(q ** e, slack) for q, e in fac.items() if e >= 2)
    vanish = tuple(q for q, e in fac.items() if e == 1)
    return ExponentReport(n, per_prime, math.prod(per_prime.values()), d, refined, vanish)


@dataclass(frozen=True)
class VanishingReport:
    order: int
    squarefree: bool
    zero_localizations: tuple[int, ...]
    statement: str

    def as_dict(self) -> dict:
        return {"order": self.order, "squarefree": self.squarefree,
                "zeroLocalizations": list(self.zero_localizations),
                "statement": self.statement}


def vanishing_report(order: int | FiniteGroup) -> VanishingReport:
    """Primes p with ``p^2 ∤ |G|``, for which ``NK_n(ZG)_(p) = 0`` when ``n <= 1``."""
    n = order.order if isinstance(order, FiniteGroup) else order
    if n < 1:
        raise ValueError("order must be positive")
    fac = _arith.factorize(n)
    zero = tuple(q for q, e in fac.items() if e == 1)
    squarefree = all(e == 1 for e in fac.values())
    if squarefree:
        statement = (f"|G| = {n} is square-free, so NK_n(ZG) = 0 for n <= 1 "
                     f"(every p-localization vanishes)")
    elif zero:
        statement = ("NK_n(ZG)_(p) = 0 for n <= 1 at p in {"
                     + ", ".join(map(str, zero)) + "} (p^2 does not divide |G|)")
    else:
        statement = f"no prime p with p^2 not dividing |G| = {n}; no vanishing conclusion"
    return VanishingReport(n, squarefree, zero, statement)
