"""Subgroups of ``G x Z/N`` via Goursat's lemma, without building the product.

A subgroup H is encoded by ``(A, B, d1, d2, phase)``: A, B subgroups of G with
B normal in A and A/B cyclic of order ``ell = d1/d2``; ``C1 <= Z/N`` the
subgroup of order d1 (multiples of ``N/d1``), ``C2 <= C1`` of order d2; and
``phase: A -> Z/ell`` a surjective homomorphism with kernel B.  Then::

    H = {(a, t * N/d1) : a in A, 0 <= t < d1, t = phase(a) mod ell}

Writing ``C1 = Z/d1`` via t, ``C1/C2 = Z/ell`` via ``t mod ell``, so phase is
the Goursat isomorphism ``A/B -> C1/C2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from . import _arith
from .construct import cyclic
from .errors import CapExceeded
from .families import is_p_hyperelementary
from .groups import FiniteGroup, GroupHom, Subgroup, all_subgroups, quotient

MATERIALIZE_CAP = 500


@dataclass(frozen=True)
class GoursatRecord:
    G: FiniteGroup
    N: int
    A: Subgroup
    B: Subgroup
    d1: int
    d2: int
    phase: tuple[int, ...]  # aligned with A.members

    @property
    def ell(self) -> int:
        return self.d1 // self.d2

    @property
    def order(self) -> int:
        return self.B.order * self.d1

    @property
    def step(self) -> int:
        """``N/d1``: the generator of C1 inside Z/N."""
        return self.N // self.d1

    @cached_property
    def phase_of(self) -> dict[int, int]:
        return dict(zip(self.A.members, self.phase))

    def subgroup(self) -> ProductSubgroup:
        return ProductSubgroup(self)

    def iso(self) -> GroupHom:
        """The isomorphism ``A/B -> Z/ell`` as a homomorphism of finite groups."""
        Ag, emb = self.A.as_group()
        pos = {x: i for i, x in enumerate(emb)}
        Bsub = Ag.subgroup(pos[b] for b in self.B.members)
        Q, proj = quotient(Ag, Bsub)
        images = [0] * Q.order
        for i, x in enumerate(emb):
            images[proj(i)] = self.phase_of[x]
        return GroupHom(Q, cyclic(self.ell, cap=max(self.ell, 1)), tuple(images))

    def describe(self) -> str:
        return (f"A={self.A.describe()} B={self.B.describe()} d1={self.d1} d2={self.d2} "
                f"u={self._generator_phase()}")

    def _generator_phase(self) -> int:
        # phase of the least element of A generating A/B
        for a, ph in zip(self.A.members, self.phase):
            if math.gcd(ph, self.ell) == 1:
                return ph
        return 0


class ProductSubgroup:
    """Membership-oracle view of the subgroup encoded by a Goursat record.

    Elements are pairs ``(g, r)`` with g an index of G and r a residue mod N.
    """

    def __init__(self, record: GoursatRecord):
        self.record = record
        self.G = record.G
        self.N = record.N
        self.order = record.order
        self.identity = (self.G.identity, 0)

    def __repr__(self) -> str:
        return f"ProductSubgroup(order={self.order}, N={self.N}, {self.record.describe()})"

    def __contains__(self, x: tuple[int, int]) -> bool:
        g, r = x
        rec = self.record
        ph = rec.phase_of.get(g)
        if ph is None:
            return False
        r %= self.N
        if r % rec.step:
            return False
        return (r // rec.step - ph) % rec.ell == 0

    def in_gamma(self, g: int, n: int) -> bool:
        """Membership in the preimage of H in ``G x Z``."""
        return (g, n % self.N) in self

    def elements(self) -> list[tuple[int, int]]:
        rec = self.record
        return [(a, t * rec.step) for a, ph in zip(rec.A.members, rec.phase)
                for t in range(ph, rec.d1, rec.ell)]

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        return (self.G.table[x[0]][y[0]], (x[1] + y[1]) % self.N)

    def element_order(self, x: tuple[int, int]) -> int:
        g, r = x
        return _arith.lcm(self.G.element_order(g), self.N // math.gcd(r, self.N))

    def materialize(self, cap: int = MATERIALIZE_CAP) -> FiniteGroup:
        if self.order > cap:
            raise CapExceeded(f"product subgroup of order {self.order} exceeds cap {cap}")
        G, N = self.G, self.N
        labels = sorted(self.elements())
        index = {x: i for i, x in enumerate(labels)}
        table = [[index[self.mul(x, y)] for y in labels] for x in labels]
        return FiniteGroup(labels, table, f"H<={G.label}xZ/{N}",
                           fmt=lambda x: f"({G.format(x[0])}, {x[1]})")


def _cyclic_phase(G: FiniteGroup, A: Subgroup, B: Subgroup) -> list[int] | None:
    """``phase: A -> Z/ell`` with kernel B for the least coset generator, or
    ``None`` if B is not normal in A or A/B is not cyclic."""
    Bs = B.set
    if any(G.conj(a, b) not in Bs for a in A.generators for b in B.members):
        return None
    ell = A.order // B.order
    for a in A.members:
        x, i = a, 1
        while x not in Bs:
            x = G.table[x][a]
            i += 1
        if i != ell:
            continue
        phase = {}
        x = G.identity
        for k in range(ell):
            for b in B.members:
                phase[G.table[x][b]] = k
            x = G.table[x][a]
        return [phase[y] for y in A.members]
    return None


def goursat_enumerate(G: FiniteGroup, N: int) -> list[GoursatRecord]:
    """One record for every subgroup of ``G x Z/N``."""
    if N < 1:
        raise ValueError("N must be positive")
    subs = all_subgroups(G)
    divs = _arith.divisors(N)
    out = []
    for A in subs:
        for B in subs:
            if A.order % B.order or N % (A.order // B.order) or not B <= A:
                continue
            ell = A.order // B.order
            base = _cyclic_phase(G, A, B)
            if base is None:
                continue
            for d1 in divs:
                if d1 % ell:
                    continue
                for u in _arith.units(ell):
                    out.append(GoursatRecord(G, N, A, B, d1, d1 // ell,
                                             tuple(u * b % ell for b in base)))
    return out


@dataclass(frozen=True)
class ProjectData:
    G_prime: Subgroup
    G_doubleprime: Subgroup
    N_prime: int
    N_doubleprime: int
    ell: int


def project_data(rec: GoursatRecord) -> ProjectData:
    """Images of H in both factors and its intersections with them.

    ``G''`` is read off the membership oracle as ``{g : (g, 0) in H}`` and
    ``N''`` as the number of ``r`` with ``(e, r) in H``.
    """
    H = rec.subgroup()
    G = rec.G
    gpp = Subgroup(G, tuple(g for g in range(G.order) if (g, 0) in H))
    npp = sum(1 for r in range(rec.N) if (G.identity, r) in H)
    gp = Subgroup(G, tuple(sorted({g for g, _ in H.elements()})))
    np_ = len({r for _, r in H.elements()})
    return ProjectData(gp, gpp, np_, npp, np_ // npp)


def is_p_hyperelementary_product(H: ProductSubgroup | GoursatRecord, p: int,
                                 materialize: bool = False,
                                 cap: int = MATERIALIZE_CAP) -> bool:
    """Apply the hyperelementary detector to a subgroup of ``G x Z/N``.

    By default the detector runs on the membership view directly; with
    ``materialize`` the subgroup is first tabulated (only up to ``cap``).
    """
    if isinstance(H, GoursatRecord):
        H = H.subgroup()
    if materialize:
        return is_p_hyperelementary(H.materialize(cap), p)
    return is_p_hyperelementary(H, p)
