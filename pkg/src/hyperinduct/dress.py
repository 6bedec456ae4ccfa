"""p-local induction certificates from p-hyperelementary subgroups.

A certificate is a family of coefficients ``a_H`` (H running over classes of
p-hyperelementary subgroups, each ``a_H`` a rational with denominator prime
to p) such that the virtual permutation set ``sum a_H [G/H]`` has the same
marks as the one-point set ``[G/G]`` on every cyclic subgroup.  Marks on
cyclic subgroups determine a permutation representation rationally, so this
is the rationalized form of writing 1 as a p-local combination of inductions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSolution
from .families import hyperelementary_classes, is_p_hyperelementary
from .groups import FiniteGroup, Subgroup, SubgroupClass, subgroup_classes
from .snf import solve_plocal
from . import _arith


def mark(G: FiniteGroup, H: Subgroup, C: Subgroup) -> int:
    """Number of cosets ``gH`` fixed by every element of C."""
    Hs = H.set
    gens = C.generators
    count = sum(1 for g in range(G.order)
                if all(G.conj(G.inverses[g], c) in Hs for c in gens))
    return count // H.order


def cyclic_classes(G: FiniteGroup) -> list[SubgroupClass]:
    return [c for c in subgroup_classes(G) if len(c.representative.generators) <= 1]


@dataclass(frozen=True)
class MarksMatrix:
    rows: tuple[SubgroupClass, ...]
    columns: tuple[SubgroupClass, ...]
    entries: tuple[tuple[int, ...], ...]  # entries[row][column]


def marks_matrix(G: FiniteGroup, p: int) -> MarksMatrix:
    rows = tuple(hyperelementary_classes(G, p))
    cols = tuple(cyclic_classes(G))
    entries = tuple(tuple(mark(G, r.representative, c.representative) for c in cols)
                    for r in rows)
    return MarksMatrix(rows, cols, entries)


@dataclass(frozen=True)
class DressCertificate:
    prime: int
    coefficients: tuple[tuple[SubgroupClass, Fraction], ...]

    def as_dict(self) -> dict:
        return {
            "prime": self.prime,
            "entries": [
                {"subgroup": list(cls.representative.members),
                 "numerator": a.numerator, "denominator": a.denominator}
                for cls, a in self.coefficients
            ],
        }


def _solve(mm: MarksMatrix, active: list[int], p: int) -> list[Fraction] | None:
    # one equation per cyclic column, one unknown per active row
    A = [[mm.entries[i][j] for i in active] for j in range(len(mm.columns))]
    return solve_plocal(A, [1] * len(mm.columns), p)


def dress_certificate(G: FiniteGroup, p: int) -> DressCertificate:
    """Solve ``sum_H a_H marks_C(G/H) = 1`` over Z_(p) for every cyclic C.

    Support is reduced greedily: rows are dropped in order (smallest
    subgroups first) whenever the remaining system stays solvable.
    """
    _arith.require_prime(p)
    mm = marks_matrix(G, p)
    active = list(range(len(mm.rows)))
    if _solve(mm, active, p) is None:
        raise NoSolution(f"{G.label}: no {p}-local induction certificate")
    for i in range(len(mm.rows)):
        trial = [r for r in active if r != i]
        if trial and _solve(mm, trial, p) is not None:
            active = trial
    sol = _solve(mm, active, p)
    coeffs = tuple((mm.rows[i], a) for i, a in zip(active, sol) if a)
    return DressCertificate(p, coeffs)


def verify_certificate(G: FiniteGroup, cert: DressCertificate) -> bool:
    """Exact check of the marks identity on every cyclic subgroup class, that
    denominators are prime to p, and that every subgroup used is
    p-hyperelementary."""
    p = cert.prime
    for cls, a in cert.coefficients:
        H = cls.representative
        if H.parent is not G or not is_p_hyperelementary(H, p):
            return False
        if Fraction(a).denominator % p == 0:
            return False
    for c in cyclic_classes(G):
        total = sum((Fraction(a) * mark(G, cls.representative, c.representative)
                     for cls, a in cert.coefficients), Fraction(0))
        if total != 1:
            return False
    return True
