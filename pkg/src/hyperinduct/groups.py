"""Finite groups as explicit multiplication tables over an indexed element set.

Elements are addressed by integer index ``0 .. order-1``; every group also
keeps the construction labels of its elements (permutation tuples, residues,
pairs) for display.  Subgroups are sorted index tuples.  All objects are
treated as immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .errors import CapExceeded, NotNormal

DEFAULT_CAP = 200


class FiniteGroup:
    """A finite group given by its Cayley table.

    Args:
        labels: element labels, one per index.
        table: ``table[a][b]`` is the index of ``a * b``.
        label: human-readable construction string.
        generators: indices generating the group (used by constructions that
            need a generating set, e.g. semidirect actions).
        fmt: formatter for element labels.
    """

    def __init__(
        self,
        labels: Sequence[Hashable],
        table: Sequence[Sequence[int]],
        label: str,
        generators: Sequence[int] = (),
        fmt: Callable[[Hashable], str] | None = None,
    ):
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        self.label = label
        self.order = len(self.labels)
        self._fmt = fmt or str
        n = self.order
        ident = [a for a in range(n) if all(self.table[a][b] == b for b in range(n))]
        if len(ident) != 1:
            raise ValueError("table has no unique left identity")
        self.identity = ident[0]
        inv = [0] * n
        for a in range(n):
            row = self.table[a]
            for b in range(n):
                if row[b] == self.identity:
                    inv[a] = b
                    break
        self.inverses = tuple(inv)
        self.generators = tuple(generators) if generators else self._greedy_generators()
        self._orders: list[int] | None = None
        self._memo: dict = {}

    @classmethod
    def from_generators(
        cls,
        gens: Iterable[Hashable],
        mul: Callable[[Hashable, Hashable], Hashable],
        identity: Hashable,
        label: str,
        fmt: Callable[[Hashable], str] | None = None,
        cap: int = DEFAULT_CAP,
    ) -> FiniteGroup:
        """Close ``gens`` under ``mul`` and tabulate the result.

        Labels must be mutually comparable; they are sorted so that indices
        are reproducible.
        """
        gens = list(dict.fromkeys(gens))
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > cap:
                            raise CapExceeded(f"{label}: order exceeds cap {cap}")
            frontier = nxt
        labels = sorted(seen)
        index = {x: i for i, x in enumerate(labels)}
        table = [[index[mul(a, b)] for b in labels] for a in labels]
        gen_idx = [index[g] for g in gens if g != identity]
        return cls(labels, table, label, gen_idx, fmt)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    # element-level API shared (duck-typed) with Subgroup and ProductSubgroup
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverses[a], -k
        result, base = self.identity, a
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        if self._orders is None:
            orders = []
            for x in range(self.order):
                k, y = 1, x
                while y != self.identity:
                    y = self.table[y][x]
                    k += 1
                orders.append(k)
            self._orders = orders
        return self._orders[a]

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def format(self, a: int) -> str:
        return self._fmt(self.labels[a])

    def index_of(self, label: Hashable) -> int:
        return self.labels.index(label)

    def is_abelian(self) -> bool:
        return all(self.commute(a, b) for a in self.generators for b in self.generators)

    # subgroups
    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.order)))

    def trivial(self) -> Subgroup:
        return Subgroup(self, (self.identity,))

    def subgroup(self, members: Iterable[int]) -> Subgroup:
        """Wrap an index set, checking that it is a subgroup."""
        s = set(members)
        if self.identity not in s or any(self.table[a][b] not in s for a in s for b in s):
            raise ValueError("index set is not a subgroup")
        return Subgroup(self, tuple(sorted(s)))

    def generate(self, gens: Iterable[int]) -> Subgroup:
        return Subgroup(self, tuple(sorted(closure(self, list(gens)))))

    def check_axioms(self) -> bool:
        """Exhaustive associativity, identity and inverse check."""
        t, n, e = self.table, self.order, self.identity
        for a in range(n):
            if t[a][e] != a or t[e][a] != a:
                return False
            if t[a][self.inverses[a]] != e or t[self.inverses[a]][a] != e:
                return False
            row = t[a]
            for b in range(n):
                ab = row[b]
                if not 0 <= ab < n:
                    return False
                for c in range(n):
                    if t[ab][c] != row[t[b][c]]:
                        return False
        return True

    def relabel(self, perm: Sequence[int]) -> FiniteGroup:
        """Isomorphic copy in which old index ``i`` becomes ``perm[i]``."""
        n = self.order
        inv = [0] * n
        for i, j in enumerate(perm):
            inv[j] = i
        labels = [self.labels[inv[j]] for j in range(n)]
        table = [[perm[self.table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        return FiniteGroup(labels, table, self.label, [perm[g] for g in self.generators], self._fmt)

    def _greedy_generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span = {self.identity}
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = closure(self, gens)
        return tuple(gens)


def closure(G: FiniteGroup, gens: Sequence[int], start: Iterable[int] = ()) -> set[int]:
    """Subgroup generated by ``gens`` (plus ``start``, which must itself be
    generated by elements listed in ``gens``)."""
    members = {G.identity, *start}
    frontier = list(members)
    table = G.table
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for g in gens:
                y = row[g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return members


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of={self.parent.label!r}, gens={self.describe()})"

    @cached_property
    def set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.set

    def __le__(self, other: Subgroup) -> bool:
        return self.set <= other.set

    def elements(self) -> tuple[int, ...]:
        return self.members

    def mul(self, a: int, b: int) -> int:
        return self.parent.table[a][b]

    def element_order(self, a: int) -> int:
        return self.parent.element_order(a)

    @property
    def identity(self) -> int:
        return self.parent.identity

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_abelian(self) -> bool:
        G = self.parent
        gens = self.generators
        return all(G.commute(a, b) for a in gens for b in gens)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating set: scan members in index order, keep any not yet
        spanned."""
        G = self.parent
        gens: list[int] = []
        span = {G.identity}
        for x in self.members:
            if x not in span:
                gens.append(x)
                span = closure(G, gens)
        return tuple(gens)

    def describe(self) -> str:
        if self.is_trivial():
            return "<e>"
        return "<" + ", ".join(self.parent.format(g) for g in self.generators) + ">"

    def conjugate(self, g: int) -> Subgroup:
        G = self.parent
        return Subgroup(G, tuple(sorted(G.conj(g, x) for x in self.members)))

    def as_group(self) -> tuple[FiniteGroup, list[int]]:
        """Standalone copy of the subgroup together with its embedding
        (new index -> parent index)."""
        G = self.parent
        pos = {x: i for i, x in enumerate(self.members)}
        table = [[pos[G.table[a][b]] for b in self.members] for a in self.members]
        labels = [G.labels[x] for x in self.members]
        sub = FiniteGroup(labels, table, f"{self.describe()} in {G.label}",
                          [pos[g] for g in self.generators], G._fmt)
        return sub, list(self.members)


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups; ``representative`` has the
    lexicographically least member tuple in the class."""

    representative: Subgroup
    conjugates: tuple[Subgroup, ...]

    @property
    def size(self) -> int:
        return len(self.conjugates)

    @property
    def order(self) -> int:
        return self.representative.order

    def __contains__(self, H: Subgroup) -> bool:
        return H in self.conjugates


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_homomorphism(self) -> bool:
        S, T, f = self.source, self.target, self.images
        if f[S.identity] != T.identity:
            return False
        return all(f[S.table[a][b]] == T.table[f[a]][f[b]]
                   for a in range(S.order) for b in range(S.order))

    def kernel(self) -> Subgroup:
        e = self.target.identity
        return Subgroup(self.source, tuple(x for x in range(self.source.order) if self.images[x] == e))

    def image(self) -> Subgroup:
        return Subgroup(self.target, tuple(sorted(set(self.images))))

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order


def _cyclic_subgroups(G: FiniteGroup) -> dict[frozenset[int], int]:
    out: dict[frozenset[int], int] = {}
    for x in range(G.order):
        s = frozenset(G.power(x, i) for i in range(G.element_order(x)))
        out.setdefault(s, x)
    return out


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of ``G`` exactly once, sorted by (order, members).

    Starts from the cyclic subgroups and repeatedly joins each newly found
    subgroup with every cyclic subgroup until nothing new appears.
    """
    if "subgroups" in G._memo:
        return G._memo["subgroups"]
    cyclic = _cyclic_subgroups(G)
    found: dict[frozenset[int], tuple[int, ...]] = {s: (g,) for s, g in cyclic.items()}
    layer = list(found)
    while layer:
        nxt = []
        for H in layer:
            gens = found[H]
            for C, c in cyclic.items():
                if C <= H:
                    continue
                K = frozenset(closure(G, gens + (c,), H))
                if K not in found:
                    found[K] = gens + (c,)
                    nxt.append(K)
        layer = nxt
    result = sorted((Subgroup(G, tuple(sorted(s))) for s in found),
                    key=lambda H: (H.order, H.members))
    G._memo["subgroups"] = result
    return result


def subgroup_classes(G: FiniteGroup) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups, sorted by (order, representative)."""
    if "classes" in G._memo:
        return G._memo["classes"]
    subs = sorted(all_subgroups(G), key=lambda H: H.members)
    seen: set[tuple[int, ...]] = set()
    classes = []
    for H in subs:
        if H.members in seen:
            continue
        conj = {}
        for g in range(G.order):
            K = H.conjugate(g)
            conj[K.members] = K
        seen.update(conj)
        classes.append(SubgroupClass(H, tuple(conj[k] for k in sorted(conj))))
    classes.sort(key=lambda c: (c.order, c.representative.members))
    G._memo["classes"] = classes
    return classes


def class_of(H: Subgroup) -> SubgroupClass:
    for cls in subgroup_classes(H.parent):
        if H in cls:
            return cls
    raise ValueError("not a subgroup of its parent")  # pragma: no cover


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    return Subgroup(G, tuple(g for g in range(G.order)
                             if all(G.conj(g, x) in S.set for x in S.generators)))


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    return all(G.conj(g, x) in S.set for g in G.generators for x in S.members)


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    """Elements of ``G`` commuting with every element of ``S``."""
    gens = S.generators
    return Subgroup(G, tuple(g for g in range(G.order) if all(G.commute(g, x) for x in gens)))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    t, inv = G.table, G.inverses
    comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in range(G.order) for b in range(G.order)}
    return G.generate(comms)


def abelianization_order(G: FiniteGroup) -> int:
    """``|G / [G, G]|``; a prime q divides it iff G maps onto a cyclic group of order q."""
    return G.order // commutator_subgroup(G).order


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Coset group ``G/N`` and the projection onto it.

    Cosets are labelled by their least element index and ordered by it.
    """
    if not is_normal(G, N):
        raise NotNormal(f"{N.describe()} is not normal in {G.label}")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] < 0:
            idx = len(reps)
            reps.append(g)
            for x in N.members:
                coset_of[G.table[g][x]] = idx
    table = [[coset_of[G.table[a][b]] for b in reps] for a in reps]
    Q = FiniteGroup(reps, table, f"{G.label}/{N.describe()}",
                    sorted({coset_of[g] for g in G.generators} - {coset_of[G.identity]}),
                    fmt=lambda r: f"{G.format(r)}N")
    return Q, GroupHom(G, Q, tuple(coset_of))


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown from the trivial group: while ``P`` is not
    Sylow, some p-element of ``N_G(P)`` lies outside ``P``; adjoin the least one."""
    target = 1
    n = G.order
    while n % p == 0:
        n //= p
        target *= p
    P = G.trivial()
    while P.order < target:
        N = normalizer(G, P)
        x = next(x for x in N.members if x not in P.set
                 and _is_p_power(G.element_order(x), p))
        P = G.generate(P.generators + (x,))
    return P


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def direct_product(A: FiniteGroup, B: FiniteGroup, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if A.order * B.order > cap:
        raise CapExceeded(f"product of orders {A.order}*{B.order} exceeds cap {cap}")
    labels = [(A.labels[a], B.labels[b]) for a in range(A.order) for b in range(B.order)]
    nb = B.order
    table = [[A.table[a1][a2] * nb + B.table[b1][b2]
              for a2 in range(A.order) for b2 in range(nb)]
             for a1 in range(A.order) for b1 in range(nb)]
    gens = [g * nb + B.identity for g in A.generators] + [A.identity * nb + h for h in B.generators]
    return FiniteGroup(labels, table, f"product({A.label},{B.label})", gens,
                       fmt=lambda x: f"({A._fmt(x[0])}, {B._fmt(x[1])})")

