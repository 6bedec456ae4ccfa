"""Group construction expressions.

Grammar (whitespace is ignored outside cycle bodies)::

    spec   := "cyclic:" INT
            | "sym:" INT
            | "dihedral:" INT                       # order 2*INT
            | "product(" spec "," spec ")"
            | "semidirect(c:" INT ",p:" spec ",action:" action ")"
            | "perm(" INT (";" gen)* ")"
    action := "[" INT ("," INT)* "]" | "inversion"
    gen    := cycle+ | "()"
    cycle  := "(" INT ((" " | ",") INT)* ")"       # points are 1-based

In ``semidirect`` the action lists, for each generator of P in order, the
unit of Z/M it acts by; the product is ``(c, x)(c', x') = (c + a(x) c', x x')``.
``inversion`` maps every generator to -1.
"""

from __future__ import annotations

import math
import re

from .errors import CapExceeded, SpecError
from .groups import DEFAULT_CAP, FiniteGroup, direct_product

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]+|[():;,\[\]])")


def make_group(spec: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from a construction expression (see module docstring)."""
    parser = _Parser(spec, cap)
    G = parser.parse_spec()
    parser.expect_end()
    return G


def _cycle_fmt(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = perm[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a*b)(i) = a(b(i))
    return tuple(a[i] for i in b)


def cyclic(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 1:
        raise SpecError("cyclic order must be positive")
    if n > cap:
        raise CapExceeded(f"cyclic:{n} exceeds cap {cap}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(range(n), table, f"cyclic:{n}", [1] if n > 1 else [])


def symmetric(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 1:
        raise SpecError("sym degree must be positive")
    if math.factorial(n) > cap:
        raise CapExceeded(f"sym:{n} exceeds cap {cap}")
    ident = tuple(range(n))
    gens = []
    if n > 1:
        gens.append((1, 0) + tuple(range(2, n)))
        gens.append(tuple(range(1, n)) + (0,))
    return FiniteGroup.from_generators(gens, _compose, ident, f"sym:{n}", _cycle_fmt, cap)


def dihedral(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Dihedral group of order ``2n``: pairs (rotation, flip)."""
    if n < 1:
        raise SpecError("dihedral parameter must be positive")
    if 2 * n > cap:
        raise CapExceeded(f"dihedral:{n} exceeds cap {cap}")

    def mul(x, y):
        r1, s1 = x
        r2, s2 = y
        return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)

    def fmt(x):
        r, s = x
        return ("r" + (str(r) if r > 1 else "") if r else "") + ("s" if s else "") or "e"

    return FiniteGroup.from_generators([(1 % n, 0), (0, 1)], mul, (0, 0), f"dihedral:{n}", fmt, cap)


def perm_group(degree: int, generators: list[tuple[int, ...]], cap: int = DEFAULT_CAP,
               label: str | None = None) -> FiniteGroup:
    ident = tuple(range(degree))
    if label is None:
        label = "perm(" + ";".join([str(degree)] + [_cycle_fmt(g) for g in generators]) + ")"
    return FiniteGroup.from_generators(generators, _compose, ident, label, _cycle_fmt, cap)


def semidirect(m: int, P: FiniteGroup, action: list[int], cap: int = DEFAULT_CAP,
               label: str | None = None) -> FiniteGroup:
    """``Z/m`` ⋊ P where generator ``P.generators[i]`` acts by ``c -> action[i] * c``."""
    if m < 1:
        raise SpecError("semidirect: c must be positive")
    if len(action) != len(P.generators):
        raise SpecError(f"semidirect: action has {len(action)} entries, "
                        f"P has {len(P.generators)} generators")
    action = [a % m for a in action]
    if any(math.gcd(a, m) != 1 for a in action):
        raise SpecError("semidirect: action entries must be units mod c")
    alpha = action_map(m, P, action)
    if alpha is None:
        raise SpecError("semidirect: action does not define a homomorphism P -> Aut(Z/c)")
    if m * P.order > cap:
        raise CapExceeded(f"semidirect order {m * P.order} exceeds cap {cap}")
    if label is None:
        label = f"semidirect(c:{m},p:{P.label},action:[{','.join(map(str, action))}])"
    labels = [(c, x) for c in range(m) for x in range(P.order)]
    index = {lab: i for i, lab in enumerate(labels)}
    table = [[index[((c1 + alpha[x1] * c2) % m, P.table[x1][x2])] for (c2, x2) in labels]
             for (c1, x1) in labels]
    gens = ([index[(1 % m, P.identity)]] if m > 1 else []) + [index[(0, g)] for g in P.generators]
    return FiniteGroup(labels, table, label, gens,
                       fmt=lambda lab: f"({lab[0]}, {P.format(lab[1])})")


def action_map(m: int, P: FiniteGroup, action: list[int]) -> list[int] | None:
    """Extend generator images to a map ``P -> (Z/m)^x``; ``None`` if that is
    not a homomorphism.

    Walks the Cayley graph from the identity and checks every edge
    ``x -> x g`` satisfies ``a(x g) = a(x) a(g)``, which is equivalent to the
    homomorphism property.
    """
    img: list[int | None] = [None] * P.order
    img[P.identity] = 1 % m
    frontier = [P.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, a in zip(P.generators, action):
                y = P.table[x][g]
                val = (img[x] * a) % m
                if img[y] is None:
                    img[y] = val
                    nxt.append(y)
                elif img[y] != val:
                    return None
        frontier = nxt
    if any(v is None for v in img):
        return None
    # edges out of already-visited nodes were all checked above
    return img  # type: ignore[return-value]


class _Parser:
    def __init__(self, text: str, cap: int):
        self.text = text
        self.cap = cap
        self.pos = 0

    def _peek(self) -> str | None:
        m = _TOKEN.match(self.text, self.pos)
        return m.group(1) if m else None

    def _next(self) -> str:
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            rest = self.text[self.pos:].strip()
            raise SpecError(f"unexpected {'end of input' if not rest else repr(rest[:10])} "
                            f"in {self.text!r}")
        self.pos = m.end()
        return m.group(1)

    def expect(self, tok: str) -> None:
        got = self._next()
        if got != tok:
            raise SpecError(f"expected {tok!r}, got {got!r} in {self.text!r}")

    def expect_end(self) -> None:
        if self.text[self.pos:].strip():
            raise SpecError(f"trailing input {self.text[self.pos:]!r}")

    def integer(self) -> int:
        tok = self._next()
        if not tok.isdigit():
            raise SpecError(f"expected integer, got {tok!r}")
        return int(tok)

    def parse_spec(self) -> FiniteGroup:
        start = self.pos
        word = self._next()
        if word in ("cyclic", "sym", "dihedral"):
            self.expect(":")
            n = self.integer()
            return {"cyclic": cyclic, "sym": symmetric, "dihedral": dihedral}[word](n, self.cap)
        if word == "product":
            self.expect("(")
            a = self.parse_spec()
            self.expect(",")
            b = self.parse_spec()
            self.expect(")")
            return direct_product(a, b, self.cap)
        if word == "semidirect":
            self.expect("(")
            self.expect("c")
            self.expect(":")
            m = self.integer()
            self.expect(",")
            self.expect("p")
            self.expect(":")
            P = self.parse_spec()
            self.expect(",")
            self.expect("action")
            self.expect(":")
            if self._peek() == "inversion":
                self._next()
                action = [-1] * len(P.generators)
            else:
                self.expect("[")
                action = [self._signed()]
                while self._peek() == ",":
                    self._next()
                    action.append(self._signed())
                self.expect("]")
            self.expect(")")
            label = re.sub(r"\s+", "", self.text[start:self.pos])
            return semidirect(m, P, action, self.cap, label)
        if word == "perm":
            self.expect("(")
            degree = self.integer()
            if degree < 1:
                raise SpecError("perm degree must be positive")
            gens = []
            while self._peek() == ";":
                self._next()
                gens.append(self._generator(degree))
            self.expect(")")
            label = re.sub(r"\s+", " ", self.text[start:self.pos]).strip()
            return perm_group(degree, gens, self.cap, label)
        raise SpecError(f"unknown construction {word!r} in {self.text!r}")

    def _signed(self) -> int:
        # allow "-1" for convenience
        m = re.compile(r"\s*(-?\d+)").match(self.text, self.pos)
        if not m:
            raise SpecError(f"expected integer in action list of {self.text!r}")
        self.pos = m.end()
        return int(m.group(1))

    def _generator(self, degree: int) -> tuple[int, ...]:
        perm = list(range(degree))
        cycles = []
        while self._peek() == "(":
            self._next()
            cyc = []
            while self._peek() not in (")", None):
                tok = self._next()
                if tok == ",":
                    continue
                if not tok.isdigit():
                    raise SpecError(f"bad cycle entry {tok!r}")
                cyc.append(int(tok) - 1)
            self.expect(")")
            cycles.append(cyc)
        if not cycles:
            raise SpecError("perm generator must contain at least one cycle")
        for cyc in reversed(cycles):
            # cycles compose right-to-left, matching permutation composition
            if len(set(cyc)) != len(cyc) or any(not 0 <= c < degree for c in cyc):
                raise SpecError(f"invalid cycle {[c + 1 for c in cyc]} for degree {degree}")
            step = list(range(degree))
            for i, c in enumerate(cyc):
                step[c] = cyc[(i + 1) % len(cyc)]
            perm = [step[perm[i]] for i in range(degree)]
        return tuple(perm)
