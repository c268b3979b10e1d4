"""Dynkin data and an exact reflection representation for Hermitian symmetric pairs.

The seven supported families of pairs (Weyl group, maximal parabolic) are

    AxA(n, k) = (A_n, A_{k-1} x A_{n-k})     1 <= k <= n
    CA(n)     = (C_n, A_{n-1})               n >= 2
    BB(n)     = (B_n, B_{n-1})               n >= 2
    DA(n)     = (D_n, A_{n-1})               n >= 2
    DD(n)     = (D_n, D_{n-1})               n >= 3
    E6D5      = (E_6, D_5)
    E7E6      = (E_7, E_6)

Node numbering: type A and B/C use 1..n (the double bond of B/C sits between
nodes 1 and 2); type D uses 0..n-1 with the two fork nodes labelled 0 and 1,
both attached to node 2; E_6 is the chain 1-2-3-4-5 with node 6 attached to
node 3; E_7 is the chain 1-2-3-4-5-6 with node 7 attached to node 4.

Lengths, descents and coset minimality are computed in the integral reflection
representation (simple-root basis, exact integer arithmetic), which is kept
deliberately independent of the tiling model so it can serve as an oracle
for it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

FAMILIES = ("AxA", "CA", "BB", "DA", "DD", "E6D5", "E7E6")

SIMPLY_LACED = {"AxA", "DA", "DD", "E6D5", "E7E6"}

_SPEC_RE = {
    "AxA": re.compile(r"^A:n=(\d+),k=(\d+)$"),
    "CA": re.compile(r"^C:n=(\d+)$"),
    "BB": re.compile(r"^B:n=(\d+)$"),
    "DA": re.compile(r"^D/A:n=(\d+)$"),
    "DD": re.compile(r"^D/D:n=(\d+)$"),
}


class PairSpecError(ValueError):
    """Raised for pair specifications outside the classification."""


@dataclass(frozen=True, order=True)
class HermitianPair:
    family: str
    n: int = 0
    k: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PairSpecError(f"unknown family {self.family!r}")
        if self.family == "AxA":
            if self.n < 1 or not 1 <= self.k <= self.n:
                raise PairSpecError(f"AxA requires n >= 1 and 1 <= k <= n, got n={self.n}, k={self.k}")
        elif self.family in ("CA", "BB", "DA"):
            if self.n < 2:
                raise PairSpecError(f"{self.family} requires n >= 2, got n={self.n}")
        elif self.family == "DD":
            # (D_2, D_1) has no maximal-parabolic quotient of the right shape;
            # the 2n-element quotient only exists from n = 3 on.
            if self.n < 3:
                raise PairSpecError(f"DD requires n >= 3, got n={self.n}")
        else:
            if (self.n, self.k) not in ((0, 0),):
                raise PairSpecError(f"{self.family} takes no rank parameters")

    @property
    def simply_laced(self) -> bool:
        return self.family in SIMPLY_LACED

    def spec(self) -> str:
        if self.family == "AxA":
            return f"A:n={self.n},k={self.k}"
        if self.family == "CA":
            return f"C:n={self.n}"
        if self.family == "BB":
            return f"B:n={self.n}"
        if self.family == "DA":
            return f"D/A:n={self.n}"
        if self.family == "DD":
            return f"D/D:n={self.n}"
        return {"E6D5": "E6/D5", "E7E6": "E7/E6"}[self.family]

    def __str__(self) -> str:
        return self.spec()

    @staticmethod
    def from_spec(text: str) -> "HermitianPair":
        text = text.strip()
        if text == "E6/D5":
            return HermitianPair("E6D5")
        if text == "E7/E6":
            return HermitianPair("E7E6")
        for family, rx in _SPEC_RE.items():
            m = rx.match(text)
            if m:
                if family == "AxA":
                    return HermitianPair(family, int(m.group(1)), int(m.group(2)))
                return HermitianPair(family, int(m.group(1)))
        raise PairSpecError(f"cannot parse pair spec {text!r}")


@dataclass(frozen=True, order=True)
class Node:
    index: int
    parabolic: bool


def nodes(pair: HermitianPair) -> list[Node]:
    """All simple reflections of the pair, the unique non-parabolic one marked."""
    nonpar = nonparabolic_node(pair)
    return [Node(i, i != nonpar) for i in node_indices(pair)]


def node_indices(pair: HermitianPair) -> list[int]:
    f = pair.family
    if f in ("AxA", "CA", "BB"):
        return list(range(1, pair.n + 1))
    if f in ("DA", "DD"):
        return [0] + list(range(1, pair.n))
    if f == "E6D5":
        return list(range(1, 7))
    return list(range(1, 8))


def nonparabolic_node(pair: HermitianPair) -> int:
    f = pair.family
    if f == "AxA":
        return pair.k
    if f == "CA":
        return 1
    if f == "BB":
        return pair.n
    if f == "DA":
        return 0
    if f == "DD":
        return pair.n - 1
    return 1


def _edges(pair: HermitianPair) -> dict[frozenset, int]:
    f, n = pair.family, pair.n
    if f == "AxA":
        return {frozenset((i, i + 1)): 3 for i in range(1, n)}
    if f in ("CA", "BB"):
        e = {frozenset((i, i + 1)): 3 for i in range(2, n)}
        e[frozenset((1, 2))] = 4
        return e
    if f in ("DA", "DD"):
        e = {frozenset((i, i + 1)): 3 for i in range(2, n - 1)}
        if n >= 3:
            e[frozenset((0, 2))] = 3
            e[frozenset((1, 2))] = 3
        return e
    if f == "E6D5":
        e = {frozenset((i, i + 1)): 3 for i in range(1, 5)}
        e[frozenset((3, 6))] = 3
        return e
    e = {frozenset((i, i + 1)): 3 for i in range(1, 6)}
    e[frozenset((4, 7))] = 3
    return e


def bond(pair: HermitianPair, s: int, t: int) -> int:
    """Coxeter bond order m(s, t) in {2, 3, 4}; the same-node query is invalid."""
    if s == t:
        raise ValueError("bond order is only defined for distinct nodes")
    idx = set(node_indices(pair))
    if s not in idx or t not in idx:
        raise ValueError(f"{s}, {t} must both be nodes of {pair}")
    return _edges(pair).get(frozenset((s, t)), 2)


class ReflectionRep:
    """Exact integer reflection representation of the Weyl group of a pair.

    Roots are integer coordinate vectors in the simple-root basis.  For the
    doubly laced families the Cartan pairing on the double bond is the usual
    asymmetric one (-2 / -1); only the Coxeter group structure is used, so
    the B-versus-C orientation of the arrow is immaterial here.
    """

    def __init__(self, pair: HermitianPair):
        self.pair = pair
        self.index_of = {s: i for i, s in enumerate(node_indices(pair))}
        self.labels = node_indices(pair)
        N = len(self.labels)
        A = [[2 * (i == j) for j in range(N)] for i in range(N)]
        for e, m in _edges(pair).items():
            a, b = sorted(e)
            ia, ib = self.index_of[a], self.index_of[b]
            if m == 3:
                A[ia][ib] = A[ib][ia] = -1
            else:
                A[ia][ib], A[ib][ia] = -2, -1
        self.cartan = A
        self.dim = N
        self.simple_roots = [tuple(1 if j == i else 0 for j in range(N)) for i in range(N)]
        self.positive_roots = self._close_positive()

    def _close_positive(self) -> list[tuple[int, ...]]:
        pos = set(self.simple_roots)
        frontier = set(pos)
        while frontier:
            new = set()
            for v in frontier:
                for i in range(self.dim):
                    w = self.reflect(i, v)
                    if all(x >= 0 for x in w) and w not in pos:
                        new.add(w)
            pos |= new
            frontier = new
        return sorted(pos)

    def reflect(self, i: int, v: tuple[int, ...]) -> tuple[int, ...]:
        c = sum(self.cartan[i][j] * v[j] for j in range(self.dim))
        w = list(v)
        w[i] -= c
        return tuple(w)

    def apply_inverse(self, word: list[int], v: tuple[int, ...]) -> tuple[int, ...]:
        # w = s_1 ... s_l acting on the left; w^{-1} v applies letters in order
        for s in word:
            v = self.reflect(self.index_of[s], v)
        return v

    def apply(self, word: list[int], v: tuple[int, ...]) -> tuple[int, ...]:
        for s in reversed(word):
            v = self.reflect(self.index_of[s], v)
        return v

    def length(self, word: list[int]) -> int:
        """Coxeter length of the product, as the number of inversions."""
        count = 0
        for v in self.positive_roots:
            if all(x <= 0 for x in self.apply(word, v)):
                count += 1
        return count

    def action_key(self, word: list[int]) -> tuple:
        """Hashable fingerprint of the group element (images of simple roots)."""
        return tuple(self.apply(word, a) for a in self.simple_roots)


@lru_cache(maxsize=None)
def reflection_rep(pair: HermitianPair) -> ReflectionRep:
    return ReflectionRep(pair)


def word_length(pair: HermitianPair, word) -> tuple[int, bool]:
    """(Coxeter length of the product, whether the word is reduced)."""
    word = list(word)
    rep = reflection_rep(pair)
    for s in word:
        if s not in rep.index_of:
            raise ValueError(f"{s} is not a node of {pair}")
    length = rep.length(word)
    return length, length == len(word)


def is_min_coset_rep(pair: HermitianPair, word) -> bool:
    """True iff the element has no parabolic left descent.  Requires a reduced word."""
    word = list(word)
    rep = reflection_rep(pair)
    if rep.length(word) != len(word):
        raise ValueError("is_min_coset_rep requires a reduced word")
    nonpar = nonparabolic_node(pair)
    for t in node_indices(pair):
        if t == nonpar:
            continue
        image = rep.apply_inverse(word, rep.simple_roots[rep.index_of[t]])
        if all(x <= 0 for x in image):
            return False
    return True


def min_coset_reps_bfs(pair: HermitianPair) -> int:
    """Count minimal coset representatives by BFS over right multiplication.

    Independent of the tiling model; used to cross-check partition counts.
    """
    rep = reflection_rep(pair)
    seen = {rep.action_key([])}
    frontier = [[]]
    total = 1
    while frontier:
        new = []
        for word in frontier:
            for s in node_indices(pair):
                cand = word + [s]
                if rep.length(cand) != len(cand):
                    continue
                if not is_min_coset_rep(pair, cand):
                    continue
                key = rep.action_key(cand)
                if key not in seen:
                    seen.add(key)
                    new.append(cand)
        total += len(new)
        frontier = new
    return total


def weyl_order(pair: HermitianPair) -> int:
    f, n = pair.family, pair.n
    if f == "AxA":
        return math.factorial(n + 1)
    if f in ("CA", "BB"):
        return 2**n * math.factorial(n)
    if f in ("DA", "DD"):
        return 2 ** (n - 1) * math.factorial(n)
    if f == "E6D5":
        return 51840
    return 2903040


def parabolic_order(pair: HermitianPair) -> int:
    f, n, k = pair.family, pair.n, pair.k
    if f == "AxA":
        return math.factorial(k) * math.factorial(n - k + 1)
    if f in ("CA", "DA"):
        return math.factorial(n)
    if f == "BB":
        return 2 ** (n - 1) * math.factorial(n - 1)
    if f == "DD":
        return 2 ** (n - 2) * math.factorial(n - 1)
    if f == "E6D5":
        return 2**4 * math.factorial(5)
    return 51840


def quotient_size(pair: HermitianPair) -> int:
    """|W| / |W_P|, from the exact group orders."""
    order, par = weyl_order(pair), parabolic_order(pair)
    assert order % par == 0
    return order // par
