"""Light-leaves path combinatorics on tile partitions.

A path walks through tile partitions along a fixed reduced word, one step per
letter.  At a letter whose tile is addable to the current shape the step is
either AddUp (add the tile, degree 0) or AddDown (stay, degree +1); at a
removable letter it is RemUp (stay, degree -1) or RemDown (remove, degree 0).
A letter that is neither addable nor removable kills the branch.  The degree
table comes from the gradings of the local generators the steps index: braid
0, spot +1, fork -1, and cap = spot after fork = 0.

``path_poly(lam, mu)`` is the degree generating function of all paths along
the canonical word of mu that end at lam; these are the graded decomposition
numbers computed in :mod:`hermitian_kl.decomposition`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dynkin import HermitianPair, bond
from .laurent import ONE, ZERO, LaurentPoly
from .tiles import BruhatPoset, Tile, TilePartition, enumerate_partitions

ADD_UP, ADD_DOWN, REM_UP, REM_DOWN = "A+", "A-", "R+", "R-"

STEP_DEGREE = {ADD_UP: 0, ADD_DOWN: 1, REM_UP: -1, REM_DOWN: 0}


@dataclass(frozen=True)
class PathStep:
    kind: str
    tile: Tile

    @property
    def degree(self) -> int:
        return STEP_DEGREE[self.kind]


@dataclass(frozen=True)
class Path:
    word: tuple[int, ...]
    steps: tuple[PathStep, ...]
    shape: TilePartition
    degree: int

    def to_json(self) -> dict:
        return {
            "word": list(self.word),
            "steps": [{"kind": s.kind, "r": s.tile[0], "c": s.tile[1]} for s in self.steps],
            "degree": self.degree,
        }


def canonical_tableau(partition: TilePartition) -> list[Tile]:
    """The linear extension sorting tiles by (r+c, r); prefixes are ideals."""
    return list(partition.key())


def tableau_word(partition: TilePartition, tableau=None) -> list[int]:
    tableau = canonical_tableau(partition) if tableau is None else tableau
    return [partition.region.colour[t] for t in tableau]


def linear_extensions(partition: TilePartition):
    """All linear extensions of the partition's tiles (small shapes only)."""

    def rec(placed: frozenset, acc: list[Tile]):
        if len(acc) == len(partition.tiles):
            yield list(acc)
            return
        for t in sorted(partition.tiles - placed):
            if all(s in placed for s in partition.region.supports[t]):
                acc.append(t)
                yield from rec(placed | {t}, acc)
                acc.pop()

    yield from rec(frozenset(), [])


def enumerate_paths(lam: TilePartition, mu: TilePartition, word=None) -> list[Path]:
    """All light-leaves paths along mu's canonical word that end at shape lam.

    Depth first, taking AddUp before AddDown and RemUp before RemDown, so the
    output order is stable.
    """
    region = lam.region
    assert region.pair == mu.region.pair
    letters = tableau_word(mu) if word is None else list(word)
    out: list[Path] = []

    def walk(i: int, shape: TilePartition, steps: list[PathStep], degree: int):
        if i == len(letters):
            if shape.tiles == lam.tiles:
                out.append(Path(tuple(letters), tuple(steps), shape, degree))
            return
        col = letters[i]
        add = shape.addable()
        if col in add:
            tile = add[col]
            steps.append(PathStep(ADD_UP, tile))
            walk(i + 1, shape.add(tile), steps, degree)
            steps.pop()
            steps.append(PathStep(ADD_DOWN, tile))
            walk(i + 1, shape, steps, degree + 1)
            steps.pop()
            return
        rem = shape.removable()
        if col in rem:
            tile = rem[col]
            steps.append(PathStep(REM_UP, tile))
            walk(i + 1, shape, steps, degree - 1)
            steps.pop()
            steps.append(PathStep(REM_DOWN, tile))
            walk(i + 1, shape.remove(tile), steps, degree)
            steps.pop()

    walk(0, region.empty_partition(), [], 0)
    return out


def _word_transition(poset: BruhatPoset, state: dict[int, LaurentPoly], col: int) -> dict[int, LaurentPoly]:
    new: dict[int, LaurentPoly] = {}

    def acc(i: int, poly: LaurentPoly):
        if poly:
            new[i] = new.get(i, ZERO) + poly

    for i, poly in state.items():
        tr = poset.trans[i].get(col)
        if tr is None:
            continue
        kind, j = tr
        if kind == "A":
            acc(j, poly)               # AddUp
            acc(i, poly.shift(1))      # AddDown
        else:
            acc(i, poly.shift(-1))     # RemUp
            acc(j, poly)               # RemDown
    return new


def path_poly_vector(pair: HermitianPair, word) -> dict[int, LaurentPoly]:
    """Degree generating functions of all endpoints at once, by DP over the word."""
    poset = enumerate_partitions(pair)
    state = {0: ONE}
    for col in word:
        state = _word_transition(poset, state, col)
    return state


def path_poly(lam: TilePartition, mu: TilePartition, word=None) -> LaurentPoly:
    """Sum of q^degree over all paths along mu's word ending at lam."""
    pair = lam.region.pair
    poset = enumerate_partitions(pair)
    letters = tableau_word(mu) if word is None else list(word)
    vec = path_poly_vector(pair, letters)
    return vec.get(poset.id_of(lam), ZERO)


# ---------------------------------------------------------------------------
# commutation classes


def _heap(word: list[int], pair: HermitianPair) -> list[set[int]]:
    """Strict order relation of the heap of a word: below[j] = {i : i < j}."""
    n = len(word)
    below: list[set[int]] = [set() for _ in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            if i in below[j]:
                continue
            if word[i] == word[j] or bond(pair, word[i], word[j]) >= 3:
                below[j].add(i)
                below[j] |= below[i]
    return below


def commutation_class_check(partition: TilePartition) -> bool:
    """Whether all reduced words of the element are linked by commutation moves.

    Equivalent to full commutativity: the commutation graph on reduced words
    is connected iff no reduced word admits a braid move (braid moves change
    the heap, commutation moves preserve it, and by the exchange-graph
    connectivity the two move types together always suffice).  A braid move
    is available somewhere iff the heap of any one reduced word contains a
    convex chain of length m(s, t) with colours alternating s, t, s, ...,
    which is what is tested here.
    """
    pair = partition.region.pair
    word = tableau_word(partition)
    n = len(word)
    below = _heap(word, pair)

    def interval(i: int, j: int) -> list[int]:
        return [k for k in range(n) if i in below[k] and k in below[j]]

    for i in range(n):
        for j in range(n):
            if i not in below[j]:
                continue
            s, t = word[i], word[j]
            if s == t:
                m = None
            else:
                m = bond(pair, s, t)
                if m < 3:
                    continue
            inner = interval(i, j)
            if m is None:
                continue
            if len(inner) != m - 2:
                continue
            chain = [i] + sorted(inner, key=lambda k: (len(below[k]), k)) + [j]
            ok_chain = all(chain[a] in below[chain[a + 1]] for a in range(len(chain) - 1))
            expected = [s if a % 2 == 0 else t for a in range(m)]
            if ok_chain and [word[k] for k in chain] == expected:
                return False
    return True


def reduced_words(partition: TilePartition, limit: int | None = None) -> list[tuple[int, ...]]:
    """All reduced words of the element, generated through the tile lattice."""
    out: list[tuple[int, ...]] = []

    def rec(shape: TilePartition, suffix: list[int]):
        if limit is not None and len(out) > limit:
            return
        if not shape.tiles:
            out.append(tuple(reversed(suffix)))
            return
        for col, tile in sorted(shape.removable().items()):
            suffix.append(col)
            rec(shape.remove(tile), suffix)
            suffix.pop()

    rec(partition, [])
    return out


def commutation_graph_connected(partition: TilePartition, limit: int = 20000) -> bool:
    """Brute-force check: BFS on reduced words with single commutation swaps."""
    pair = partition.region.pair
    words = reduced_words(partition, limit=limit)
    if len(words) > limit:
        raise ValueError("too many reduced words for the brute-force check")
    words_set = set(words)
    if not words:
        return True
    start = words[0]
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for w in frontier:
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if a != b and bond(pair, a, b) == 2:
                    swapped = w[:i] + (b, a) + w[i + 2:]
                    assert swapped in words_set
                    if swapped not in seen:
                        seen.add(swapped)
                        new.append(swapped)
        frontier = new
    return len(seen) == len(words)


@lru_cache(maxsize=None)
def cell_dimension_counts(pair: HermitianPair) -> list[list[int]]:
    """counts[mu][lam] = number of paths along mu's word ending at lam."""
    poset = enumerate_partitions(pair)
    out = []
    for mu in poset.partitions:
        vec = path_poly_vector(pair, tableau_word(mu))
        row = [0] * poset.size
        for i, poly in vec.items():
            row[i] = sum(abs(c) for c in poly.coeffs.values())
        out.append(row)
    return out
