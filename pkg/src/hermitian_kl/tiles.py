"""Admissible tile regions and tile partitions.

A tile is a lattice point [r, c] drawn Russian style (rows point northwest,
columns northeast).  Each family of pairs has a finite admissible region of
coloured tiles; the order ideals of its support order are the tile
partitions, which model the minimal coset representatives: the sizes agree
with Coxeter lengths and the ideal count equals |W| / |W_P|.

Region shapes:

    AxA(n, k)  (n-k+1) x k rectangle, colour(r, c) = k + r - c
    CA(n)      staircase 1 <= c <= r <= n, colour r - c + 1,
               diagonal tiles signed + for odd r, - for even r
    DA(n)      staircase 1 <= c <= r <= n-1, diagonal colours alternate 0/1
               starting with 0 at [1,1], otherwise colour r - c + 1
    BB(n)      chain of 2n-1 tiles: [1,1..n-1] (colours n..2, signed +),
               the corner [1,n] (colour 1), then [2..n, n] (colours 2..n,
               signed -)
    DD(n)      double-tailed diamond of 2n-2 tiles: [1,1..n-2] (colours
               n-1..2), the antichain {[1,n-1] (colour 0), [2,n-2] (colour
               1)}, then [2..n-1, n-1] (colours 2..n-1)
    E6D5/E7E6  fixed 16- and 27-tile regions (tables below)

The prose set definitions one sometimes sees for the (D, A) and (D, D)
regions over-count: their ideal counts exceed |W| / |W_P|.  The shapes above
are the ones validated by the reflection-representation oracle (every linear
extension of every ideal is a reduced word for a minimal coset
representative, and the ideal counts match the group-order indices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .dynkin import HermitianPair, nonparabolic_node, quotient_size

Tile = tuple[int, int]

# parity values: +1, -1, or 0 (unsigned)
PLUS, MINUS, NONE = 1, -1, 0

_E6D5_TABLE = {
    (1, 1): 1, (1, 2): 2, (1, 3): 3, (1, 4): 4, (1, 5): 5,
    (2, 3): 6, (2, 4): 3, (2, 5): 4,
    (3, 4): 2, (3, 5): 3, (3, 6): 6,
    (4, 4): 1, (4, 5): 2, (4, 6): 3, (4, 7): 4, (4, 8): 5,
}

_E7E6_TABLE = {
    (1, 1): 1, (1, 2): 2, (1, 3): 3, (1, 4): 4, (1, 5): 5, (1, 6): 6,
    (2, 4): 7, (2, 5): 4, (2, 6): 5,
    (3, 5): 3, (3, 6): 4, (3, 7): 7,
    (4, 5): 2, (4, 6): 3, (4, 7): 4, (4, 8): 5, (4, 9): 6,
    (5, 5): 1, (5, 6): 2, (5, 7): 3, (5, 8): 4, (5, 9): 5,
    (6, 8): 7, (6, 9): 4,
    (7, 9): 3,
    (8, 9): 2,
    (9, 9): 1,
}


def _colour_parity_table(pair: HermitianPair) -> dict[Tile, tuple[int, int]]:
    f, n, k = pair.family, pair.n, pair.k
    table: dict[Tile, tuple[int, int]] = {}
    if f == "AxA":
        for r in range(1, n - k + 2):
            for c in range(1, k + 1):
                table[(r, c)] = (k + r - c, NONE)
    elif f == "CA":
        for r in range(1, n + 1):
            for c in range(1, r + 1):
                if r == c:
                    table[(r, c)] = (1, PLUS if r % 2 == 1 else MINUS)
                else:
                    table[(r, c)] = (r - c + 1, NONE)
    elif f == "DA":
        for r in range(1, n):
            for c in range(1, r + 1):
                if r == c:
                    table[(r, c)] = (0 if r % 2 == 1 else 1, NONE)
                else:
                    table[(r, c)] = (r - c + 1, NONE)
    elif f == "BB":
        for c in range(1, n):
            table[(1, c)] = (n + 1 - c, PLUS)
        table[(1, n)] = (1, NONE)
        for r in range(2, n + 1):
            table[(r, n)] = (r, MINUS)
    elif f == "DD":
        for c in range(1, n - 1):
            table[(1, c)] = (n - c, NONE)
        table[(1, n - 1)] = (0, NONE)
        table[(2, n - 2)] = (1, NONE)
        for r in range(2, n):
            table[(r, n - 1)] = (r, NONE)
    elif f == "E6D5":
        table = {t: (col, NONE) for t, col in _E6D5_TABLE.items()}
    else:
        table = {t: (col, NONE) for t, col in _E7E6_TABLE.items()}
    return table


def _expected_tile_count(pair: HermitianPair) -> int:
    f, n, k = pair.family, pair.n, pair.k
    if f == "AxA":
        return k * (n - k + 1)
    if f == "CA":
        return n * (n + 1) // 2
    if f == "DA":
        return n * (n - 1) // 2
    if f == "BB":
        return 2 * n - 1
    if f == "DD":
        return 2 * n - 2
    return 16 if f == "E6D5" else 27


class Region:
    """The admissible coloured region of a pair, with its support relation."""

    def __init__(self, pair: HermitianPair):
        self.pair = pair
        table = _colour_parity_table(pair)
        self.tiles = frozenset(table)
        self.colour = {t: cp[0] for t, cp in table.items()}
        self.parity = {t: cp[1] for t, cp in table.items()}
        self.supports = {
            (r, c): tuple(s for s in ((r - 1, c), (r, c - 1)) if s in self.tiles)
            for (r, c) in self.tiles
        }
        assert len(self.tiles) == _expected_tile_count(pair)
        # deterministic tile order, shared by all serializations
        self.sorted_tiles = sorted(self.tiles, key=lambda t: (t[0] + t[1], t[0]))
        self.tile_index = {t: i for i, t in enumerate(self.sorted_tiles)}

    def __contains__(self, tile: Tile) -> bool:
        return tile in self.tiles

    def colour_of(self, tile: Tile) -> tuple[int, int]:
        if tile not in self.tiles:
            raise ValueError(f"{tile} is not an admissible tile of {self.pair}")
        return self.colour[tile], self.parity[tile]

    def empty_partition(self) -> "TilePartition":
        return TilePartition(self, frozenset())

    def full_partition(self) -> "TilePartition":
        return TilePartition(self, self.tiles)

    def partition(self, tiles) -> "TilePartition":
        """Build a partition after checking every tile is fully supported."""
        tiles = frozenset(tiles)
        for t in tiles:
            if t not in self.tiles:
                raise ValueError(f"{t} is not an admissible tile of {self.pair}")
            if any(s not in tiles for s in self.supports[t]):
                raise ValueError(f"tile {t} is not supported in {sorted(tiles)}")
        return TilePartition(self, tiles)

    def is_ideal(self, tiles: frozenset) -> bool:
        return all(t in self.tiles and all(s in tiles for s in self.supports[t]) for t in tiles)

    def to_json(self) -> dict:
        parity_str = {PLUS: "+", MINUS: "-", NONE: None}
        return {
            "pair": self.pair.spec(),
            "tiles": [
                {"r": r, "c": c, "colour": self.colour[(r, c)], "parity": parity_str[self.parity[(r, c)]]}
                for (r, c) in self.sorted_tiles
            ],
        }


@lru_cache(maxsize=None)
def admissible_region(pair: HermitianPair) -> Region:
    return Region(pair)


def colour_of(pair: HermitianPair, tile: Tile) -> tuple[int, int]:
    """(colour, parity) of an admissible tile; parity is +1, -1 or 0."""
    return admissible_region(pair).colour_of(tile)


@dataclass(frozen=True)
class TilePartition:
    region: Region = field(compare=False)
    tiles: frozenset = field(compare=True)

    @property
    def pair(self) -> HermitianPair:
        return self.region.pair

    def __len__(self) -> int:
        return len(self.tiles)

    def __le__(self, other: "TilePartition") -> bool:
        return self.tiles <= other.tiles

    def __lt__(self, other: "TilePartition") -> bool:
        return self.tiles < other.tiles

    def __hash__(self):
        return hash((self.region.pair, self.tiles))

    def key(self) -> tuple:
        """Canonical encoding: tiles sorted by (r+c, r)."""
        return tuple(sorted(self.tiles, key=lambda t: (t[0] + t[1], t[0])))

    def __repr__(self):
        return f"TilePartition({self.pair}, {list(self.key())})"

    def addable(self) -> dict[int, Tile]:
        """colour -> the unique addable tile of that colour."""
        out: dict[int, Tile] = {}
        for t in self.region.tiles:
            if t in self.tiles:
                continue
            if all(s in self.tiles for s in self.region.supports[t]):
                col = self.region.colour[t]
                assert col not in out, f"two addable {col}-tiles in {self}"
                out[col] = t
        return out

    def removable(self) -> dict[int, Tile]:
        """colour -> the unique removable tile of that colour."""
        blocked = set()
        for t in self.tiles:
            blocked.update(self.region.supports[t])
        out: dict[int, Tile] = {}
        for t in self.tiles:
            if t not in blocked:
                col = self.region.colour[t]
                assert col not in out, f"two removable {col}-tiles in {self}"
                out[col] = t
        return out

    def add(self, tile: Tile) -> "TilePartition":
        return TilePartition(self.region, self.tiles | {tile})

    def remove(self, tile: Tile) -> "TilePartition":
        return TilePartition(self.region, self.tiles - {tile})

    def row_profile(self) -> tuple[int, ...]:
        """Number of tiles in each row, up to the last non-empty row."""
        if not self.tiles:
            return ()
        rmax = max(r for r, _ in self.tiles)
        return tuple(sum(1 for (r, c) in self.tiles if r == i) for i in range(1, rmax + 1))


def addable(partition: TilePartition) -> dict[int, Tile]:
    return partition.addable()


def removable(partition: TilePartition) -> dict[int, Tile]:
    return partition.removable()


def partition_from_row_profile(pair: HermitianPair, profile) -> TilePartition:
    """Inverse of ``row_profile``: row i holds its first profile[i-1] tiles.

    Rows are filled in the region's column order, so entry i is the number of
    tiles in row i read from the figure captions' tuple notation.
    """
    region = admissible_region(pair)
    tiles = set()
    for i, count in enumerate(profile, start=1):
        cols = sorted(c for (r, c) in region.tiles if r == i)
        if count > len(cols):
            raise ValueError(f"row {i} has only {len(cols)} admissible tiles, wanted {count}")
        tiles.update((i, c) for c in cols[:count])
    return region.partition(tiles)


def lambda_rect(pair: HermitianPair, tile: Tile) -> TilePartition:
    """The ideal of all admissible tiles weakly southwest of the given tile."""
    region = admissible_region(pair)
    if tile not in region.tiles:
        raise ValueError(f"{tile} is not an admissible tile of {pair}")
    r0, c0 = tile
    return region.partition({(r, c) for (r, c) in region.tiles if r <= r0 and c <= c0})


class BruhatPoset:
    """All tile partitions of a pair with cover relations and fast order tests.

    Partitions are indexed 0..N-1 in the canonical order (by size, then by
    canonical tile encoding); index 0 is the empty partition and index N-1
    the full region.
    """

    def __init__(self, pair: HermitianPair):
        self.pair = pair
        self.region = admissible_region(pair)
        parts = self._enumerate()
        parts.sort(key=lambda p: (len(p), p.key()))
        self.partitions = parts
        self.index = {p.tiles: i for i, p in enumerate(parts)}
        self.size = len(parts)
        self.add_maps = [p.addable() for p in parts]
        self.rem_maps = [p.removable() for p in parts]
        # per-index transition table: colour -> ("A"|"R", other index)
        self.trans: list[dict[int, tuple[str, int]]] = []
        for i, p in enumerate(parts):
            tr: dict[int, tuple[str, int]] = {}
            for col, t in self.add_maps[i].items():
                tr[col] = ("A", self.index[p.tiles | {t}])
            for col, t in self.rem_maps[i].items():
                tr[col] = ("R", self.index[p.tiles - {t}])
            self.trans.append(tr)
        # covers (i -> j, colour) with |j| = |i| + 1
        self.covers: list[list[tuple[int, int]]] = [
            sorted((j, col) for col, (kind, j) in self.trans[i].items() if kind == "A")
            for i in range(self.size)
        ]
        # downward closure bitsets for order queries
        down = [0] * self.size
        for j in range(self.size):
            mask = 1 << j
            for i in range(j):
                if parts[i].tiles <= parts[j].tiles:
                    mask |= 1 << i
            down[j] = mask
        self.down = down

    def _enumerate(self) -> list[TilePartition]:
        seen = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            new = []
            for tiles in frontier:
                part = TilePartition(self.region, tiles)
                for t in part.addable().values():
                    bigger = tiles | {t}
                    if bigger not in seen:
                        seen.add(bigger)
                        new.append(bigger)
            frontier = new
        return [TilePartition(self.region, tiles) for tiles in seen]

    def id_of(self, partition: TilePartition) -> int:
        return self.index[partition.tiles]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] & (1 << i))

    def canonical_word(self, i: int) -> list[int]:
        return [self.region.colour[t] for t in self.partitions[i].key()]

    def to_json(self) -> dict:
        out = self.region.to_json()
        out["ideals"] = [
            [self.region.tile_index[t] for t in p.key()] for p in self.partitions
        ]
        return out

    def to_dot(self) -> str:
        lines = ["digraph bruhat {", "  rankdir=BT;"]
        for i, p in enumerate(self.partitions):
            lines.append(f'  n{i} [label="{i}"];')
        for i in range(self.size):
            for j, col in self.covers[i]:
                lines.append(f'  n{i} -> n{j} [label="{col}"];')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def enumerate_partitions(pair: HermitianPair) -> BruhatPoset:
    poset = BruhatPoset(pair)
    assert poset.size == quotient_size(pair), (
        f"{pair}: {poset.size} ideals vs group index {quotient_size(pair)}"
    )
    assert nonparabolic_node(pair) == poset.region.colour[min(
        poset.region.tiles, key=lambda t: t[0] + t[1]
    )]
    return poset
