"""
polytopes.py
------------
The incidence world of the 600-cell: skeleton, inscribed 16/8/24-cells, the
5x5 array of 24-cells, Schoute's ten partitions, duad labels, hexagons,
decagons and pentagons, the prime arrays, the labeled 120-cell and the
rectified 600-cell.

Vertices are indices into icosian.generate_vertices(). Antipodal pairs
{v, -v} are indexed 0..59 in key order of their key-maximal member; every
pair-level object (16-cells, 24-cells, hexagons, decagons) stores pair
indices.

Usage:
- Print the main censuses: `python polytopes.py`
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cache, cmp_to_key
from itertools import combinations
from typing import Iterable

import networkx as nx
from sympy.combinatorics import Permutation

from golden import ONE, PHI, PHI_INV, PHI_INV2, ZERO, GoldenInt
from icosian import (
    ONE_I,
    IcosianVec,
    binary_tetrahedral,
    cayley_table,
    element_order,
    find_order5,
    generate_vertices,
    generated_subgroup,
    icosian_mul,
    index_of,
    inverse,
    natural_ip,
    natural_norm,
    power,
    vec,
)

logger = logging.getLogger(__name__)

SYMBOLS = "123456789X"
TWO = GoldenInt(2, 0)
INNER_PRODUCTS = (TWO, -TWO, PHI, -PHI, PHI_INV, -PHI_INV, ONE, -ONE, ZERO)


class EnumerationError(RuntimeError):
    """A structural count came out in a way that would falsify a theorem."""


class Kind(str, Enum):
    EDGE = "edge"
    TRIANGLE = "triangle"
    TETRA = "tetra-cell"
    CELL16 = "cell16"
    CELL8 = "cell8"
    CELL24 = "cell24"
    HEXAGON = "hexagon"
    DECAGON = "decagon"
    PENTAGON = "pentagon"
    PARTITION = "partition"


MEMBER_COUNTS = {
    Kind.EDGE: 2,
    Kind.TRIANGLE: 3,
    Kind.TETRA: 4,
    Kind.CELL16: 4,
    Kind.CELL8: 8,
    Kind.CELL24: 12,
    Kind.HEXAGON: 3,
    Kind.DECAGON: 5,
    Kind.PENTAGON: 5,
    Kind.PARTITION: 5,
}


@dataclass(frozen=True, order=True)
class SubPolytope:
    """A vertex set (edge, triangle, tetra-cell, pentagon), a pair set or a set of 24-cells."""

    kind: Kind
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))
        if len(set(self.members)) != MEMBER_COUNTS[self.kind]:
            raise EnumerationError(f"{self.kind.value} needs {MEMBER_COUNTS[self.kind]} members, got {self.members}")

    def __contains__(self, item):
        return item in self.members

    def to_json(self):
        return {"kind": self.kind.value, "members": list(self.members)}


@dataclass(frozen=True, order=True)
class Duad:
    row: int
    col: int

    def __str__(self):
        return f"({SYMBOLS[self.row]}{SYMBOLS[5 + self.col]})"

    @classmethod
    def parse(cls, text: str) -> Duad:
        text = text.strip("() ")
        return cls(SYMBOLS.index(text[0]), SYMBOLS.index(text[1]) - 5)


@dataclass(frozen=True, order=True)
class VertexLabel:
    """(1 j1)(2 j2)(3 j3)(4 j4)(5 j5) stored as the column tuple (j1..j5) - 6."""

    cols: tuple[int, ...]

    def duads(self) -> tuple[Duad, ...]:
        return tuple(Duad(r, c) for r, c in enumerate(self.cols))

    def is_even(self) -> bool:
        return Permutation(list(self.cols)).is_even

    def shared(self, other: VertexLabel) -> int:
        return sum(1 for a, b in zip(self.cols, other.cols) if a == b)

    def __str__(self):
        return "".join(str(d) for d in self.duads())

    @classmethod
    def parse(cls, text: str) -> VertexLabel:
        duads = sorted(Duad.parse(part) for part in text.replace(")", ") ").split())
        return cls(tuple(d.col for d in duads))


@dataclass(frozen=True)
class Cell120Label:
    home: Duad
    neighbors: frozenset[Duad]

    def permutation(self) -> tuple[int, ...]:
        cols = {d.row: d.col for d in (self.home, *self.neighbors)}
        return tuple(cols[r] for r in range(5))

    def is_odd(self) -> bool:
        return Permutation(list(self.permutation())).is_odd

    def __str__(self):
        return f"{self.home}|" + "".join(str(d) for d in sorted(self.neighbors))

    @classmethod
    def parse(cls, text: str) -> Cell120Label:
        home, rest = text.split("|")
        return cls(Duad.parse(home), frozenset(Duad.parse(p) for p in rest.replace(")", ") ").split()))


def standard_ip(u: IcosianVec, v: IcosianVec) -> GoldenInt:
    """Natural inner product halved (standard scale)."""
    return natural_ip(u, v).halve()


def golden_cmp(x: GoldenInt, y: GoldenInt) -> int:
    return (x - y).sign()


def golden_abs(x: GoldenInt) -> GoldenInt:
    return -x if x.sign() < 0 else x


@cache
def ip_table() -> tuple[tuple[GoldenInt, ...], ...]:
    vertices = generate_vertices()
    return tuple(tuple(standard_ip(u, v) for v in vertices) for u in vertices)


def inner_product_distribution(index: int) -> dict[GoldenInt, int]:
    """Inner products from vertex `index` to every other vertex."""
    row = ip_table()[index]
    return dict(Counter(ip for j, ip in enumerate(row) if j != index))


# Pairs


@dataclass(frozen=True)
class PairData:
    members: tuple[tuple[int, int], ...]
    pair_of: tuple[int, ...]

    def rep(self, p: int) -> int:
        return self.members[p][0]

    def vertices(self, pairs: Iterable[int]) -> frozenset[int]:
        return frozenset(v for p in pairs for v in self.members[p])


@cache
def pairs() -> PairData:
    vertices = generate_vertices()
    members = []
    for i, v in enumerate(vertices):
        j = index_of(-v)
        if i > j:
            members.append((i, j))
    members.sort()
    pair_of = [0] * len(vertices)
    for p, (i, j) in enumerate(members):
        pair_of[i] = pair_of[j] = p
    return PairData(tuple(members), tuple(pair_of))


def pair_ip(p: int, q: int) -> GoldenInt:
    """Inner product of pair representatives, up to sign (returned as |ip|)."""
    data = pairs()
    return golden_abs(ip_table()[data.rep(p)][data.rep(q)])


# Skeleton


@dataclass(frozen=True)
class Skeleton:
    edges: tuple[SubPolytope, ...]
    triangles: tuple[SubPolytope, ...]
    cells: tuple[SubPolytope, ...]

    def counts(self) -> tuple[int, int, int]:
        return len(self.edges), len(self.triangles), len(self.cells)


@cache
def adjacency() -> tuple[frozenset[int], ...]:
    table = ip_table()
    n = len(table)
    return tuple(frozenset(j for j in range(n) if table[i][j] == PHI) for i in range(n))


@cache
def enumerate_skeleton() -> Skeleton:
    adj = adjacency()
    n = len(adj)
    edges, triangles, cells = [], [], []
    for i in range(n):
        for j in sorted(x for x in adj[i] if x > i):
            edges.append(SubPolytope(Kind.EDGE, (i, j)))
            common = adj[i] & adj[j]
            for k in sorted(x for x in common if x > j):
                triangles.append(SubPolytope(Kind.TRIANGLE, (i, j, k)))
                for m in sorted(x for x in common & adj[k] if x > k):
                    cells.append(SubPolytope(Kind.TETRA, (i, j, k, m)))
    skeleton = Skeleton(tuple(edges), tuple(triangles), tuple(cells))
    logger.info("skeleton: %d edges, %d triangles, %d tetrahedral cells", *skeleton.counts())
    return skeleton


# Inscribed 16-, 24- and 8-cells


@cache
def orthogonal_pairs() -> tuple[tuple[int, int], ...]:
    n = len(pairs().members)
    return tuple((p, q) for p, q in combinations(range(n), 2) if not pair_ip(p, q))


@cache
def enumerate_16cells() -> tuple[SubPolytope, ...]:
    n = len(pairs().members)
    found: set[SubPolytope] = set()
    for p, q in orthogonal_pairs():
        rest = [r for r in range(n) if r not in (p, q) and not pair_ip(p, r) and not pair_ip(q, r)]
        if len(rest) != 2 or pair_ip(*rest):
            raise EnumerationError(f"orthogonal pair {(p, q)} does not close to a unique 16-cell")
        found.add(SubPolytope(Kind.CELL16, (p, q, *rest)))
    return tuple(sorted(found))


@cache
def enumerate_24cells() -> tuple[SubPolytope, ...]:
    n = len(pairs().members)
    found: set[SubPolytope] = set()
    for cell16 in enumerate_16cells():
        extension = [
            r for r in range(n)
            if r not in cell16 and all(pair_ip(r, t) == ONE for t in cell16.members)
        ]
        if len(extension) != 8:
            raise EnumerationError(f"{cell16} extends by {len(extension)} pairs, expected 8")
        found.add(SubPolytope(Kind.CELL24, cell16.members + tuple(extension)))
    cells = tuple(sorted(found))
    logger.info("%d 16-cells extend to %d 24-cells", len(enumerate_16cells()), len(cells))
    return cells


def sixteen_cells_in(cell24: SubPolytope) -> tuple[SubPolytope, ...]:
    return tuple(c for c in enumerate_16cells() if set(c.members) <= set(cell24.members))


@cache
def enumerate_8cells() -> tuple[SubPolytope, ...]:
    found = []
    for cell24 in enumerate_24cells():
        inner = sixteen_cells_in(cell24)
        if len(inner) != 3:
            raise EnumerationError(f"{cell24} contains {len(inner)} 16-cells")
        for a, b in combinations(inner, 2):
            found.append(SubPolytope(Kind.CELL8, a.members + b.members))
    return tuple(sorted(found))


def cell_index(members: Iterable[int]) -> int:
    """Index of a 24-cell (given by its pair set) in enumerate_24cells()."""
    return _cell_lookup()[frozenset(members)]


@cache
def _cell_lookup() -> dict[frozenset[int], int]:
    return {frozenset(c.members): k for k, c in enumerate(enumerate_24cells())}


# The 5x5 array and Schoute's partitions


@dataclass(frozen=True)
class SchouteArray:
    """Entry (i, j) is the 24-cell g^i 2A4 g^-j, stored as a cell index."""

    g: IcosianVec
    grid: tuple[tuple[int, ...], ...]

    def position(self, cell: int) -> tuple[int, int]:
        for i, row in enumerate(self.grid):
            if cell in row:
                return i, row.index(cell)
        raise EnumerationError(f"24-cell {cell} is not in the array")

    def rows(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.grid)

    def columns(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(col) for col in zip(*self.grid))

    def partitions(self) -> tuple[frozenset[int], ...]:
        """The ten partitions in symbol order 1..5, 6..X."""
        return self.rows() + self.columns()


@cache
def build_array(g: IcosianVec | None = None) -> SchouteArray:
    g = g or find_order5()
    if element_order(g) != 5:
        raise EnumerationError(f"{g} does not have order 5")
    vertices = generate_vertices()
    data = pairs()
    base = [vertices[i] for i in sorted(binary_tetrahedral())]
    grid = []
    for i in range(5):
        left = power(g, i)
        row = []
        for j in range(5):
            right = power(g, -j)
            members = {data.pair_of[index_of(icosian_mul(icosian_mul(left, x), right))] for x in base}
            if len(members) != 12:
                raise EnumerationError(f"entry ({i}, {j}) has {len(members)} pairs")
            row.append(cell_index(members))
        grid.append(tuple(row))
    array = SchouteArray(g, tuple(grid))
    if len({c for row in grid for c in row}) != 25:
        raise EnumerationError("array entries are not 25 distinct 24-cells")
    return array


@cache
def disjointness_graph() -> nx.Graph:
    cells = enumerate_24cells()
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cells)))
    for a, b in combinations(range(len(cells)), 2):
        if not set(cells[a].members) & set(cells[b].members):
            graph.add_edge(a, b)
    return graph


def disjointness_degrees() -> dict[int, int]:
    """Census of degrees in the 24-cell disjointness graph."""
    return dict(Counter(d for _, d in disjointness_graph().degree()))


def disjoint_iff_row_or_column() -> bool:
    """Two 24-cells are disjoint exactly when they share a row or a column of the array."""
    lines = build_array().partitions()
    expected = {frozenset((a, b)) for line in lines for a, b in combinations(sorted(line), 2)}
    return {frozenset(e) for e in disjointness_graph().edges} == expected


@cache
def find_all_partitions() -> tuple[SubPolytope, ...]:
    """Every set of five mutually disjoint 24-cells, by exhaustive clique search."""
    cells = enumerate_24cells()
    data = pairs()
    found = []
    for clique in nx.enumerate_all_cliques(disjointness_graph()):
        if len(clique) < 5:
            continue
        if len(clique) > 5:
            raise EnumerationError(f"six mutually disjoint 24-cells: {clique}")
        covered = set()
        for c in clique:
            covered |= set(cells[c].members)
        if len(covered) == len(data.members):
            found.append(SubPolytope(Kind.PARTITION, tuple(clique)))
    logger.info("exhaustive search found %d partitions", len(found))
    return tuple(sorted(found))


# Labels


@dataclass(frozen=True)
class Labels:
    cell_duads: tuple[Duad, ...]
    vertex_labels: tuple[VertexLabel, ...]

    def cell_at(self, duad: Duad) -> int:
        return self.cell_duads.index(duad)

    def pair_with(self, label: VertexLabel) -> int:
        return self.vertex_labels.index(label)


@cache
def label_all() -> Labels:
    array = build_array()
    cells = enumerate_24cells()
    cell_duads = [None] * len(cells)
    for i, row in enumerate(array.grid):
        for j, c in enumerate(row):
            cell_duads[c] = Duad(i, j)
    vertex_labels = []
    for p in range(len(pairs().members)):
        containing = [cell_duads[c] for c, cell in enumerate(cells) if p in cell]
        if len(containing) != 5:
            raise EnumerationError(f"pair {p} lies in {len(containing)} 24-cells")
        by_row = {d.row: d.col for d in containing}
        if len(by_row) != 5 or len(set(by_row.values())) != 5:
            raise EnumerationError(f"pair {p} is not in one 24-cell per row and column")
        vertex_labels.append(VertexLabel(tuple(by_row[r] for r in range(5))))
    return Labels(tuple(cell_duads), tuple(vertex_labels))


def shared_duad_classes() -> dict[tuple[int, str], int]:
    """Census of (shared duads, |inner product|) over all unordered pairs of pairs."""
    labels = label_all().vertex_labels
    census = Counter()
    for p, q in combinations(range(len(labels)), 2):
        census[(labels[p].shared(labels[q]), str(pair_ip(p, q)))] += 1
    return dict(census)


# Hexagons, decagons, pentagons


@cache
def enumerate_hexagons() -> tuple[SubPolytope, ...]:
    cells = enumerate_24cells()
    found = set()
    for a, b in combinations(range(len(cells)), 2):
        common = set(cells[a].members) & set(cells[b].members)
        if not common:
            continue
        if len(common) != 3:
            raise EnumerationError(f"24-cells {a} and {b} meet in {len(common)} pairs")
        if any(pair_ip(p, q) != ONE for p, q in combinations(common, 2)):
            raise EnumerationError(f"intersection of {a} and {b} is not a hexagon")
        found.add(SubPolytope(Kind.HEXAGON, tuple(common)))
    return tuple(sorted(found))


@cache
def order5_elements() -> tuple[int, ...]:
    return tuple(i for i, v in enumerate(generate_vertices()) if element_order(v) == 5)


@cache
def enumerate_decagons() -> tuple[SubPolytope, ...]:
    """Pair-level orbits p<w> under right multiplication by order-5 elements."""
    table = cayley_table()
    data = pairs()
    found = set()
    for w in order5_elements():
        for p, (x, _) in enumerate(data.members):
            orbit, y = set(), x
            for _ in range(5):
                orbit.add(data.pair_of[y])
                y = table[y][w]
            found.add(frozenset(orbit))
    decagons = []
    for orbit in found:
        if any(pair_ip(p, q) not in (PHI, PHI_INV) for p, q in combinations(orbit, 2)):
            raise EnumerationError(f"orbit {sorted(orbit)} is not a decagon")
        decagons.append(SubPolytope(Kind.DECAGON, tuple(orbit)))
    return tuple(sorted(decagons))


def pentagon(decagon: SubPolytope) -> SubPolytope:
    """The pentagon of `decagon` through its least vertex."""
    table = ip_table()
    vertices = sorted(pairs().vertices(decagon.members))
    x = vertices[0]
    members = [x] + [y for y in vertices if table[x][y] in (PHI_INV, -PHI)]
    return SubPolytope(Kind.PENTAGON, tuple(members))


@cache
def enumerate_pentagons() -> tuple[SubPolytope, ...]:
    return tuple(pentagon(d) for d in enumerate_decagons())


def edges_per_decagon_count() -> Counter:
    """How many decagons (at vertex level) contain each edge."""
    data = pairs()
    vertex_sets = [data.vertices(d.members) for d in enumerate_decagons()]
    counts = Counter()
    for edge in enumerate_skeleton().edges:
        u, v = edge.members
        counts[sum(1 for s in vertex_sets if u in s and v in s)] += 1
    return counts


def decagons_per_pair() -> dict[int, int]:
    """Census of how many decagons pass through each pair."""
    decagons = enumerate_decagons()
    return dict(Counter(sum(1 for d in decagons if p in d) for p in range(len(pairs().members))))


def decagon_neighbors(p: int) -> frozenset[int]:
    """Pairs at |ip| = phi from p on the decagons through p."""
    return frozenset(
        q for d in enumerate_decagons() if p in d
        for q in d.members if pair_ip(p, q) == PHI
    )


def hexagon_duads(hexagon: SubPolytope) -> frozenset[Duad]:
    labels = label_all().vertex_labels
    common = set(labels[hexagon.members[0]].duads())
    for p in hexagon.members[1:]:
        common &= set(labels[p].duads())
    return frozenset(common)


# Prime arrays


@dataclass(frozen=True)
class PrimeArray:
    p: int
    sylow: frozenset[int]
    normalizer: frozenset[int]
    transversal: tuple[int, ...]
    grid: tuple[tuple[frozenset[int], ...], ...]

    @property
    def size(self) -> int:
        return len(self.grid)

    def entries(self) -> list[frozenset[int]]:
        return [e for row in self.grid for e in row]

    def lines_partition(self, n_vertices: int = 120) -> bool:
        full = set(range(n_vertices))
        for line in list(self.grid) + list(zip(*self.grid)):
            covered = set()
            for entry in line:
                if covered & entry:
                    return False
                covered |= entry
            if covered != full:
                return False
        return True


def sylow_subgroup(p: int) -> frozenset[int]:
    vertices = generate_vertices()
    if p == 2:
        return frozenset(i for i, v in enumerate(vertices) if sum(1 for c in v if c) == 1)
    if p not in (3, 5):
        raise EnumerationError(f"no prime array for p = {p}")
    t = next(i for i, v in enumerate(vertices) if element_order(v) == p)
    return generated_subgroup([t, index_of(-ONE_I)])


def normalizer(subgroup: frozenset[int]) -> frozenset[int]:
    table = cayley_table()
    vertices = generate_vertices()
    inv = [index_of(inverse(v)) for v in vertices]
    return frozenset(
        x for x in range(len(vertices))
        if {table[table[x][y]][inv[x]] for y in subgroup} == subgroup
    )


@cache
def prime_arrays(p: int) -> PrimeArray:
    table = cayley_table()
    vertices = generate_vertices()
    inv = [index_of(inverse(v)) for v in vertices]
    sylow = sylow_subgroup(p)
    norm = normalizer(sylow)
    transversal, covered = [], set()
    for x in range(len(vertices)):
        if x not in covered:
            transversal.append(x)
            covered |= {table[x][n] for n in norm}
    grid = tuple(
        tuple(frozenset(table[table[gi][n]][inv[gj]] for n in norm) for gj in transversal)
        for gi in transversal
    )
    array = PrimeArray(p, sylow, norm, tuple(transversal), grid)
    if len(set(array.entries())) != array.size ** 2:
        raise EnumerationError(f"p = {p} array entries are not distinct")
    logger.info("p = %d: |P| = %d, |N| = %d, %dx%d array", p, len(sylow), len(norm), array.size, array.size)
    return array


def entry_components(entry: frozenset[int], family: Iterable[SubPolytope]) -> list[SubPolytope]:
    """Members of a pair-level family contained in a vertex-level entry."""
    pair_set = {pairs().pair_of[v] for v in entry}
    return [s for s in family if set(s.members) <= pair_set]


def mutually_orthogonal(a: SubPolytope, b: SubPolytope) -> bool:
    return all(not pair_ip(p, q) for p in a.members for q in b.members)


# The 120-cell


@dataclass(frozen=True)
class Cell120:
    vertices: tuple[IcosianVec, ...]
    home: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...]
    labels: tuple[Cell120Label, ...]

    def cell_members(self, i: int, j: int) -> frozenset[int]:
        return frozenset(k for k, pos in enumerate(self.home) if pos == (i, j))

    def row_members(self, i: int) -> frozenset[int]:
        return frozenset(k for k, pos in enumerate(self.home) if pos[0] == i)

    def column_members(self, j: int) -> frozenset[int]:
        return frozenset(k for k, pos in enumerate(self.home) if pos[1] == j)

    def spectrum(self, members: Iterable[int]) -> dict[GoldenInt, int]:
        members = sorted(members)
        first = self.vertices[members[0]]
        return dict(Counter(natural_ip(first, self.vertices[k]) for k in members))


def cell120_base() -> frozenset[IcosianVec]:
    """C = {(±2, ±2, 0, 0)^S}."""
    out = set()
    for a, b in combinations(range(4), 2):
        for sa in (2, -2):
            for sb in (2, -2):
                coords = [0, 0, 0, 0]
                coords[a], coords[b] = sa, sb
                out.add(vec(*coords))
    return frozenset(out)


def cell_center(cell: SubPolytope) -> IcosianVec:
    vertices = generate_vertices()
    total = vec(0, 0, 0, 0)
    for i in cell.members:
        total = total.plus(vertices[i])
    return total.scaled(PHI_INV2)


@cache
def build_120cell() -> Cell120:
    skeleton = enumerate_skeleton()
    centers = [cell_center(c) for c in skeleton.cells]
    ordered = sorted(set(centers), key=IcosianVec.key)
    if len(ordered) != len(skeleton.cells):
        raise EnumerationError("tetrahedral cells do not have distinct centers")
    position = {v: k for k, v in enumerate(ordered)}
    eight = GoldenInt(8, 0)
    if any(natural_norm(v) != eight for v in ordered):
        raise EnumerationError("120-cell vertices are not all of natural norm 8")

    # Dual edges: tetrahedral cells sharing a triangular face.
    by_face: dict[tuple[int, ...], list[int]] = {}
    for t, cell in enumerate(skeleton.cells):
        for face in combinations(cell.members, 3):
            by_face.setdefault(face, []).append(position[centers[t]])
    neighbors = [set() for _ in ordered]
    for owners in by_face.values():
        if len(owners) != 2:
            raise EnumerationError(f"a triangle lies in {len(owners)} tetrahedral cells")
        a, b = owners
        neighbors[a].add(b)
        neighbors[b].add(a)

    g = build_array().g
    base = cell120_base()
    if not base <= set(ordered):
        raise EnumerationError("(±2, ±2, 0, 0)^S is not inside the 120-cell")
    home: list[tuple[int, int] | None] = [None] * len(ordered)
    for i in range(5):
        left = power(g, i)
        for j in range(5):
            right = power(g, -j)
            for x in base:
                k = position[icosian_mul(icosian_mul(left, x), right)]
                if home[k] is not None:
                    raise EnumerationError(f"120-cell 24-cells ({i}, {j}) and {home[k]} overlap")
                home[k] = (i, j)
    if any(h is None for h in home):
        raise EnumerationError("the 25 24-cells do not cover the 120-cell")

    labels = []
    for k in range(len(ordered)):
        if len(neighbors[k]) != 4:
            raise EnumerationError(f"120-cell vertex {k} has {len(neighbors[k])} neighbors")
        duads = frozenset(Duad(*home[n]) for n in neighbors[k])
        label = Cell120Label(Duad(*home[k]), duads)
        rows = {d.row for d in (label.home, *duads)}
        cols = {d.col for d in (label.home, *duads)}
        if len(rows) != 5 or len(cols) != 5:
            raise EnumerationError(f"120-cell vertex {k} label {label} repeats a row or column")
        labels.append(label)
    logger.info("120-cell: %d vertices in 25 disjoint 24-cells", len(ordered))
    return Cell120(
        tuple(ordered),
        tuple(home),
        tuple(tuple(sorted(n)) for n in neighbors),
        tuple(labels),
    )


def scaled_600cell_spectrum(factor: int) -> dict[GoldenInt, int]:
    """The vertex inner-product spectrum of H (natural, with v itself) times `factor`."""
    base = inner_product_distribution(index_of(ONE_I))
    out = {GoldenInt(2, 0) * 2 * factor: 1}
    for ip, count in base.items():
        out[ip * 2 * factor] = out.get(ip * 2 * factor, 0) + count
    return out


# The rectified 600-cell


def shape(v: Iterable[GoldenInt]) -> tuple[GoldenInt, ...]:
    return tuple(sorted((golden_abs(c) for c in v), key=cmp_to_key(golden_cmp)))


EXPECTED_RECTIFIED_SHAPES = frozenset(
    shape(coords)
    for coords in (
        (ZERO, ZERO, GoldenInt(0, 2), GoldenInt(2, 2)),
        (ONE, ONE, GoldenInt(1, 2), GoldenInt(1, 2)),
        (ZERO, ONE, PHI, GoldenInt(1, 3)),
        (ZERO, GoldenInt(1, 1), GoldenInt(1, 2), GoldenInt(2, 1)),
        (ONE, PHI, GoldenInt(2, 2), GoldenInt(1, 1)),
        (PHI, GoldenInt(1, 1), GoldenInt(0, 2), GoldenInt(1, 2)),
    )
)
RECTIFIED_NORM = GoldenInt(12, 16)


@cache
def rectified_600cell() -> tuple[IcosianVec, ...]:
    """phi * (u + v) for every edge {u, v}, in key order."""
    vertices = generate_vertices()
    out = set()
    for edge in enumerate_skeleton().edges:
        u, v = (vertices[i] for i in edge.members)
        out.add(u.plus(v).scaled(PHI))
    if len(out) != len(enumerate_skeleton().edges):
        raise EnumerationError("edge midpoints are not distinct")
    return tuple(sorted(out, key=IcosianVec.key))


def rectified_shape_census() -> dict[tuple[GoldenInt, ...], int]:
    return dict(Counter(shape(v) for v in rectified_600cell()))


# Serialization


def vertices_json() -> list[dict]:
    data = pairs()
    return [
        {"index": i, "coords": v.to_json(), "pair": data.pair_of[i]}
        for i, v in enumerate(generate_vertices())
    ]


def labels_json() -> dict:
    labels = label_all()
    return {
        "cells": [{"index": k, "duad": str(d)} for k, d in enumerate(labels.cell_duads)],
        "pairs": [
            {"pair": p, "vertex": pairs().rep(p), "label": str(lab)}
            for p, lab in enumerate(labels.vertex_labels)
        ],
    }


def array_json() -> dict:
    array = build_array()
    labels = label_all()
    return {
        "g": array.g.to_json(),
        "grid": [
            [{"cell": c, "duad": str(labels.cell_duads[c]), "pairs": list(enumerate_24cells()[c].members)} for c in row]
            for row in array.grid
        ],
    }


if __name__ == "__main__":
    print(f"skeleton (edges, triangles, cells): {enumerate_skeleton().counts()}")
    print(f"16-cells: {len(enumerate_16cells())}, 24-cells: {len(enumerate_24cells())}, 8-cells: {len(enumerate_8cells())}")
    print(f"partitions: {len(find_all_partitions())}")
    print(f"label of 1_I: {label_all().vertex_labels[pairs().pair_of[index_of(ONE_I)]]}")
    print(f"hexagons: {len(enumerate_hexagons())}, decagons: {len(enumerate_decagons())}")
