"""
mod2.py
-------
E8/2E8 as an 8-space over F2 with its quadratic form Q, the order-3 map
induced by multiplication by phi, and the F4-geometry it carries: 85
points, 357 lines and 85 planes labeled by vertex pairs and 24-cells of the
600-cell, the F4-valued form Q_omega, and the 270 totally singular 4-spaces
with Schoute's two pentads.

F2 vectors are ints 0..255 whose bit i is the coefficient of the i-th
certified E8 basis vector mod 2. F4 scalars are ints 0..3 with 2 = omega
and 3 = omega-bar; addition is XOR.

Usage:
- Print the censuses: `python mod2.py`
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, partial
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx
from sympy import Matrix, eye

from embed import EPSILON, e8_lattice
from golden import PHI, GoldenInt
from icosian import generate_vertices, index_of, vec
from polytopes import (
    Duad,
    build_array,
    enumerate_16cells,
    enumerate_24cells,
    enumerate_decagons,
    enumerate_hexagons,
    hexagon_duads,
    label_all,
    pair_ip,
    pairs,
)
from symmetry import SymOp, cell_map, generate_group, generators

logger = logging.getLogger(__name__)

F2Vec = int
DIM = 8
SIZE = 1 << DIM

ZERO_F4, ONE_F4, OMEGA, OMEGA_BAR = 0, 1, 2, 3
F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
F4_NAMES = ("0", "1", "ω", "ω̄")

LINE_CENSUS = {(0, 5): 10, (5, 0): 72, (4, 1): 75, (3, 2): 200}
SUBSPACE_COUNTS = {1: 135, 2: 1575, 3: 2025, 4: 270}


class GeometryError(RuntimeError):
    """A census mismatch, an ambiguous tag or a subspace that is not closed."""


def f4_mul(a: int, b: int) -> int:
    return F4_MUL[a][b]


def trace(a: int) -> int:
    """Tr from F4 to F2: 0 on {0, 1}, 1 on {omega, omega-bar}."""
    return 1 if a >= 2 else 0


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def bits(coeffs: Sequence[int]) -> F2Vec:
    return sum(1 << i for i, c in enumerate(coeffs) if c % 2)


# The quotient


@dataclass(frozen=True)
class Quotient:
    gram: tuple[tuple[int, ...], ...]
    q: tuple[int, ...]
    b: tuple[tuple[int, ...], ...]

    def Q(self, x: F2Vec) -> int:
        return self.q[x]

    def B(self, x: F2Vec, y: F2Vec) -> int:
        return self.b[x][y]

    def census(self) -> dict[str, int]:
        isotropic = sum(1 for x in range(1, SIZE) if not self.q[x])
        return {"zero": 1, "isotropic": isotropic, "non_isotropic": SIZE - 1 - isotropic}

    def is_alternating(self) -> bool:
        return all(self.b[x][x] == 0 for x in range(SIZE))

    def singular(self) -> list[F2Vec]:
        return [x for x in range(1, SIZE) if not self.q[x]]


@cache
def build_quotient() -> Quotient:
    gram = e8_lattice().gram
    if any(gram[i][i] % 2 for i in range(DIM)):
        raise GeometryError("Q is only defined on an even lattice")
    q = []
    for x in range(SIZE):
        value = sum(gram[i][i] // 2 for i in range(DIM) if x >> i & 1)
        value += sum(gram[i][j] for i, j in combinations(range(DIM), 2) if x >> i & 1 and x >> j & 1)
        q.append(value % 2)
    # column masks: gcol[y] has bit i set when (G y)_i is odd
    gcol = []
    for y in range(SIZE):
        mask = 0
        for i in range(DIM):
            if sum(gram[i][j] for j in range(DIM) if y >> j & 1) % 2:
                mask |= 1 << i
        gcol.append(mask)
    b = tuple(tuple(parity(x & gcol[y]) for y in range(SIZE)) for x in range(SIZE))
    quotient = Quotient(gram, tuple(q), b)
    census = quotient.census()
    if census["isotropic"] != 135:
        raise GeometryError(f"quotient census {census}")
    logger.info("E8/2E8: %s", census)
    return quotient


def class_of(ambient: Sequence[Fraction]) -> F2Vec:
    return bits(e8_lattice().coefficients(ambient))


@cache
def root_coefficients() -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Basis coefficients of epsilon(v) and epsilon(phi v) for every vertex v, in vertex order."""
    e8 = e8_lattice()
    h, phi_h = [], []
    for v in generate_vertices():
        h.append(e8.coefficients(EPSILON.split_vector(v)))
        phi_h.append(e8.coefficients(EPSILON.split_vector(v.scaled(PHI))))
    return tuple(h), tuple(phi_h)


@cache
def root_classes() -> tuple[tuple[F2Vec, ...], tuple[F2Vec, ...]]:
    h, phi_h = root_coefficients()
    return tuple(bits(c) for c in h), tuple(bits(c) for c in phi_h)


# Phi


def ambient_phi() -> Matrix:
    """(a, b) -> (b, a + b) on every coordinate pair: epsilon of multiplication by phi."""
    p = Matrix.zeros(DIM, DIM)
    for k in range(0, DIM, 2):
        p[k, k + 1] = 1
        p[k + 1, k] = 1
        p[k + 1, k + 1] = 1
    return p


@dataclass(frozen=True)
class PhiMap:
    matrix: tuple[tuple[int, ...], ...]
    table: tuple[F2Vec, ...]

    def __call__(self, x: F2Vec) -> F2Vec:
        return self.table[x]

    def scale(self, a: int, x: F2Vec) -> F2Vec:
        """F4 scalar a times x: omega acts as Phi-bar."""
        if a == ZERO_F4:
            return 0
        if a == ONE_F4:
            return x
        if a == OMEGA:
            return self.table[x]
        return self.table[self.table[x]]


@cache
def build_phi() -> PhiMap:
    e8 = e8_lattice()
    basis = Matrix([[c for c in b] for b in e8.basis]).T
    m = basis.inv() * ambient_phi() * basis
    if any(not c.is_integer for c in m):
        raise GeometryError("Phi does not preserve the lattice")
    if m * m != m + eye(DIM):
        raise GeometryError("Phi^2 != Phi + 1")
    matrix = tuple(tuple(int(m[r, c]) for c in range(DIM)) for r in range(DIM))
    columns = [bits(matrix[r][c] for r in range(DIM)) for c in range(DIM)]
    table = []
    for x in range(SIZE):
        image = 0
        for c in range(DIM):
            if x >> c & 1:
                image ^= columns[c]
        table.append(image)
    return PhiMap(matrix, tuple(table))


@dataclass(frozen=True)
class PhiReport:
    golden_relation: bool
    order_three: bool
    agrees_on_roots: bool
    sums_isotropic: bool
    self_adjoint: bool
    isometry_failures: int
    counterexample_b: tuple[int, int]

    def to_json(self):
        return dict(self.__dict__)


def phi_report() -> PhiReport:
    phi = build_phi()
    quotient = build_quotient()
    m = Matrix(phi.matrix)
    h, _ = root_classes()
    h_coeffs, phi_h_coeffs = root_coefficients()
    order_three = all(phi(phi(phi(x))) == x for x in range(SIZE))
    agrees = all(
        list(m * Matrix(list(x))) == list(y) for x, y in zip(h_coeffs, phi_h_coeffs)
    )
    sums = all(quotient.Q(x ^ phi(x)) == 0 for x in h)
    self_adjoint = all(
        quotient.B(phi(x), y) == quotient.B(x, phi(y)) for x in range(SIZE) for y in range(SIZE)
    )
    failures = sum(
        1 for x in range(SIZE) for y in range(SIZE)
        if quotient.B(phi(x), phi(y)) != quotient.B(x, y)
    )
    v0 = h[index_of(vec(2, 0, 0, 0))]
    w = h[index_of(vec((0, 1), 1, (-1, 1), 0))]
    return PhiReport(
        golden_relation=m * m == m + eye(DIM),
        order_three=order_three,
        agrees_on_roots=agrees,
        sums_isotropic=sums,
        self_adjoint=self_adjoint,
        isometry_failures=failures,
        counterexample_b=(quotient.B(v0, w), quotient.B(phi(v0), phi(w))),
    )


# Q_omega


@cache
def q_omega_table() -> tuple[int, ...]:
    """Q(x) + omega Q(omega x) + omega-bar Q(omega-bar x) for every x."""
    quotient, phi = build_quotient(), build_phi()
    return tuple(
        quotient.Q(x)
        ^ f4_mul(OMEGA, quotient.Q(phi.scale(OMEGA, x)))
        ^ f4_mul(OMEGA_BAR, quotient.Q(phi.scale(OMEGA_BAR, x)))
        for x in range(SIZE)
    )


def q_omega(x: F2Vec) -> int:
    return q_omega_table()[x]


def b_omega(x: F2Vec, y: F2Vec) -> int:
    table = q_omega_table()
    return table[x ^ y] ^ table[x] ^ table[y]


# Points


@dataclass(frozen=True)
class F4Point:
    vectors: frozenset[F2Vec]
    kind: str
    tag: int

    def label(self) -> str:
        if self.kind == "vertex":
            return str(label_all().vertex_labels[self.tag])
        return str(label_all().cell_duads[self.tag])

    def to_json(self):
        return {"kind": self.kind, "tag": self.tag, "label": self.label(), "vectors": sorted(self.vectors)}


def point_set(x: F2Vec) -> frozenset[F2Vec]:
    phi = build_phi()
    return frozenset((x, phi(x), x ^ phi(x)))


def f4_span(vectors: Iterable[F2Vec]) -> frozenset[F2Vec]:
    """Smallest Phi-bar closed F2 subspace containing `vectors`."""
    phi = build_phi()
    span = {0}
    for v in vectors:
        for w in (v, phi(v)):
            if w not in span:
                span |= {w ^ s for s in span}
    return frozenset(span)


@dataclass(frozen=True)
class F4Subspace:
    """A Phi-bar closed F2 subspace of E8/2E8, i.e. an F4 subspace."""

    vectors: frozenset[F2Vec]

    @classmethod
    def span(cls, vectors: Iterable[F2Vec]) -> F4Subspace:
        return cls(f4_span(vectors))

    @classmethod
    def perp(cls, vectors: Iterable[F2Vec]) -> F4Subspace:
        return cls(perp(vectors))

    @property
    def f2_dim(self) -> int:
        return dim_of(self.vectors)

    @property
    def dim(self) -> int:
        return self.f2_dim // 2

    def is_closed(self) -> bool:
        phi = build_phi()
        return 0 in self.vectors and all(phi(x) in self.vectors for x in self.vectors)

    def point_indices(self, points: Points) -> tuple[int, ...]:
        return tuple(sorted({points.point_of(x) for x in self.vectors if x}))

    def sort_key(self) -> tuple[F2Vec, ...]:
        return tuple(sorted(self.vectors))


@cache
def _raw_points() -> tuple[frozenset[F2Vec], ...]:
    found = {point_set(x) for x in range(1, SIZE)}
    for p in found:
        if len(p) != 3 or 0 in p:
            raise GeometryError(f"{sorted(p)} is not an F4 point")
    return tuple(sorted(found, key=min))


@cache
def _raw_lines() -> tuple[F4Subspace, ...]:
    points = _raw_points()
    found = set()
    for a, b in combinations(range(len(points)), 2):
        found.add(F4Subspace.span((min(points[a]), min(points[b]))))
    if any(line.dim != 2 for line in found):
        raise GeometryError("a line is not a 2-dimensional F4 space")
    return tuple(sorted(found, key=F4Subspace.sort_key))


@dataclass(frozen=True)
class Points:
    points: tuple[F4Point, ...]
    lookup: dict[F2Vec, int] = field(compare=False, hash=False, repr=False)

    @property
    def vertex_points(self) -> tuple[F4Point, ...]:
        return self.points[: len(pairs().members)]

    @property
    def cell_points(self) -> tuple[F4Point, ...]:
        return self.points[len(pairs().members):]

    def point_of(self, x: F2Vec) -> int:
        return self.lookup[x]

    def vertex_point(self, pair: int) -> int:
        return pair

    def cell_point(self, cell: int) -> int:
        return len(pairs().members) + cell


@cache
def build_points() -> Points:
    h, _ = root_classes()
    data = pairs()
    vertex_sets = [point_set(h[rep]) for rep, _ in data.members]
    if len(set(vertex_sets)) != len(vertex_sets):
        raise GeometryError("two vertex pairs share an F4 point")
    # -v is congruent to v mod 2, so both members land on one point
    for rep, neg in data.members:
        if h[rep] != h[neg]:
            raise GeometryError("antipodal roots fall in different classes")
    vertex_lookup = {s: p for p, s in enumerate(vertex_sets)}
    others = [s for s in _raw_points() if s not in vertex_lookup]
    if len(others) != 25:
        raise GeometryError(f"{len(others)} points are not vertex points")

    sixteen = {frozenset(c.members): c for c in enumerate_16cells()}
    cells = enumerate_24cells()
    tags: dict[frozenset[F2Vec], set[int]] = {s: set() for s in others}
    for line in _raw_lines():
        on_line = {point_set(x) for x in line.vectors if x}
        vertex_pairs = frozenset(vertex_lookup[s] for s in on_line if s in vertex_lookup)
        rest = [s for s in on_line if s not in vertex_lookup]
        if len(vertex_pairs) != 4:
            continue
        if vertex_pairs not in sixteen:
            raise GeometryError(f"line with vertex pairs {sorted(vertex_pairs)} is not a 16-cell")
        (cell_set,) = rest
        owner = [k for k, c in enumerate(cells) if vertex_pairs <= set(c.members)]
        tags[cell_set].update(owner)

    by_cell: dict[int, frozenset[F2Vec]] = {}
    for s, owners in tags.items():
        if len(owners) != 1:
            raise GeometryError(f"cell point {sorted(s)} has tags {sorted(owners)}")
        (cell,) = owners
        if cell in by_cell:
            raise GeometryError(f"24-cell {cell} tags two points")
        by_cell[cell] = s

    points = [F4Point(s, "vertex", p) for p, s in enumerate(vertex_sets)]
    points += [F4Point(by_cell[c], "cell24", c) for c in range(len(cells))]
    logger.info("85 F4 points: 60 vertex points, 25 cell points")
    lookup = {x: k for k, p in enumerate(points) for x in p.vectors}
    return Points(tuple(points), lookup)


# Lines and planes


@dataclass(frozen=True)
class Line:
    vectors: frozenset[F2Vec]
    points: tuple[int, ...]
    vertex_pairs: tuple[int, ...]
    cells: tuple[int, ...]
    certificate: str

    @property
    def type(self) -> tuple[int, int]:
        return len(self.vertex_pairs), len(self.cells)

    def to_json(self):
        return {
            "type": list(self.type),
            "points": list(self.points),
            "vertex_pairs": list(self.vertex_pairs),
            "cells": list(self.cells),
            "certificate": self.certificate,
        }


def _certify_line(vertex_pairs: tuple[int, ...], cells: tuple[int, ...]) -> str:
    labels = label_all()
    kind = (len(vertex_pairs), len(cells))
    if kind == (0, 5):
        if frozenset(cells) not in build_array().partitions():
            raise GeometryError(f"cells {cells} are not one of Schoute's partitions")
        return "partition"
    if kind == (5, 0):
        if frozenset(vertex_pairs) not in {frozenset(d.members) for d in enumerate_decagons()}:
            raise GeometryError(f"pairs {vertex_pairs} are not a decagon")
        return "decagon"
    if kind == (4, 1):
        if not set(vertex_pairs) <= set(enumerate_24cells()[cells[0]].members):
            raise GeometryError(f"16-cell {vertex_pairs} is not in 24-cell {cells[0]}")
        return "16-cell in 24-cell"
    if kind == (3, 2):
        hexagons = {frozenset(h.members): h for h in enumerate_hexagons()}
        hexagon = hexagons.get(frozenset(vertex_pairs))
        if hexagon is None:
            raise GeometryError(f"pairs {vertex_pairs} are not a hexagon")
        d1, d2 = sorted(hexagon_duads(hexagon))
        crossed = {labels.cell_at(Duad(d1.row, d2.col)), labels.cell_at(Duad(d2.row, d1.col))}
        if crossed != set(cells):
            raise GeometryError(f"hexagon {vertex_pairs} carries cells {cells}, expected {sorted(crossed)}")
        return "hexagon with crossed 24-cells"
    raise GeometryError(f"line with profile {kind}")


@cache
def classify_lines() -> tuple[Line, ...]:
    points = build_points()
    lines = []
    for space in _raw_lines():
        on_line = space.point_indices(points)
        if len(on_line) != 5:
            raise GeometryError(f"line holds {len(on_line)} points")
        vertex_pairs = tuple(points.points[k].tag for k in on_line if points.points[k].kind == "vertex")
        cells = tuple(points.points[k].tag for k in on_line if points.points[k].kind == "cell24")
        lines.append(Line(space.vectors, on_line, vertex_pairs, cells, _certify_line(vertex_pairs, cells)))
    census = dict(Counter(line.type for line in lines))
    if census != LINE_CENSUS:
        raise GeometryError(f"line census {census}")
    logger.info("357 lines: %s", census)
    return tuple(lines)


@dataclass(frozen=True)
class Plane:
    pole: int
    vectors: frozenset[F2Vec]
    points: tuple[int, ...]
    composition: tuple[int, int, int]

    def to_json(self):
        return {"pole": self.pole, "points": list(self.points), "composition": list(self.composition)}


def perp(vectors: Iterable[F2Vec]) -> frozenset[F2Vec]:
    quotient = build_quotient()
    vectors = list(vectors)
    return frozenset(y for y in range(SIZE) if all(quotient.B(x, y) == 0 for x in vectors))


@cache
def classify_planes() -> tuple[Plane, ...]:
    points = build_points()
    cells = enumerate_24cells()
    n_pairs = len(pairs().members)
    planes = []
    for k, pole in enumerate(points.points):
        space = F4Subspace.perp(pole.vectors)
        if space.dim != 3 or not space.is_closed():
            raise GeometryError(f"perp of point {k} is not an F4 plane")
        inside = space.point_indices(points)
        inside_pairs = {points.points[j].tag for j in inside if points.points[j].kind == "vertex"}
        inside_cells = {points.points[j].tag for j in inside if points.points[j].kind == "cell24"}
        if pole.kind == "vertex":
            p = pole.tag
            orthogonal = {q for q in range(n_pairs) if not pair_ip(p, q)}
            containing = {c for c, cell in enumerate(cells) if p in cell}
            expected = ({p} | orthogonal, containing)
            composition = (1, len(orthogonal), len(containing))
        else:
            c = pole.tag
            disjoint = {d for d, cell in enumerate(cells) if not set(cell.members) & set(cells[c].members)}
            expected = (set(cells[c].members), {c} | disjoint)
            composition = (1, len(disjoint), len(cells[c].members))
        if (inside_pairs, inside_cells) != expected:
            raise GeometryError(f"plane of point {k} has the wrong composition")
        planes.append(Plane(k, space.vectors, inside, composition))
    return tuple(planes)


# Q_omega table


@dataclass(frozen=True)
class QOmegaReport:
    by_class: dict[str, list[str]]
    trace_formula: bool
    scaling: bool
    bi_additive: bool
    f4_linear: bool

    def to_json(self):
        return dict(self.__dict__)


def q_omega_report() -> QOmegaReport:
    quotient, phi, points = build_quotient(), build_phi(), build_points()
    h, phi_h = root_classes()
    cell_vectors = {x for p in points.cell_points for x in p.vectors}
    vertex_isotropic = {x for p in points.vertex_points for x in p.vectors if not quotient.Q(x)}
    classes = {"cell": cell_vectors, "vertex_isotropic": vertex_isotropic, "H": set(h), "phiH": set(phi_h)}
    table = q_omega_table()
    by_class = {name: sorted({F4_NAMES[table[x]] for x in members}) for name, members in classes.items()}
    basis_values = [[b_omega(1 << i, y) for y in range(SIZE)] for i in range(DIM)]
    bi_additive = True
    for x in range(SIZE):
        for y in range(SIZE):
            expected = 0
            for i in range(DIM):
                if x >> i & 1:
                    expected ^= basis_values[i][y]
            if b_omega(x, y) != expected:
                bi_additive = False
                break
        if not bi_additive:
            break
    return QOmegaReport(
        by_class=by_class,
        trace_formula=all(trace(table[x]) == quotient.Q(x) for x in range(SIZE)),
        scaling=all(table[phi(x)] == f4_mul(OMEGA_BAR, table[x]) for x in range(SIZE)),
        bi_additive=bi_additive,
        f4_linear=all(
            b_omega(phi(x), y) == f4_mul(OMEGA, b_omega(x, y)) for x in range(SIZE) for y in range(SIZE)
        ),
    )


# Totally singular subspaces and pentads


@dataclass(frozen=True)
class IsotropicSpaces:
    counts: dict[int, int]
    spaces: tuple[frozenset[F2Vec], ...]
    classes: tuple[int, ...]

    def class_sizes(self) -> list[int]:
        return sorted(Counter(self.classes).values())

    def index(self, space: frozenset[F2Vec]) -> int:
        return self.spaces.index(space)


def dim_of(space: frozenset[F2Vec]) -> int:
    return len(space).bit_length() - 1


@cache
def isotropic_4spaces() -> IsotropicSpaces:
    quotient = build_quotient()
    singular = quotient.singular()
    level = {frozenset((0, x)) for x in singular}
    counts = {1: len(level)}
    for dim in range(2, 5):
        nxt = set()
        for space in level:
            for v in singular:
                if v in space or any(quotient.B(v, w) for w in space):
                    continue
                nxt.add(space | {v ^ w for w in space})
        level = nxt
        counts[dim] = len(level)
    if counts != SUBSPACE_COUNTS:
        raise GeometryError(f"totally singular subspace counts {counts}")
    spaces = tuple(sorted(level, key=lambda s: tuple(sorted(s))))
    classes = tuple(dim_of(s & spaces[0]) % 2 for s in spaces)
    logger.info("totally singular subspaces: %s", counts)
    return IsotropicSpaces(counts, spaces, classes)


def same_class_intersections() -> bool:
    """Within each class any two spaces meet in {0} or a 2-space."""
    iso = isotropic_4spaces()
    for a, b in combinations(range(len(iso.spaces)), 2):
        if iso.classes[a] == iso.classes[b] and dim_of(iso.spaces[a] & iso.spaces[b]) not in (0, 2):
            return False
    return True


@dataclass(frozen=True)
class Pentads:
    rows: tuple[frozenset[F2Vec], ...]
    columns: tuple[frozenset[F2Vec], ...]

    def figure_one(self) -> bool:
        """V_i meets W_j exactly in the 2-space of cell point (i, j)."""
        points, labels = build_points(), label_all()
        for i, v in enumerate(self.rows):
            for j, w in enumerate(self.columns):
                cell = labels.cell_at(Duad(i, j))
                expected = points.points[points.cell_point(cell)].vectors | {0}
                if v & w != expected:
                    return False
        return True

    def same_vectors(self) -> bool:
        rows = frozenset().union(*self.rows) - {0}
        columns = frozenset().union(*self.columns) - {0}
        return rows == columns and len(rows) == 75

    def mutually_disjoint(self) -> bool:
        return all(
            len(a & b) == 1
            for family in (self.rows, self.columns)
            for a, b in combinations(family, 2)
        )


@cache
def pentads() -> Pentads:
    lines = classify_lines()
    by_cells = {frozenset(line.cells): line.vectors for line in lines if line.type == (0, 5)}
    parts = build_array().partitions()
    iso = set(isotropic_4spaces().spaces)
    spaces = [by_cells[p] for p in parts]
    if any(s not in iso for s in spaces):
        raise GeometryError("a Schoute line is not totally singular")
    return Pentads(tuple(spaces[:5]), tuple(spaces[5:]))


@dataclass(frozen=True)
class CompletionReport:
    common_disjoint: int
    line_graph_isomorphic: bool
    clique_sizes: list[int]
    completion_sizes: list[int]
    nine_covers_singular: bool
    others_meet_five: bool
    tetrad_meeting: int
    tetrad_meeting_is_column_pentad: bool

    def to_json(self):
        return dict(self.__dict__)


def pentad_completions(v1: frozenset[F2Vec] | None = None, v2: frozenset[F2Vec] | None = None) -> CompletionReport:
    iso = isotropic_4spaces()
    pent = pentads()
    v1 = pent.rows[0] if v1 is None else v1
    v2 = pent.rows[1] if v2 is None else v2
    if len(v1 & v2) != 1:
        raise GeometryError("pentad completion needs two disjoint 4-spaces")
    common = [s for s in iso.spaces if s not in (v1, v2) and len(s & v1) == 1 and len(s & v2) == 1]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(common)))
    graph.add_edges_from((a, b) for a, b in combinations(range(len(common)), 2) if len(common[a] & common[b]) == 1)
    cliques = sorted(nx.find_cliques(graph), key=lambda c: (-len(c), sorted(c)))
    clique_sizes = sorted({len(c) for c in cliques})

    nine = [v1, v2] + [common[k] for k in cliques[0]]
    covered = frozenset().union(*nine) - {0}
    singular = frozenset(build_quotient().singular())
    own_class = iso.classes[iso.index(v1)]
    others = [s for k, s in enumerate(iso.spaces) if iso.classes[k] == own_class and s not in nine]
    meet_five = all(sum(1 for n in nine if dim_of(s & n) == 2) == 5 for s in others)

    tetrad = pent.rows[:4]
    meeting = [
        s for k, s in enumerate(iso.spaces)
        if iso.classes[k] == own_class and s not in tetrad and all(len(s & t) > 1 for t in tetrad)
    ]
    return CompletionReport(
        common_disjoint=len(common),
        line_graph_isomorphic=nx.is_isomorphic(graph, nx.line_graph(nx.complete_graph(8))),
        clique_sizes=clique_sizes,
        completion_sizes=sorted(size + 2 for size in clique_sizes),
        nine_covers_singular=len(nine) == 9 and covered == singular,
        others_meet_five=meet_five,
        tetrad_meeting=len(meeting),
        tetrad_meeting_is_column_pentad=set(meeting) == set(pent.columns),
    )


# Equivariance


def split_mul(scalar: GoldenInt, pair: tuple[int, int]) -> tuple[int, int]:
    """(c + d phi) . (a, b) = (ca + db, da + (c + d) b) in the epsilon frame."""
    c, d = scalar.a, scalar.b
    a, b = pair
    return c * a + d * b, d * a + (c + d) * b


def ambient_action(op: SymOp, ambient: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Apply op to an epsilon-frame vector through its doubled golden matrix."""
    twice = op.twice_matrix()
    pairs_in = [(int(ambient[k]), int(ambient[k + 1])) for k in range(0, DIM, 2)]
    out = []
    for r in range(4):
        a = b = 0
        for c in range(4):
            x, y = split_mul(twice[r][c], pairs_in[c])
            a, b = a + x, b + y
        out.extend((Fraction(a, 2), Fraction(b, 2)))
    return tuple(out)


def generator_matrix(op: SymOp) -> tuple[F2Vec, ...]:
    """Images of the eight basis classes under op, mod 2."""
    e8 = e8_lattice()
    columns = []
    for k in range(DIM):
        unit = tuple(1 if j == k else 0 for j in range(DIM))
        columns.append(class_of(ambient_action(op, e8.to_ambient(unit))))
    return tuple(columns)


def apply_matrix(columns: Sequence[F2Vec], x: F2Vec) -> F2Vec:
    out = 0
    for k in range(DIM):
        if x >> k & 1:
            out ^= columns[k]
    return out


@dataclass(frozen=True)
class EquivarianceReport:
    checked: int
    commutes_with_phi: bool
    preserves_q: bool
    carries_tags: bool

    def to_json(self):
        return dict(self.__dict__)


def check_equivariance(sample_size: int = 8, seed: int = 2024) -> EquivarianceReport:
    phi, quotient, points = build_phi(), build_quotient(), build_points()
    group = generate_group()
    ops = list(generators()) + random.Random(seed).sample(group, min(sample_size, len(group)))
    commutes = preserves = carries = True
    for op in ops:
        columns = generator_matrix(op)
        act = partial(apply_matrix, columns)
        commutes &= all(act(phi(x)) == phi(act(x)) for x in range(SIZE))
        preserves &= all(quotient.Q(act(x)) == quotient.Q(x) for x in range(SIZE))
        pmap, cmap = op.pair_map(), cell_map(op)
        for p in range(len(pmap)):
            image = points.point_of(act(min(points.points[points.vertex_point(p)].vectors)))
            carries &= image == points.vertex_point(pmap[p])
        for c in range(len(cmap)):
            image = points.point_of(act(min(points.points[points.cell_point(c)].vectors)))
            carries &= image == points.cell_point(cmap[c])
    return EquivarianceReport(len(ops), commutes, preserves, carries)


# Serialization


def lines_json() -> list[dict]:
    return [dict(line.to_json(), index=k) for k, line in enumerate(classify_lines())]


def planes_json() -> list[dict]:
    return [plane.to_json() for plane in classify_planes()]


if __name__ == "__main__":
    print(f"quotient: {build_quotient().census()}")
    print(phi_report())
    print(f"lines: {dict(Counter(line.type for line in classify_lines()))}")
    print(f"4-spaces: {isotropic_4spaces().counts}")
    print(pentad_completions())
