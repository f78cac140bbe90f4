"""
symmetry.py
-----------
The symmetry group H4 of the 600-cell (order 14400) acting on vertices,
24-cells and Schoute's ten partitions.

Group elements are stored as vertex permutations together with an
orientation parity; the 4x4 matrix is recovered from the images of the four
basis vertices 2*e_k. The action on the ten partitions is read off from the
action on 24-cells, so it never depends on a labeling convention.

Includes:
- SymOp and the generators L_a, R_a, r_v.
- generate_group(): breadth-first closure of the generators.
- action_on_partitions(): the induced TenPerm of the ten partitions.
- stabilizer_orders(): orbit-stabilizer data for a vertex and a 24-cell.

Usage:
- Print the group order and the image in S10: `python symmetry.py`
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import cache
from typing import Callable, Iterable

from sympy.combinatorics import Permutation, PermutationGroup

from golden import GoldenRational, GoldenInt
from icosian import (
    ONE_I,
    IcosianVec,
    binary_tetrahedral,
    find_order5,
    generate_vertices,
    generated_subgroup,
    icosian_mul,
    index_of,
    natural_ip,
    vec,
)
from polytopes import (
    SYMBOLS,
    build_array,
    cell_index,
    enumerate_16cells,
    enumerate_24cells,
    enumerate_decagons,
    enumerate_hexagons,
    pairs,
)

logger = logging.getLogger(__name__)

GROUP_ORDER = 14400
BASIS = tuple(vec(*(2 if k == j else 0 for k in range(4))) for j in range(4))


class ClosureError(RuntimeError):
    """A generator failed to preserve the structure it should."""


@dataclass(frozen=True)
class SymOp:
    """perm[i] is the index of the image of vertex i; parity 1 reverses orientation."""

    perm: tuple[int, ...]
    parity: int = 0

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def compose(self, other: SymOp) -> SymOp:
        """self after other."""
        return SymOp(tuple(self.perm[j] for j in other.perm), self.parity ^ other.parity)

    __matmul__ = compose

    def inverse(self) -> SymOp:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return SymOp(tuple(inv), self.parity)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def twice_matrix(self) -> tuple[tuple[GoldenInt, ...], ...]:
        """2M as rows; column k is the image of 2*e_k."""
        vertices = generate_vertices()
        cols = [vertices[self.perm[index_of(b)]] for b in BASIS]
        return tuple(tuple(cols[c][r] for c in range(4)) for r in range(4))

    def matrix(self) -> tuple[tuple[GoldenRational, ...], ...]:
        return tuple(tuple(GoldenRational(x, 2) for x in row) for row in self.twice_matrix())

    def apply(self, x: IcosianVec) -> IcosianVec:
        """Linear extension to any vector whose image has integral coordinates."""
        twice = self.twice_matrix()
        return IcosianVec(*(natural_ip(row, x).halve() for row in twice))

    def pair_map(self) -> tuple[int, ...]:
        data = pairs()
        return tuple(data.pair_of[self.perm[rep]] for rep, _ in data.members)

    def map_pairs(self, members: Iterable[int]) -> frozenset[int]:
        pm = self.pair_map()
        return frozenset(pm[p] for p in members)


def from_function(f: Callable[[IcosianVec], IcosianVec], parity: int = 0) -> SymOp:
    return SymOp(tuple(index_of(f(v)) for v in generate_vertices()), parity)


def left_mult(a: IcosianVec) -> SymOp:
    return from_function(lambda x: icosian_mul(a, x))


def right_mult(a: IcosianVec) -> SymOp:
    return from_function(lambda x: icosian_mul(x, a))


def reflection(v: IcosianVec) -> SymOp:
    """r_v(x) = x - (x.v)/2 * v for a vertex v of natural norm 4."""
    return from_function(lambda x: x.minus(v.scaled(natural_ip(x, v).halve())), parity=1)


def identity() -> SymOp:
    return SymOp(tuple(range(len(generate_vertices()))))


def negation() -> SymOp:
    return left_mult(-ONE_I)


@cache
def generating_pair() -> tuple[IcosianVec, IcosianVec]:
    """g and the least vertex b with <g, b> = 2A5."""
    vertices = generate_vertices()
    a = index_of(find_order5())
    for b in range(len(vertices)):
        if len(generated_subgroup([a, b])) == len(vertices):
            return vertices[a], vertices[b]
    raise ClosureError("no vertex completes g to a generating pair of 2A5")


@cache
def generators() -> tuple[SymOp, ...]:
    a, b = generating_pair()
    return (left_mult(a), left_mult(b), right_mult(a), right_mult(b), reflection(ONE_I))


@cache
def generate_group() -> tuple[SymOp, ...]:
    gens = generators()
    start = identity()
    seen = {start.perm: start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g @ x
                if y.perm not in seen:
                    seen[y.perm] = y
                    nxt.append(y)
        frontier = nxt
        if len(seen) > GROUP_ORDER:
            raise ClosureError(f"closure exceeded {GROUP_ORDER} elements")
    group = tuple(sorted(seen.values(), key=lambda op: op.perm))
    logger.info("H4 closure: %d elements, %d orientation-preserving", len(group), sum(1 for op in group if not op.parity))
    return group


def distinct_matrices(group: Iterable[SymOp]) -> int:
    return len({tuple(op.perm[index_of(b)] for b in BASIS) for op in group})


# Action on 24-cells and the ten partitions


@dataclass(frozen=True)
class TenPerm:
    """images[s] is the partition that partition s is sent to; 0..4 are rows 1..5, 5..9 columns 6..X."""

    images: tuple[int, ...]

    def __matmul__(self, other: TenPerm) -> TenPerm:
        return TenPerm(tuple(self.images[s] for s in other.images))

    def swaps_pentads(self) -> bool:
        return all((self.images[s] < 5) != (s < 5) for s in range(10))

    def preserves_pentads(self) -> bool:
        return all((self.images[s] < 5) == (s < 5) for s in range(10))

    def even_on_pentads(self) -> bool:
        rows = Permutation([self.images[s] for s in range(5)])
        cols = Permutation([self.images[s] - 5 for s in range(5, 10)])
        return self.preserves_pentads() and rows.is_even and cols.is_even

    def to_permutation(self) -> Permutation:
        return Permutation(list(self.images))

    def __str__(self):
        cycles = self.to_permutation().cyclic_form
        if not cycles:
            return "()"
        return "".join("(" + "".join(SYMBOLS[s] for s in cycle) + ")" for cycle in cycles)


def cell_map(op: SymOp) -> tuple[int, ...]:
    return tuple(cell_index(op.map_pairs(c.members)) for c in enumerate_24cells())


def action_on_partitions(op: SymOp) -> TenPerm:
    cmap = cell_map(op)
    parts = build_array().partitions()
    lookup = {p: s for s, p in enumerate(parts)}
    out = []
    for part in parts:
        image = frozenset(cmap[c] for c in part)
        if image not in lookup:
            raise ClosureError("a symmetry does not map partitions to partitions")
        out.append(lookup[image])
    return TenPerm(tuple(out))


@cache
def image_group() -> frozenset[TenPerm]:
    return frozenset(action_on_partitions(op) for op in generate_group())


def action_kernel() -> list[SymOp]:
    trivial = TenPerm(tuple(range(10)))
    return [op for op in generate_group() if action_on_partitions(op) == trivial]


def image_group_order() -> int:
    """Order of the S10 subgroup generated by the generators' images, via Schreier-Sims."""
    return PermutationGroup([action_on_partitions(g).to_permutation() for g in generators()]).order()


def verify_homomorphism(samples: int = 200, seed: int = 2024) -> bool:
    group = generate_group()
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = rng.choice(group), rng.choice(group)
        if action_on_partitions(a @ b) != action_on_partitions(a) @ action_on_partitions(b):
            logger.warning("action on partitions is not multiplicative on a sampled pair")
            return False
    return True


def center() -> list[SymOp]:
    group = generate_group()
    gens = generators()
    return [op for op in group if all(op @ g == g @ op for g in gens)]


@cache
def _families() -> dict[str, frozenset[frozenset[int]]]:
    return {
        "cell16": frozenset(frozenset(s.members) for s in enumerate_16cells()),
        "cell24": frozenset(frozenset(s.members) for s in enumerate_24cells()),
        "hexagon": frozenset(frozenset(s.members) for s in enumerate_hexagons()),
        "decagon": frozenset(frozenset(s.members) for s in enumerate_decagons()),
    }


def preserves_families(op: SymOp) -> dict[str, bool]:
    """Setwise action of op on every pair-level family."""
    return {
        name: all(op.map_pairs(s) in family for s in family)
        for name, family in _families().items()
    }


def family_preservation(sample_size: int = 50, seed: int = 2024) -> dict[str, bool]:
    """Generators plus a seeded sample of group elements."""
    group = generate_group()
    ops = list(generators()) + random.Random(seed).sample(group, min(sample_size, len(group)))
    results = [preserves_families(op) for op in ops]
    return {name: all(r[name] for r in results) for name in _families()}


# Stabilizers and orbits


def vertex_stabilizer(v: int) -> list[SymOp]:
    return [op for op in generate_group() if op.perm[v] == v]


def cell_stabilizer(cell: int, group: Iterable[SymOp] | None = None) -> list[SymOp]:
    members = frozenset(enumerate_24cells()[cell].members)
    group = generate_group() if group is None else group
    return [op for op in group if op.map_pairs(members) == members]


def pair_orbits(ops: Iterable[SymOp]) -> list[int]:
    maps = [op.pair_map() for op in ops]
    return _orbit_sizes(len(pairs().members), maps)


def cell_orbits(ops: Iterable[SymOp]) -> list[int]:
    maps = [cell_map(op) for op in ops]
    return _orbit_sizes(len(enumerate_24cells()), maps)


def _orbit_sizes(n: int, maps: list[tuple[int, ...]]) -> list[int]:
    seen, sizes = set(), []
    for start in range(n):
        if start in seen:
            continue
        orbit = {m[start] for m in maps} | {start}
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


def base_cell() -> int:
    """The 24-cell 2A4, entry (1, 6) of the array."""
    data = pairs()
    return cell_index({data.pair_of[i] for i in binary_tetrahedral()})


@dataclass(frozen=True)
class StabilizerReport:
    vertex_order: int
    vertex_pair_orbits: list[int]
    vertex_cell_orbits: list[int]
    contains_minus_reflection: bool
    cell_order: int
    cell_cell_orbits: list[int]
    cell_pair_orbits: list[int]
    joint_order: int
    joint_cell_orbits: list[int]

    def to_json(self):
        return dict(self.__dict__)


@cache
def stabilizer_orders() -> StabilizerReport:
    """Orbit-stabilizer data for v = 1_I and C = 2A4 (which contains 1_I)."""
    v = index_of(ONE_I)
    stab_v = vertex_stabilizer(v)
    minus_r = negation() @ reflection(ONE_I)
    stab_c = cell_stabilizer(base_cell())
    joint = cell_stabilizer(base_cell(), stab_v)
    return StabilizerReport(
        vertex_order=len(stab_v),
        vertex_pair_orbits=pair_orbits(stab_v),
        vertex_cell_orbits=cell_orbits(stab_v),
        contains_minus_reflection=minus_r in stab_v,
        cell_order=len(stab_c),
        cell_cell_orbits=cell_orbits(stab_c),
        cell_pair_orbits=pair_orbits(stab_c),
        joint_order=len(joint),
        joint_cell_orbits=cell_orbits(joint),
    )


if __name__ == "__main__":
    group = generate_group()
    print(f"|H4| = {len(group)}, rotations: {sum(1 for op in group if not op.parity)}")
    print(f"image in S10: {len(image_group())}, Schreier-Sims: {image_group_order()}")
    print(stabilizer_orders())
