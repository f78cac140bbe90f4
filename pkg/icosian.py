"""
icosian.py
----------
Quaternion arithmetic over the golden field and the 120 icosians (the vertex
set 2A5 of the 600-cell) at standard scale, i.e. twice the unit-quaternion
coordinates, so every vertex has natural norm 4 and integer-pair coordinates.

Includes:
- IcosianVec: a 4-vector of GoldenInt coordinates, scalars for (1, i, j, k).
- generate_vertices(): the 120 vertices in deterministic key order.
- icosian_mul(): the quaternion product rescaled by 1/2.
- element_order(), find_order5(), order_census() and the Cayley table.

Usage:
- Print the vertex census: `python icosian.py`
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import cache
from itertools import permutations, product
from typing import Iterable, NamedTuple

from sympy.combinatorics import Permutation

from golden import ONE, PHI, PHI_INV, ZERO, GoldenInt

logger = logging.getLogger(__name__)

MAX_ORDER = 12


class IcosianError(ValueError):
    """Raised for products off the standard scale or elements of no small order."""


class IcosianVec(NamedTuple):
    c0: GoldenInt
    c1: GoldenInt
    c2: GoldenInt
    c3: GoldenInt

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple((c.a, c.b) for c in self)

    def __neg__(self):
        return IcosianVec(*(-c for c in self))

    def plus(self, other: IcosianVec) -> IcosianVec:
        return IcosianVec(*(x + y for x, y in zip(self, other)))

    def minus(self, other: IcosianVec) -> IcosianVec:
        return IcosianVec(*(x - y for x, y in zip(self, other)))

    def scaled(self, k: GoldenInt | int) -> IcosianVec:
        return IcosianVec(*(c * k for c in self))

    def halved(self) -> IcosianVec:
        return IcosianVec(*(c.halve() for c in self))

    def to_json(self) -> list[list[int]]:
        return [c.to_json() for c in self]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"


def vec(*coords) -> IcosianVec:
    """Build an IcosianVec from ints, GoldenInts or (a, b) pairs."""
    out = []
    for c in coords:
        if isinstance(c, GoldenInt):
            out.append(c)
        elif isinstance(c, tuple):
            out.append(GoldenInt(*c))
        else:
            out.append(GoldenInt(c, 0))
    return IcosianVec(*out)


ONE_I = vec(2, 0, 0, 0)


def natural_ip(u: Iterable[GoldenInt], v: Iterable[GoldenInt]) -> GoldenInt:
    total = ZERO
    for x, y in zip(u, v):
        total = total + x * y
    return total


def natural_norm(v: Iterable[GoldenInt]) -> GoldenInt:
    v = tuple(v)
    return natural_ip(v, v)


def hamilton(u: IcosianVec, v: IcosianVec) -> IcosianVec:
    a1, b1, c1, d1 = u
    a2, b2, c2, d2 = v
    return IcosianVec(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def icosian_mul(u: IcosianVec, v: IcosianVec) -> IcosianVec:
    """Quaternion product at standard scale: hamilton(u, v) / 2."""
    product_ = hamilton(u, v)
    try:
        return product_.halved()
    except ValueError as exc:
        raise IcosianError(f"{u} * {v} leaves the standard scale") from exc


def quaternion_conj(v: IcosianVec) -> IcosianVec:
    return IcosianVec(v.c0, -v.c1, -v.c2, -v.c3)


def inverse(v: IcosianVec) -> IcosianVec:
    """Inverse of a vertex (norm 4) under icosian_mul."""
    return quaternion_conj(v)


def _shape_even_perms() -> list[tuple[GoldenInt, ...]]:
    values = (ZERO, ONE, PHI, PHI_INV)
    out = []
    for perm in permutations(range(4)):
        if not Permutation(list(perm)).is_even:
            continue
        base = [values[perm[k]] for k in range(4)]
        for signs in product((1, -1), repeat=3):
            coords, s = [], iter(signs)
            for c in base:
                coords.append(c * next(s) if c else c)
            out.append(tuple(coords))
    return out


@cache
def generate_vertices() -> tuple[IcosianVec, ...]:
    """The 120 icosians at standard scale, sorted by key."""
    found: set[IcosianVec] = set()
    for k in range(4):
        for sign in (2, -2):
            coords = [0, 0, 0, 0]
            coords[k] = sign
            found.add(vec(*coords))
    for signs in product((1, -1), repeat=4):
        found.add(vec(*signs))
    for coords in _shape_even_perms():
        found.add(IcosianVec(*coords))
    vertices = tuple(sorted(found, key=IcosianVec.key))
    logger.debug("generated %d icosians", len(vertices))
    return vertices


@cache
def vertex_index() -> dict[IcosianVec, int]:
    return {v: i for i, v in enumerate(generate_vertices())}


def index_of(v: IcosianVec) -> int:
    try:
        return vertex_index()[v]
    except KeyError:
        raise IcosianError(f"{v} is not a vertex of the 600-cell") from None


def shape_counts(vertices: Iterable[IcosianVec]) -> dict[str, int]:
    counts = Counter()
    for v in vertices:
        nonzero = sum(1 for c in v if c)
        if nonzero == 1:
            counts["(±2,0,0,0)^S"] += 1
        elif nonzero == 4 and all(c.b == 0 for c in v):
            counts["(±1,±1,±1,±1)"] += 1
        else:
            counts["(0,±1,±φ,±φ⁻¹)^A"] += 1
    return dict(counts)


@cache
def cayley_table() -> tuple[tuple[int, ...], ...]:
    vertices = generate_vertices()
    return tuple(tuple(index_of(icosian_mul(u, v)) for v in vertices) for u in vertices)


def element_order(v: IcosianVec) -> int:
    power = v
    for k in range(1, MAX_ORDER + 1):
        if power == ONE_I:
            return k
        power = icosian_mul(power, v)
    raise IcosianError(f"{v} has no order up to {MAX_ORDER}")


def order_census() -> dict[int, int]:
    return dict(sorted(Counter(element_order(v) for v in generate_vertices()).items()))


@cache
def find_order5() -> IcosianVec:
    """The key-least vertex of order 5."""
    for v in generate_vertices():
        if element_order(v) == 5:
            return v
    raise IcosianError("no element of order 5")


def power(v: IcosianVec, k: int) -> IcosianVec:
    if k < 0:
        v, k = inverse(v), -k
    result = ONE_I
    for _ in range(k):
        result = icosian_mul(result, v)
    return result


@cache
def binary_tetrahedral() -> frozenset[int]:
    """Indices of the 24 vertices of shapes (±2,0,0,0)^S and (±1,±1,±1,±1)."""
    return frozenset(i for i, v in enumerate(generate_vertices()) if all(c.b == 0 for c in v))


def generated_subgroup(generators: Iterable[int]) -> frozenset[int]:
    table = cayley_table()
    gens = list(generators)
    group = {index_of(ONE_I)}
    frontier = list(group)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = table[x][g]
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(group)


def is_latin_square(table: tuple[tuple[int, ...], ...]) -> bool:
    n = len(table)
    full = set(range(n))
    return all(set(row) == full for row in table) and all(set(col) == full for col in zip(*table))


if __name__ == "__main__":
    vertices = generate_vertices()
    print(f"{len(vertices)} vertices: {shape_counts(vertices)}")
    print(f"order census: {order_census()}")
    print(f"least order-5 vertex g = {find_order5()}")
