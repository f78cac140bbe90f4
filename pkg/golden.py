"""
golden.py
---------
Exact arithmetic in Z[phi] and Q(sqrt 5), plus the norm-reduction maps that
turn golden-field norms into rational ones.

Includes:
- GoldenInt: a + b*phi stored as an integer pair in the (1, phi) basis.
- GoldenRational: a GoldenInt over a positive integer denominator.
- ReductionMap: the coordinate-splitting map sqrt(n) -> m, together with the
  pre-scaling and form multiplier each embedding pins for itself.
- golden_det / golden_adjugate: small exact matrix helpers over Z[phi].

Usage:
- Import from other modules: `from golden import GoldenInt, PHI`
- Print a few reference values: `python golden.py`
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd, isqrt
from typing import Sequence

from sympy.combinatorics import Permutation

logger = logging.getLogger(__name__)


class ReductionError(ValueError):
    """Raised for indefinite reduction maps and inexact divisions."""


@dataclass(frozen=True)
class GoldenInt:
    a: int = 0
    b: int = 0

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return golden_mul(self, other)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a or self.b)

    def conj(self) -> GoldenInt:
        return golden_conj(self)

    def norm(self) -> int:
        """Field norm x * conj(x) = a^2 + ab - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def sqrt5_form(self) -> tuple[Fraction, Fraction]:
        """(x, y) with x + y*sqrt5 == a + b*phi."""
        return Fraction(2 * self.a + self.b, 2), Fraction(self.b, 2)

    def sign(self) -> int:
        # a + b*phi = (s + t*sqrt5) / 2 with s = 2a + b, t = b
        s, t = 2 * self.a + self.b, self.b
        if s >= 0 and t >= 0:
            return 0 if s == 0 and t == 0 else 1
        if s <= 0 and t <= 0:
            return -1
        if s > 0:
            return 1 if s * s > 5 * t * t else -1
        return 1 if 5 * t * t > s * s else -1

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse(self) -> GoldenInt:
        n = self.norm()
        if abs(n) != 1:
            raise ReductionError(f"{self} is not a unit of Z[phi]")
        return self.conj() * n

    def halve(self) -> GoldenInt:
        return self.divide(2)

    def divide(self, k: int) -> GoldenInt:
        if self.a % k or self.b % k:
            raise ReductionError(f"{self} is not divisible by {k}")
        return GoldenInt(self.a // k, self.b // k)

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}φ"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}φ"


def _coerce(x) -> GoldenInt | None:
    if isinstance(x, GoldenInt):
        return x
    if isinstance(x, int):
        return GoldenInt(x, 0)
    return None


def _lift(x) -> GoldenInt:
    if isinstance(x, GoldenInt):
        return x
    if isinstance(x, int):
        return GoldenInt(x, 0)
    raise TypeError(f"cannot treat {x!r} as a golden integer")


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
PHI = GoldenInt(0, 1)
PHI_INV = GoldenInt(-1, 1)
PHI_INV2 = GoldenInt(2, -1)


def golden_mul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    # phi^2 = phi + 1
    bb = x.b * y.b
    return GoldenInt(x.a * y.a + bb, x.a * y.b + x.b * y.a + bb)


def golden_conj(x: GoldenInt) -> GoldenInt:
    """Galois conjugation sqrt5 -> -sqrt5, i.e. phi -> 1 - phi."""
    return GoldenInt(x.a + x.b, -x.b)


def phi_power(k: int) -> GoldenInt:
    base = PHI if k >= 0 else PHI_INV
    result = ONE
    for _ in range(abs(k)):
        result = result * base
    return result


@dataclass(frozen=True)
class GoldenRational:
    num: GoldenInt
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("GoldenRational with zero denominator")
        sign = -1 if self.den < 0 else 1
        g = gcd(gcd(self.num.a, self.num.b), self.den) or 1
        object.__setattr__(self, "num", self.num.divide(g) * sign)
        object.__setattr__(self, "den", abs(self.den) // g)

    def __add__(self, other):
        other = _as_rational(other)
        return GoldenRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_rational(other))

    def __rsub__(self, other):
        return _as_rational(other) + (-self)

    def __neg__(self):
        return GoldenRational(-self.num, self.den)

    def __mul__(self, other):
        other = _as_rational(other)
        return GoldenRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return self.den == 1

    def to_json(self):
        return [self.num.to_json(), self.den]

    def __str__(self):
        return str(self.num) if self.den == 1 else f"({self.num})/{self.den}"


def _as_rational(x) -> GoldenRational:
    if isinstance(x, GoldenRational):
        return x
    return GoldenRational(_lift(x), 1)


@dataclass(frozen=True)
class ReductionMap:
    """Norm reduction a + b*sqrt(n) -> a + b*m with explicit conventions.

    `scale` multiplies every vector before splitting and `multiplier` scales
    the resulting rational form; each embedding fixes both and certifies the
    result by lattice invariants.
    """

    n: Fraction
    m: Fraction
    scale: GoldenRational = field(default_factory=lambda: GoldenRational(ONE))
    multiplier: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "n", Fraction(self.n))
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "multiplier", Fraction(self.multiplier))
        if self.n <= 0:
            raise ReductionError(f"n must be positive, got {self.n}")

    def is_definite(self) -> bool:
        return self.m * self.m < self.n

    def witness_norm(self) -> Fraction:
        """Reduced norm of the scalar (x, y) = (-m, 1)."""
        return self.n - self.m * self.m

    def validate(self):
        if not self.is_definite():
            raise ReductionError(f"|m| = {abs(self.m)} is not below sqrt({self.n}); the reduced form is indefinite")

    @property
    def slot_factor(self) -> Fraction:
        root = _rational_sqrt(self.n - self.m * self.m)
        return root if root is not None else Fraction(1)

    @property
    def slot_weight(self) -> Fraction:
        rest = self.n - self.m * self.m
        return Fraction(1) if _rational_sqrt(rest) is not None else rest

    @property
    def weights(self) -> tuple[Fraction, Fraction]:
        return Fraction(1), self.slot_weight

    def reduce_scalar(self, pair: tuple[Fraction, Fraction]) -> Fraction:
        return reduce_scalar(pair, self)

    def split_coordinate(self, pair: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
        return split_coordinate(pair, self)

    def split_vector(self, vector: Sequence[GoldenInt]) -> tuple[Fraction, ...]:
        """Scale, convert each coordinate to sqrt5-form and split it."""
        if self.n != 5:
            raise ReductionError("golden vectors only split under n = 5")
        out = []
        for c in vector:
            scaled = self.scale * GoldenRational(_lift(c))
            x, y = scaled.num.sqrt5_form()
            first, second = split_coordinate((x / scaled.den, y / scaled.den), self)
            out.extend((first, second))
        return tuple(out)

    def form(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """The rational bilinear form on split vectors."""
        first, second = self.weights
        total = Fraction(0)
        for k in range(0, len(u), 2):
            total += first * u[k] * v[k] + second * u[k + 1] * v[k + 1]
        return self.multiplier * total

    def reduced_norm(self, vector: Sequence[GoldenInt]) -> Fraction:
        split = self.split_vector(vector)
        return self.form(split, split)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q <= 0:
        return None
    p, r = isqrt(q.numerator), isqrt(q.denominator)
    if p * p == q.numerator and r * r == q.denominator:
        return Fraction(p, r)
    return None


def reduce_scalar(pair: tuple[Fraction, Fraction], rmap: ReductionMap) -> Fraction:
    """x + y*sqrt(n) -> x + y*m."""
    rmap.validate()
    x, y = pair
    return Fraction(x) + Fraction(y) * rmap.m


def split_coordinate(pair: tuple[Fraction, Fraction], rmap: ReductionMap) -> tuple[Fraction, Fraction]:
    """x + y*sqrt(n) -> (x + m*y, k*y), second slot weighted by rmap.slot_weight."""
    rmap.validate()
    x, y = Fraction(pair[0]), Fraction(pair[1])
    return x + rmap.m * y, rmap.slot_factor * y


def golden_det(matrix: Sequence[Sequence[GoldenInt]]) -> GoldenInt:
    n = len(matrix)
    total = ZERO
    for perm in permutations(range(n)):
        term = ONE
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
            if not term:
                break
        if term:
            total = total + term * Permutation(list(perm)).signature()
    return total


def golden_adjugate(matrix: Sequence[Sequence[GoldenInt]]) -> list[list[GoldenInt]]:
    n = len(matrix)
    adj = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[matrix[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cofactor = golden_det(minor) * (-1 if (i + j) % 2 else 1)
            adj[j][i] = cofactor
    return adj


if __name__ == "__main__":
    print(f"phi^2 = {PHI * PHI}")
    print(f"phi * phi^-1 = {PHI * PHI_INV}")
    example = ReductionMap(5, -1)
    print(f"6 + 2*sqrt5 under m = -1 -> {reduce_scalar((Fraction(6), Fraction(2)), example)}")
