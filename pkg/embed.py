"""
embed.py
--------
Integer lattices from golden ones. A ReductionMap splits every Z[phi]
coordinate of a 4-vector into two rational coordinates; the images are
certified as lattices by exact invariants (rank, integral and even Gram,
determinant, root count) with short vectors enumerated by Fincke-Pohst
over an exact LDL^T decomposition.

Includes:
- embed_set(): images of a golden vector set under a map.
- certify_e8(): Hermite-normal-form basis plus the E8 certificate.
- golden_basis() / lattice_L(): the self-dual Z[phi]-basis of the 600-cell
  and the rootless lattice it yields under sqrt5 -> 0.
- decompose_norm4_shell(): the 2160 norm-4 vectors of E8 as five scaled
  copies of the 600-cell, the 120-cell and the rectified 600-cell.

Usage:
- Print the certificates: `python embed.py`
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cache, cached_property
from itertools import combinations
from math import ceil, floor, isqrt, lcm
from typing import Iterable, Sequence

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from golden import (
    ONE,
    PHI,
    GoldenInt,
    GoldenRational,
    ReductionMap,
    golden_adjugate,
    golden_det,
    phi_power,
    reduce_scalar,
)
from icosian import IcosianVec, generate_vertices, natural_ip, natural_norm
from polytopes import build_120cell, pairs, rectified_600cell

logger = logging.getLogger(__name__)

EPSILON = ReductionMap(5, -1, multiplier=Fraction(1, 2))
CONJUGATE = ReductionMap(5, 1, multiplier=Fraction(1, 2))
EXAMPLE2 = ReductionMap(5, 0)
EXAMPLE3 = ReductionMap(5, -2)

E8_ROOTS = 240
E8_NORM4 = 2160


class EmbeddingError(ValueError):
    """Non-integral norms or a non-injective embedding."""


class CertificationError(RuntimeError):
    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class Source(str, Enum):
    H = "H"
    PHI_H = "phiH"
    PHI_INV_H = "phi^-1 H"
    CELL120 = "120-cell"
    RECTIFIED = "rectified 600-cell"
    OTHER = "other"


@dataclass(frozen=True)
class EmbeddedVec:
    coords: tuple[Fraction, ...]
    source: Source = Source.OTHER

    def to_json(self):
        return {"coords": [str(c) for c in self.coords], "source": self.source.value}


def reduce_golden(x: GoldenInt | GoldenRational, rmap: ReductionMap) -> Fraction:
    """multiplier * reduce_scalar(x): the value the split form must reproduce."""
    if isinstance(x, GoldenInt):
        x = GoldenRational(x)
    s, t = x.num.sqrt5_form()
    return rmap.multiplier * reduce_scalar((s / x.den, t / x.den), rmap)


def embed_set(
    vectors: Iterable[Sequence[GoldenInt]],
    rmap: ReductionMap,
    source: Source = Source.OTHER,
) -> tuple[EmbeddedVec, ...]:
    rmap.validate()
    images = []
    for v in vectors:
        split = rmap.split_vector(v)
        norm = rmap.form(split, split)
        expected = reduce_golden(rmap.scale * rmap.scale * GoldenRational(natural_norm(v)), rmap)
        if norm != expected:
            raise EmbeddingError(f"split norm {norm} of {v} disagrees with the reduced norm {expected}")
        if norm.denominator != 1:
            raise EmbeddingError(f"{v} has non-integral norm {norm} under m = {rmap.m}")
        images.append(EmbeddedVec(split, source))
    if len({e.coords for e in images}) != len(images):
        raise EmbeddingError(f"m = {rmap.m} is not injective on {source.value}")
    logger.debug("embedded %d vectors from %s under m = %s", len(images), source.value, rmap.m)
    return tuple(images)


def gram_values(
    vectors: Sequence[Sequence[Fraction]], rmap: ReductionMap
) -> list[list[Fraction]]:
    """All pairwise form values, computed on a common integer scale."""
    den = lcm(*(c.denominator for v in vectors for c in v))
    ints = [[int(c * den) for c in v] for v in vectors]
    first, second = rmap.weights
    scale = rmap.multiplier / (den * den)
    out = []
    for u in ints:
        row = []
        for v in ints:
            s1 = sum(u[k] * v[k] for k in range(0, len(u), 2))
            s2 = sum(u[k] * v[k] for k in range(1, len(u), 2))
            row.append(scale * (first * s1 + second * s2))
        out.append(row)
    return out


# Exact short-vector enumeration


def ldl(gram: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise CertificationError("definite", f"pivot {i} is {q[i][i]}")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for m in range(k, n):
                q[k][m] -= q[k][i] * q[i][m]
    return q


def fincke_pohst(gram: Sequence[Sequence[int]], bound: int) -> list[tuple[int, ...]]:
    """Every coefficient vector x (zero included) with x G x^T <= bound."""
    q = ldl(gram)
    n = len(q)
    x = [0] * n
    out: list[tuple[int, ...]] = []

    def search(i: int, remaining: Fraction):
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        reach = isqrt(floor(remaining / q[i][i])) + 1
        for xi in range(floor(center - reach), ceil(center + reach) + 1):
            used = q[i][i] * (xi - center) ** 2
            if used > remaining:
                continue
            x[i] = xi
            if i == 0:
                out.append(tuple(x))
            else:
                search(i - 1, remaining - used)
        x[i] = 0

    search(n - 1, Fraction(bound))
    return sorted(out)


@dataclass(frozen=True)
class IntLattice:
    """basis[k] is an ambient vector in the split frame of rmap; gram is integral."""

    basis: tuple[tuple[Fraction, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    rmap: ReductionMap = field(compare=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def determinant(self) -> int:
        return int(Matrix(self.gram).det())

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def norm(self, coeffs: Sequence[int]) -> int:
        g = self.gram
        return sum(coeffs[i] * g[i][j] * coeffs[j] for i in range(self.rank) for j in range(self.rank))

    def ip(self, x: Sequence[int], y: Sequence[int]) -> int:
        g = self.gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def short_vectors(self, bound: int) -> list[tuple[int, ...]]:
        return [x for x in fincke_pohst(self.gram, bound) if any(x)]

    def shell(self, norm: int) -> list[tuple[int, ...]]:
        return [x for x in self.short_vectors(norm) if self.norm(x) == norm]

    def to_ambient(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * len(self.basis[0])
        for c, b in zip(coeffs, self.basis):
            if c:
                for k, x in enumerate(b):
                    out[k] += c * x
        return tuple(out)

    @cached_property
    def _inverse(self) -> Matrix:
        return Matrix([[c for c in b] for b in self.basis]).T.inv()

    def coefficients(self, ambient: Sequence[Fraction]) -> tuple[int, ...]:
        solved = self._inverse * Matrix(list(ambient))
        if any(not c.is_integer for c in solved):
            raise EmbeddingError(f"{tuple(str(a) for a in ambient)} is not in the lattice")
        return tuple(int(c) for c in solved)

    def to_json(self):
        return {
            "basis": [[str(c) for c in b] for b in self.basis],
            "gram": [list(row) for row in self.gram],
            "determinant": self.determinant(),
            "map": {"n": str(self.rmap.n), "m": str(self.rmap.m), "multiplier": str(self.rmap.multiplier)},
        }


def lattice_from_vectors(vectors: Sequence[Sequence[Fraction]], rmap: ReductionMap) -> IntLattice:
    """Z-basis of the span from the Hermite normal form of the column matrix."""
    den = lcm(*(Fraction(c).denominator for v in vectors for c in v))
    columns = Matrix([[int(Fraction(c) * den) for c in v] for v in vectors]).T
    hnf = hermite_normal_form(columns)
    basis = [
        tuple(Fraction(int(hnf[r, j]), den) for r in range(hnf.rows))
        for j in range(hnf.cols)
        if any(hnf[r, j] for r in range(hnf.rows))
    ]
    if len(basis) != columns.rows:
        raise CertificationError("rank", f"span has rank {len(basis)}, expected {columns.rows}")
    values = gram_values(basis, rmap)
    if any(v.denominator != 1 for row in values for v in row):
        raise CertificationError("integral", "Gram matrix has non-integral entries")
    return IntLattice(tuple(basis), tuple(tuple(int(v) for v in row) for row in values), rmap)


def certify_e8(vectors: Sequence[EmbeddedVec], rmap: ReductionMap) -> IntLattice:
    if len(vectors) < 8:
        raise CertificationError("rank", f"only {len(vectors)} vectors")
    lattice = lattice_from_vectors([e.coords for e in vectors], rmap)
    if not lattice.is_even():
        raise CertificationError("even", "Gram diagonal has an odd entry")
    det = lattice.determinant()
    if abs(det) != 1:
        raise CertificationError("determinant", f"det = {det}")
    roots = len(lattice.shell(2))
    if roots != E8_ROOTS:
        raise CertificationError("roots", f"{roots} vectors of norm 2")
    logger.info("certified E8 under m = %s: even, det %d, %d roots", rmap.m, det, roots)
    return lattice


def scaled(vectors: Iterable[IcosianVec], k: int) -> list[IcosianVec]:
    unit = phi_power(k)
    return [v.scaled(unit) for v in vectors]


@cache
def e8_lattice() -> IntLattice:
    """E8 as the span of epsilon(H)."""
    return certify_e8(embed_set(generate_vertices(), EPSILON, Source.H), EPSILON)


def contains_doubled_integers(lattice: IntLattice) -> bool:
    n = len(lattice.basis[0])
    for k in range(n):
        try:
            lattice.coefficients(tuple(Fraction(2 if j == k else 0) for j in range(n)))
        except EmbeddingError:
            return False
    return True


@dataclass(frozen=True)
class Example1Report:
    determinant: int
    roots: int
    union_is_roots: bool
    orthogonal_counterparts: bool
    conjugate_determinant: int
    conjugate_roots: int
    conjugate_union_is_roots: bool
    conjugation_isometry: bool
    doubled_integers: bool
    indefinite_witness: Fraction

    def to_json(self):
        out = dict(self.__dict__)
        out["indefinite_witness"] = str(self.indefinite_witness)
        return out


@cache
def example1() -> Example1Report:
    """H and phiH under m = -1, H and phi^-1 H under m = +1."""
    vertices = generate_vertices()
    e8 = e8_lattice()
    h = embed_set(vertices, EPSILON, Source.H)
    phi_h = embed_set(scaled(vertices, 1), EPSILON, Source.PHI_H)
    roots = {e8.to_ambient(x) for x in e8.shell(2)}
    union = {e.coords for e in h + phi_h}
    orthogonal = all(EPSILON.form(a.coords, b.coords) == 0 for a, b in zip(h, phi_h))

    conj_h = embed_set(vertices, CONJUGATE, Source.H)
    conj_inv = embed_set(scaled(vertices, -1), CONJUGATE, Source.PHI_INV_H)
    conj_lattice = certify_e8(conj_h + conj_inv, CONJUGATE)
    conj_roots = {conj_lattice.to_ambient(x) for x in conj_lattice.shell(2)}

    # m = +1 on x equals m = -1 on conj(x) with every second slot negated
    isometry = True
    for v in list(vertices) + scaled(vertices, -1):
        plus = CONJUGATE.split_vector(v)
        minus = EPSILON.split_vector([c.conj() for c in v])
        if any(plus[k] != (minus[k] if k % 2 == 0 else -minus[k]) for k in range(8)):
            isometry = False
            break

    return Example1Report(
        determinant=e8.determinant(),
        roots=len(roots),
        union_is_roots=union == roots,
        orthogonal_counterparts=orthogonal,
        conjugate_determinant=conj_lattice.determinant(),
        conjugate_roots=len(conj_roots),
        conjugate_union_is_roots={e.coords for e in conj_h + conj_inv} == conj_roots,
        conjugation_isometry=isometry,
        doubled_integers=contains_doubled_integers(e8),
        indefinite_witness=ReductionMap(5, 3).witness_norm(),
    )


# Example 2: a self-dual golden basis and the rootless lattice L


@dataclass(frozen=True)
class GoldenBasis:
    indices: tuple[int, ...]
    vectors: tuple[IcosianVec, ...]
    gram: tuple[tuple[GoldenInt, ...], ...]
    dual: tuple[IcosianVec, ...]
    coordinates: tuple[tuple[GoldenInt, ...], ...]

    def determinant(self) -> GoldenInt:
        return golden_det(self.gram)


def _standard_ip(u: Sequence[GoldenInt], v: Sequence[GoldenInt]) -> GoldenInt:
    return natural_ip(u, v).halve()


@cache
def golden_basis() -> GoldenBasis:
    """First 4-subset of pair representatives whose Gram determinant is a unit."""
    vertices = generate_vertices()
    reps = [rep for rep, _ in pairs().members]
    for subset in combinations(reps, 4):
        vectors = [vertices[i] for i in subset]
        gram = [[_standard_ip(u, v) for v in vectors] for u in vectors]
        det = golden_det(gram)
        if not det.is_unit():
            continue
        inv_det = det.inverse()
        adj = golden_adjugate(gram)
        dual = []
        for j in range(4):
            w = IcosianVec(*(GoldenInt() for _ in range(4)))
            for k in range(4):
                w = w.plus(vectors[k].scaled(adj[j][k] * inv_det))
            dual.append(w)
        coordinates = []
        for x in vertices:
            row = []
            for w in dual:
                value = natural_ip(x, w)
                if value.a % 2 or value.b % 2:
                    raise EmbeddingError(f"{x} is not a Z[phi]-combination of the basis {subset}")
                row.append(value.halve())
            coordinates.append(tuple(row))
        logger.info("golden basis at pairs %s, Gram determinant %s", subset, det)
        return GoldenBasis(tuple(subset), tuple(vectors), tuple(tuple(r) for r in gram), tuple(dual), tuple(coordinates))
    raise EmbeddingError("no four vertices span the 600-cell over Z[phi]")


@dataclass(frozen=True)
class LatticeLReport:
    lattice: IntLattice
    census: dict[int, int]
    pairing_block: tuple[tuple[Fraction, ...], ...]
    dual_pairs_to_delta: bool
    determinant: int
    even: bool
    rootless: bool

    def to_json(self):
        return {
            "lattice": self.lattice.to_json(),
            "census": {str(k): v for k, v in sorted(self.census.items())},
            "pairing_block": [[str(c) for c in row] for row in self.pairing_block],
            "dual_pairs_to_delta": self.dual_pairs_to_delta,
            "determinant": self.determinant,
            "even": self.even,
            "rootless": self.rootless,
        }


DUAL_SCALARS = (
    GoldenRational(GoldenInt(3, -1), 5),
    GoldenRational(GoldenInt(-1, 2), 5),
)


@cache
def lattice_L() -> LatticeLReport:
    basis = golden_basis()
    generators = list(basis.vectors) + scaled(basis.vectors, 1)
    images = embed_set(generators, EXAMPLE2)
    lattice = lattice_from_vectors([e.coords for e in images], EXAMPLE2)

    # |(v)_L . (u)_L| over the 60 pair representatives u, the same for every v
    vertices = generate_vertices()
    reps = [vertices[rep] for rep, _ in pairs().members]
    censuses = {
        frozenset(Counter(int(abs(reduce_golden(natural_ip(v, u), EXAMPLE2))) for u in reps).items())
        for v in reps
    }
    if len(censuses) != 1:
        raise EmbeddingError(f"lattice L census depends on the vector: {censuses}")
    census = dict(next(iter(censuses)))

    block = tuple(
        tuple(reduce_golden(natural_ip(basis.vectors[0].scaled(a), basis.dual[0].scaled(b)), EXAMPLE2) for b in (ONE, PHI))
        for a in (ONE, PHI)
    )

    delta = True
    for i, v in enumerate(basis.vectors):
        for j, w in enumerate(basis.dual):
            for a, left in enumerate((ONE, PHI)):
                for b, scalar in enumerate(DUAL_SCALARS):
                    value = reduce_golden(GoldenRational(natural_ip(v.scaled(left), w)) * scalar, EXAMPLE2)
                    if value != (1 if i == j and a == b else 0):
                        delta = False

    det = lattice.determinant()
    report = LatticeLReport(
        lattice=lattice,
        census=dict(census),
        pairing_block=block,
        dual_pairs_to_delta=delta,
        determinant=det,
        even=lattice.is_even(),
        rootless=not lattice.shell(2),
    )
    logger.info("lattice L: det %d, census %s, rootless %s", det, dict(sorted(census.items())), report.rootless)
    return report


# Example 3: the norm-4 shell


@dataclass(frozen=True)
class ShellClass:
    q: int
    size: int
    source: Source
    k: int
    spectrum_matches: bool

    def to_json(self):
        return {"q": self.q, "size": self.size, "source": self.source.value, "k": self.k, "spectrum_matches": self.spectrum_matches}


@cache
def shell_sources() -> dict[Source, frozenset[IcosianVec]]:
    return {
        Source.H: frozenset(generate_vertices()),
        Source.CELL120: frozenset(build_120cell().vertices),
        Source.RECTIFIED: frozenset(rectified_600cell()),
    }


def spectrum(vectors: Iterable[IcosianVec]) -> dict[GoldenInt, int]:
    """Natural inner products from the key-least vector to every vector."""
    vectors = sorted(vectors, key=IcosianVec.key)
    return dict(Counter(natural_ip(vectors[0], v) for v in vectors))


def invert_epsilon(ambient: Sequence[Fraction]) -> IcosianVec:
    if any(Fraction(c).denominator != 1 for c in ambient):
        raise EmbeddingError("epsilon preimages need integral coordinates")
    return IcosianVec(*(GoldenInt(int(ambient[k]), int(ambient[k + 1])) for k in range(0, 8, 2)))


@cache
def decompose_norm4_shell() -> tuple[ShellClass, ...]:
    e8 = e8_lattice()
    shell = e8.shell(4)
    if len(shell) != E8_NORM4:
        raise CertificationError("shell", f"{len(shell)} vectors of norm 4")
    by_q: dict[int, set[IcosianVec]] = {}
    for x in shell:
        v = invert_epsilon(e8.to_ambient(x))
        norm = natural_norm(v)
        if norm.a != 8:
            raise EmbeddingError(f"{v} has natural norm {norm}, expected 8 + q*phi")
        by_q.setdefault(norm.b, set()).add(v)

    sources = shell_sources()
    classes = []
    for q in sorted(by_q):
        members = frozenset(by_q[q])
        match = None
        for k in range(-2, 3):
            for source, base in sources.items():
                if len(base) == len(members) and frozenset(scaled(base, k)) == members:
                    match = (source, k)
        if match is None:
            raise EmbeddingError(f"class q = {q} ({len(members)} vectors) matches no scaled source")
        source, k = match
        unit2 = phi_power(2 * k)
        expected = Counter()
        for ip, count in spectrum(sources[source]).items():
            expected[ip * unit2] += count
        classes.append(ShellClass(q, len(members), source, k, spectrum(members) == dict(expected)))
        logger.info("norm-4 class q = %d: %d vectors = phi^%d * %s", q, len(members), k, source.value)
    return tuple(classes)


@cache
def rectified_embedding() -> tuple[EmbeddedVec, ...]:
    images = embed_set(rectified_600cell(), EXAMPLE3, Source.RECTIFIED)
    values = gram_values([e.coords for e in images], EXAMPLE3)
    if any(v.denominator != 1 for row in values for v in row):
        raise EmbeddingError("rectified 600-cell has a non-integral inner product under m = -2")
    return images


if __name__ == "__main__":
    print(example1())
    report = lattice_L()
    print(f"L: det {report.determinant}, census {report.census}, rootless {report.rootless}")
    for cls in decompose_norm4_shell():
        print(cls)
