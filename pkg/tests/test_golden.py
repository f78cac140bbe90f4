import random
from fractions import Fraction

import pytest

from embed import CONJUGATE, EPSILON, EXAMPLE2, EXAMPLE3
from golden import (
    ONE,
    PHI,
    PHI_INV,
    PHI_INV2,
    ZERO,
    GoldenInt,
    GoldenRational,
    ReductionError,
    ReductionMap,
    golden_adjugate,
    golden_det,
    phi_power,
    reduce_scalar,
)
from icosian import natural_ip


def test_phi_squared_is_phi_plus_one():
    assert PHI * PHI == PHI + ONE
    assert PHI * PHI_INV == ONE
    assert PHI_INV * PHI_INV == PHI_INV2


def test_conjugation_and_norm():
    assert PHI.conj() == GoldenInt(1, -1)
    assert PHI.norm() == -1
    assert PHI * PHI.conj() == GoldenInt(-1, 0)
    assert GoldenInt(3, 2).conj().conj() == GoldenInt(3, 2)


@pytest.mark.parametrize(
    "x, sign",
    [
        (ZERO, 0),
        (PHI, 1),
        (PHI_INV, 1),
        (PHI_INV2, 1),
        (GoldenInt(1, -1), -1),
        (GoldenInt(-2, 1), -1),
        (GoldenInt(1, 1), 1),
        (GoldenInt(5, -3), 1),
        (GoldenInt(5, -4), -1),
    ],
)
def test_sign(x, sign):
    assert x.sign() == sign


def test_units_and_division():
    assert PHI.inverse() == PHI_INV
    assert GoldenInt(1, 1).is_unit()
    assert not GoldenInt(2, 1).is_unit()
    with pytest.raises(ReductionError):
        GoldenInt(2, 0).inverse()
    assert GoldenInt(4, 6).halve() == GoldenInt(2, 3)
    with pytest.raises(ReductionError):
        GoldenInt(1, 2).halve()


def test_phi_power():
    assert phi_power(0) == ONE
    assert phi_power(3) == GoldenInt(1, 2)
    assert phi_power(-2) == PHI_INV2
    assert phi_power(4) * phi_power(-4) == ONE


def test_sqrt5_form():
    assert PHI.sqrt5_form() == (Fraction(1, 2), Fraction(1, 2))
    assert GoldenInt(3, 0).sqrt5_form() == (Fraction(3), Fraction(0))


def test_golden_rational_normalizes():
    assert GoldenRational(GoldenInt(2, 4), 6) == GoldenRational(GoldenInt(1, 2), 3)
    assert GoldenRational(GoldenInt(1, 1), -2) == GoldenRational(GoldenInt(-1, -1), 2)
    assert (GoldenRational(ONE, 2) + GoldenRational(ONE, 2)).is_integral()
    with pytest.raises(ZeroDivisionError):
        GoldenRational(ONE, 0)


def test_reduce_scalar():
    assert reduce_scalar((Fraction(6), Fraction(2)), ReductionMap(5, -1)) == 4
    assert reduce_scalar((Fraction(6), Fraction(2)), ReductionMap(5, 2)) == 10


def test_indefinite_map_is_rejected():
    rmap = ReductionMap(5, 3)
    assert not rmap.is_definite()
    assert rmap.witness_norm() == -4
    with pytest.raises(ReductionError):
        rmap.validate()
    with pytest.raises(ReductionError):
        reduce_scalar((Fraction(1), Fraction(1)), rmap)


@pytest.mark.parametrize("m", [-2, -1, 0, 1, 2])
def test_maps_below_sqrt5_are_definite(m):
    rmap = ReductionMap(5, m)
    assert rmap.is_definite()
    assert rmap.witness_norm() > 0
    rmap.validate()
    assert not ReductionMap(5, 3 if m >= 0 else -3).is_definite()


def test_epsilon_splits_to_golden_pair():
    assert EPSILON.split_vector([GoldenInt(3, -2)]) == (3, -2)
    assert EPSILON.split_vector([PHI * GoldenInt(3, -2)]) == (-2, 1)
    assert CONJUGATE.split_vector([GoldenInt(3, -2)]) == (1, -2)
    assert EXAMPLE3.split_vector([PHI]) == (Fraction(-1, 2), Fraction(1, 2))


@pytest.mark.parametrize(
    "rmap",
    [EPSILON, CONJUGATE, EXAMPLE2, EXAMPLE3, ReductionMap(5, 2)],
    ids=["m=-1", "m=+1", "m=0", "m=-2", "m=+2"],
)
def test_split_form_reproduces_reduced_product(rmap, vertices):
    split = [rmap.split_vector(v) for v in vertices]
    for i, u in enumerate(vertices):
        for j, v in enumerate(vertices):
            x, y = natural_ip(u, v).sqrt5_form()
            expected = rmap.multiplier * reduce_scalar((x, y), rmap)
            assert rmap.form(split[i], split[j]) == expected


def test_weights():
    assert EPSILON.weights == (1, 1)
    assert EXAMPLE2.weights == (1, 5)
    assert EXAMPLE3.weights == (1, 1)


def test_det_and_adjugate():
    m = [[PHI, ONE, ZERO], [ONE, PHI, ONE], [ZERO, ONE, PHI]]
    det = golden_det(m)
    adj = golden_adjugate(m)
    for i in range(3):
        for j in range(3):
            entry = ZERO
            for k in range(3):
                entry = entry + m[i][k] * adj[k][j]
            assert entry == (det if i == j else ZERO)
    assert golden_det([[ONE, ZERO], [ZERO, ONE]]) == ONE


def _random_golden(rng):
    return GoldenInt(rng.randint(-50, 50), rng.randint(-50, 50))


def test_ring_axioms():
    rng = random.Random(2024)
    for _ in range(200):
        x, y, z = (_random_golden(rng) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + ZERO == x and x * ONE == x
        assert x - x == ZERO
        assert (x * y).norm() == x.norm() * y.norm()


def test_conjugation_is_a_ring_automorphism():
    rng = random.Random(7)
    for _ in range(200):
        x, y = _random_golden(rng), _random_golden(rng)
        assert (x + y).conj() == x.conj() + y.conj()
        assert (x * y).conj() == x.conj() * y.conj()
        assert x.conj().conj() == x
        assert x * x.conj() == GoldenInt(x.norm(), 0)


def test_mixed_golden_arithmetic_promotes_to_rational():
    half = GoldenRational(ONE, 2)
    assert PHI * half == GoldenRational(PHI, 2)
    assert PHI + half == GoldenRational(GoldenInt(1, 2), 2)
    assert ONE - half == half
    assert 3 - PHI == GoldenInt(3, -1)
    with pytest.raises(TypeError):
        PHI + "phi"
    with pytest.raises(TypeError):
        PHI * 0.5
