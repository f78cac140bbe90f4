from fractions import Fraction

import pytest

from embed import (
    E8_NORM4,
    E8_ROOTS,
    EPSILON,
    EXAMPLE3,
    CertificationError,
    EmbeddedVec,
    EmbeddingError,
    Source,
    certify_e8,
    decompose_norm4_shell,
    embed_set,
    example1,
    fincke_pohst,
    golden_basis,
    invert_epsilon,
    lattice_from_vectors,
    lattice_L,
    ldl,
    rectified_embedding,
)
from golden import GoldenInt, ReductionError, ReductionMap
from icosian import IcosianVec


def test_fincke_pohst_on_the_square_lattice():
    assert fincke_pohst([[1, 0], [0, 1]], 1) == [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
    assert len(fincke_pohst([[2, 1], [1, 2]], 2)) == 7


@pytest.mark.parametrize("gram", [[[0]], [[1, 2], [2, 1]]])
def test_ldl_rejects_indefinite_forms(gram):
    with pytest.raises(CertificationError) as info:
        ldl(gram)
    assert info.value.invariant == "definite"


def test_lattice_from_vectors_checks_rank():
    with pytest.raises(CertificationError) as info:
        lattice_from_vectors([(Fraction(1), Fraction(0)), (Fraction(2), Fraction(0))], EPSILON)
    assert info.value.invariant == "rank"


def test_certify_needs_eight_vectors():
    with pytest.raises(CertificationError) as info:
        certify_e8([EmbeddedVec((Fraction(1),) * 8)], EPSILON)
    assert info.value.invariant == "rank"


def test_embed_set_rejects_indefinite_map(vertices):
    with pytest.raises(ReductionError):
        embed_set(vertices[:3], ReductionMap(5, 3))


def test_e8_certificate(e8):
    assert e8.rank == 8
    assert e8.is_even()
    assert e8.determinant() == 1
    assert len(e8.shell(2)) == E8_ROOTS


def test_coefficients_invert_to_ambient(e8):
    for x in e8.shell(2)[:20]:
        assert e8.coefficients(e8.to_ambient(x)) == x
    assert "_inverse" in vars(e8)
    with pytest.raises(EmbeddingError):
        e8.coefficients([Fraction(1, 3)] + [Fraction(0)] * 7)


def test_epsilon_image_of_h_is_the_roots(vertices, e8):
    images = embed_set(vertices, EPSILON, Source.H)
    roots = {e8.to_ambient(x) for x in e8.shell(2)}
    assert {e.coords for e in images} <= roots
    for e in images:
        assert EPSILON.form(e.coords, e.coords) == 2
        assert invert_epsilon(e.coords) in set(vertices)


def test_example1():
    report = example1()
    assert report.determinant == report.conjugate_determinant == 1
    assert report.roots == report.conjugate_roots == 240
    assert report.union_is_roots
    assert report.conjugate_union_is_roots
    assert report.orthogonal_counterparts
    assert report.conjugation_isometry
    assert report.doubled_integers
    assert report.indefinite_witness == -4
    assert report.to_json()["indefinite_witness"] == "-4"


def test_golden_basis_is_unimodular(vertices):
    basis = golden_basis()
    assert basis.determinant().is_unit()
    for x, coords in list(zip(vertices, basis.coordinates))[::11]:
        total = IcosianVec(*(GoldenInt() for _ in range(4)))
        for c, v in zip(coords, basis.vectors):
            total = total.plus(v.scaled(c))
        assert total == x


def test_lattice_L():
    report = lattice_L()
    assert report.census == {4: 1, 2: 20, 1: 24, 0: 15}
    assert report.pairing_block == ((2, 1), (1, 3))
    assert report.dual_pairs_to_delta
    assert report.determinant == 625
    assert report.even
    assert report.rootless


def test_rectified_embedding():
    images = rectified_embedding()
    assert len(images) == 720
    assert all(e.source is Source.RECTIFIED for e in images)
    assert all(EXAMPLE3.form(e.coords, e.coords).denominator == 1 for e in images)


def test_invert_epsilon_rejects_fractions():
    with pytest.raises(ValueError):
        invert_epsilon([Fraction(1, 2)] + [Fraction(0)] * 7)


@pytest.mark.slow
def test_norm4_shell_decomposition():
    classes = decompose_norm4_shell()
    assert sum(c.size for c in classes) == E8_NORM4
    assert [(c.q, c.size, c.source, c.k) for c in classes] == [
        (-4, 120, Source.H, -1),
        (0, 600, Source.CELL120, 0),
        (4, 720, Source.RECTIFIED, -1),
        (8, 600, Source.CELL120, 1),
        (12, 120, Source.H, 2),
    ]
    assert all(c.spectrum_matches for c in classes)
