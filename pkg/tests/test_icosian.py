import pytest

from golden import PHI, PHI_INV, GoldenInt
from icosian import (
    ONE_I,
    IcosianError,
    binary_tetrahedral,
    cayley_table,
    element_order,
    find_order5,
    generated_subgroup,
    icosian_mul,
    index_of,
    inverse,
    is_latin_square,
    natural_ip,
    natural_norm,
    order_census,
    power,
    shape_counts,
    vec,
)


def test_vertex_census(vertices):
    assert len(vertices) == 120
    assert len(set(vertices)) == 120
    assert shape_counts(vertices) == {"(±2,0,0,0)^S": 8, "(±1,±1,±1,±1)": 16, "(0,±1,±φ,±φ⁻¹)^A": 96}
    assert all(natural_norm(v) == GoldenInt(4, 0) for v in vertices)
    assert all(-v in set(vertices) for v in vertices)


def test_vertices_are_key_sorted(vertices):
    keys = [v.key() for v in vertices]
    assert keys == sorted(keys)


def test_identity_and_inverse(vertices):
    for v in vertices:
        assert icosian_mul(ONE_I, v) == v
        assert icosian_mul(v, ONE_I) == v
        assert icosian_mul(v, inverse(v)) == ONE_I
        assert power(v, -1) == inverse(v)


def test_cayley_table_is_a_group_table():
    assert is_latin_square(cayley_table())


def test_orders():
    assert element_order(ONE_I) == 1
    assert element_order(-ONE_I) == 2
    assert order_census() == {1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24}


def test_least_order_five_vertex():
    g = find_order5()
    assert g == vec((-1, 1), -1, 0, (0, -1))
    assert element_order(g) == 5
    assert power(g, 5) == ONE_I
    assert index_of(g) not in binary_tetrahedral()


def test_binary_tetrahedral_subgroup():
    tetrahedral = binary_tetrahedral()
    assert len(tetrahedral) == 24
    assert generated_subgroup(tetrahedral) == tetrahedral


def test_cosets_of_binary_tetrahedral_partition_the_vertices(vertices):
    g = find_order5()
    tetrahedral = [vertices[i] for i in binary_tetrahedral()]
    cosets = [{index_of(icosian_mul(power(g, i), x)) for x in tetrahedral} for i in range(5)]
    assert set().union(*cosets) == set(range(120))
    assert sum(len(c) for c in cosets) == 120


def test_multiplication_preserves_inner_products(vertices):
    sample = vertices[::13]
    for a in (find_order5(), vertices[7]):
        for u in sample:
            for v in sample:
                assert natural_ip(icosian_mul(a, u), icosian_mul(a, v)) == natural_ip(u, v)
                assert natural_ip(icosian_mul(u, a), icosian_mul(v, a)) == natural_ip(u, v)


def test_off_scale_product_is_rejected():
    with pytest.raises(IcosianError):
        icosian_mul(vec(1, 0, 0, 0), vec(1, 0, 0, 0))
    with pytest.raises(IcosianError):
        index_of(vec(1, 0, 0, 0))


def test_order_five_real_parts(vertices):
    assert {v.c0 for v in vertices if element_order(v) == 5} == {PHI_INV, -PHI}
