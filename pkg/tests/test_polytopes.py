from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from golden import ONE, PHI, PHI_INV, ZERO, GoldenInt
from icosian import ONE_I, binary_tetrahedral, find_order5, index_of, natural_norm
from polytopes import (
    EXPECTED_RECTIFIED_SHAPES,
    RECTIFIED_NORM,
    TWO,
    Cell120Label,
    Duad,
    EnumerationError,
    Kind,
    SubPolytope,
    VertexLabel,
    build_120cell,
    decagon_neighbors,
    decagons_per_pair,
    disjoint_iff_row_or_column,
    disjointness_degrees,
    disjointness_graph,
    edges_per_decagon_count,
    enumerate_8cells,
    enumerate_16cells,
    enumerate_24cells,
    enumerate_decagons,
    enumerate_hexagons,
    enumerate_pentagons,
    enumerate_skeleton,
    find_all_partitions,
    hexagon_duads,
    inner_product_distribution,
    labels_json,
    orthogonal_pairs,
    pair_ip,
    prime_arrays,
    rectified_600cell,
    rectified_shape_census,
    scaled_600cell_spectrum,
    shared_duad_classes,
    sixteen_cells_in,
)


def test_inner_product_distribution():
    assert inner_product_distribution(index_of(ONE_I)) == {
        -TWO: 1,
        PHI: 12,
        -PHI: 12,
        PHI_INV: 12,
        -PHI_INV: 12,
        ONE: 20,
        -ONE: 20,
        ZERO: 30,
    }


def test_pairs(pair_data, vertices):
    assert len(pair_data.members) == 60
    for p, (i, j) in enumerate(pair_data.members):
        assert vertices[i] == -vertices[j]
        assert pair_data.pair_of[i] == pair_data.pair_of[j] == p
    assert pair_data.vertices(range(60)) == frozenset(range(120))


def test_skeleton_counts():
    assert enumerate_skeleton().counts() == (720, 1200, 600)


def test_inscribed_cells():
    assert len(orthogonal_pairs()) == 450
    assert len(enumerate_16cells()) == 75
    assert len(enumerate_24cells()) == 25
    assert len(enumerate_8cells()) == 75
    for cell in enumerate_24cells():
        inner = sixteen_cells_in(cell)
        assert len(inner) == 3
        assert set().union(*(set(c.members) for c in inner)) == set(cell.members)


def test_binary_tetrahedral_is_a_24cell(pair_data):
    members = frozenset(pair_data.pair_of[i] for i in binary_tetrahedral())
    assert members in {frozenset(c.members) for c in enumerate_24cells()}


def test_array_is_25_distinct_cells(array):
    assert array.g == find_order5()
    assert sorted(c for row in array.grid for c in row) == list(range(25))
    assert array.position(array.grid[2][3]) == (2, 3)


def test_rows_and_columns_partition_the_pairs(array):
    cells = enumerate_24cells()
    for part in array.partitions():
        covered = [p for c in part for p in cells[c].members]
        assert sorted(covered) == list(range(60))


def test_exhaustive_partitions_are_rows_and_columns(array):
    found = find_all_partitions()
    assert len(found) == 10
    assert {frozenset(p.members) for p in found} == set(array.partitions())


def test_label_of_identity(labels, pair_data):
    label = labels.vertex_labels[pair_data.pair_of[index_of(ONE_I)]]
    assert str(label) == "(16)(27)(38)(49)(5X)"
    assert labels.pair_with(label) == pair_data.pair_of[index_of(ONE_I)]


def test_labels(labels, array):
    assert len(set(labels.cell_duads)) == 25
    assert labels.cell_duads[array.grid[0][0]] == Duad(0, 0)
    assert labels.cell_at(Duad(4, 1)) == array.grid[4][1]
    assert len(set(labels.vertex_labels)) == 60
    assert all(lab.is_even() for lab in labels.vertex_labels)


def test_three_duads_determine_a_label(labels):
    for a, b in combinations(labels.vertex_labels, 2):
        assert a.shared(b) <= 2


def test_shared_duad_census():
    assert shared_duad_classes() == {
        (2, "1"): 600,
        (1, "0"): 450,
        (0, "1φ"): 360,
        (0, "-1+1φ"): 360,
    }


def test_duad_parse():
    assert Duad.parse("(5X)") == Duad(4, 4)
    assert str(Duad(2, 0)) == "(36)"
    label = VertexLabel.parse("(27)(16)(5X)(49)(38)")
    assert label.cols == (0, 1, 2, 3, 4)
    assert str(label) == "(16)(27)(38)(49)(5X)"


def test_hexagons():
    hexagons = enumerate_hexagons()
    assert len(hexagons) == 200
    assert all(len(hexagon_duads(h)) == 2 for h in hexagons)


def test_decagons_and_pentagons(pair_data):
    decagons = enumerate_decagons()
    assert len(decagons) == 72
    assert edges_per_decagon_count() == Counter({1: 720})
    pentagons = enumerate_pentagons()
    assert len(pentagons) == 72
    for pent, dec in zip(pentagons, decagons):
        assert {pair_data.pair_of[v] for v in pent.members} == set(dec.members)


@pytest.mark.parametrize("p, sylow, normalizer, size", [(2, 8, 24, 5), (3, 6, 12, 10), (5, 10, 20, 6)])
def test_prime_arrays(p, sylow, normalizer, size):
    array = prime_arrays(p)
    assert len(array.sylow) == sylow
    assert len(array.normalizer) == normalizer
    assert array.size == size
    assert array.lines_partition()


def test_prime_array_rejects_other_primes():
    with pytest.raises(EnumerationError):
        prime_arrays(7)


@pytest.mark.slow
def test_120cell():
    cell = build_120cell()
    assert len(cell.vertices) == 600
    assert all(natural_norm(v) == GoldenInt(8, 0) for v in cell.vertices)
    assert all(len(cell.cell_members(i, j)) == 24 for i in range(5) for j in range(5))
    spectrum = scaled_600cell_spectrum(2)
    assert all(cell.spectrum(cell.row_members(i)) == spectrum for i in range(5))
    assert len(set(cell.labels)) == 300
    assert all(lab.is_odd() for lab in cell.labels)
    assert Cell120Label.parse("(38)|(16)(27)(4X)(59)") in set(cell.labels)


def test_cell120_label_parse():
    label = Cell120Label.parse("(38)|(16)(27)(4X)(59)")
    assert label.home == Duad(2, 2)
    assert label.permutation() == (0, 1, 2, 4, 3)
    assert label.is_odd()
    assert str(label) == "(38)|(16)(27)(4X)(59)"


def test_rectified_600cell():
    vertices = rectified_600cell()
    assert len(vertices) == 720
    assert all(natural_norm(v) == RECTIFIED_NORM for v in vertices)
    assert set(rectified_shape_census()) == EXPECTED_RECTIFIED_SHAPES


@pytest.mark.parametrize("members", [(1,), (3, 3), (1, 2, 3)])
def test_subpolytope_checks_member_count(members):
    with pytest.raises(EnumerationError):
        SubPolytope(Kind.EDGE, members)


def test_labels_json_is_stable():
    data = labels_json()
    assert len(data["cells"]) == 25
    assert len(data["pairs"]) == 60
    assert data == labels_json()


def test_each_pair_lies_on_six_decagons():
    assert decagons_per_pair() == {6: 60}
    for p in (0, 17, 59):
        neighbors = decagon_neighbors(p)
        assert len(neighbors) == 12
        assert neighbors == {q for q in range(60) if pair_ip(p, q) == PHI}


def test_disjointness_graph_is_the_rook_graph():
    assert disjointness_degrees() == {8: 25}
    assert disjoint_iff_row_or_column()
    rooks = nx.cartesian_product(nx.complete_graph(5), nx.complete_graph(5))
    assert nx.is_isomorphic(disjointness_graph(), rooks)
