from collections import Counter

import pytest

from mod2 import (
    F4_NAMES,
    F4Subspace,
    LINE_CENSUS,
    OMEGA,
    OMEGA_BAR,
    SIZE,
    SUBSPACE_COUNTS,
    b_omega,
    check_equivariance,
    classify_lines,
    classify_planes,
    dim_of,
    f4_mul,
    f4_span,
    isotropic_4spaces,
    pentad_completions,
    pentads,
    phi_report,
    point_set,
    q_omega,
    q_omega_report,
    root_classes,
    same_class_intersections,
    trace,
)


def test_f4_arithmetic():
    assert f4_mul(OMEGA, OMEGA) == OMEGA_BAR
    assert f4_mul(OMEGA, OMEGA_BAR) == 1
    assert f4_mul(OMEGA_BAR, OMEGA_BAR) == OMEGA
    assert [trace(a) for a in range(4)] == [0, 0, 1, 1]
    assert OMEGA ^ OMEGA_BAR == 1


def test_quotient(quotient):
    assert quotient.census() == {"zero": 1, "isotropic": 135, "non_isotropic": 120}
    assert quotient.is_alternating()
    assert len(quotient.singular()) == 135


def test_roots_are_non_isotropic(quotient):
    h, phi_h = root_classes()
    assert all(quotient.Q(x) == 1 for x in h)
    assert all(quotient.Q(x) == 1 for x in phi_h)


def test_phi(phi):
    assert all(phi(phi(phi(x))) == x for x in range(SIZE))
    assert all(phi(phi(x)) == phi(x) ^ x for x in range(SIZE))
    assert phi.scale(0, 77) == 0
    assert phi.scale(1, 77) == 77
    assert phi.scale(OMEGA_BAR, 77) == phi(phi(77))


def test_phi_is_self_adjoint_but_not_an_isometry():
    report = phi_report()
    assert report.golden_relation
    assert report.order_three
    assert report.agrees_on_roots
    assert report.sums_isotropic
    assert report.self_adjoint
    assert report.isometry_failures > 0
    assert report.counterexample_b == (0, 1)


def test_points(points):
    assert len(points.points) == 85
    assert Counter(p.kind for p in points.points) == {"vertex": 60, "cell24": 25}
    covered = sorted(x for p in points.points for x in p.vectors)
    assert covered == list(range(1, SIZE))


def test_point_span_is_the_point_with_zero():
    x = 1
    assert f4_span([x]) == point_set(x) | {0}
    assert dim_of(f4_span([x])) == 2


def test_f4_subspace_dimensions(points):
    line = classify_lines()[0]
    span = F4Subspace.span(sorted(line.vectors)[1:3])
    assert span.is_closed()
    assert span.dim == 1 or span == F4Subspace(line.vectors)
    assert F4Subspace(line.vectors).dim == 2
    assert F4Subspace(line.vectors).point_indices(points) == line.points
    plane = F4Subspace.perp(points.points[0].vectors)
    assert (plane.f2_dim, plane.dim) == (6, 3)
    assert plane.is_closed()
    assert not F4Subspace(frozenset({0, 1})).is_closed()


def test_identity_label_is_a_vertex_point(points, labels):
    labels_seen = {p.label() for p in points.vertex_points}
    assert "(16)(27)(38)(49)(5X)" in labels_seen
    assert {p.label() for p in points.cell_points} == {str(d) for d in labels.cell_duads}


def test_lines():
    lines = classify_lines()
    assert len(lines) == 357
    assert dict(Counter(line.type for line in lines)) == LINE_CENSUS
    assert dict(Counter(line.certificate for line in lines)) == {
        "partition": 10,
        "decagon": 72,
        "16-cell in 24-cell": 75,
        "hexagon with crossed 24-cells": 200,
    }
    assert all(len(line.points) == 5 for line in lines)


def test_planes():
    planes = classify_planes()
    assert len(planes) == 85
    compositions = Counter("+".join(str(n) for n in plane.composition) for plane in planes)
    assert compositions == {"1+15+5": 60, "1+8+12": 25}
    assert all(len(plane.points) == 21 for plane in planes)


def test_q_omega():
    report = q_omega_report()
    assert report.by_class == {
        "cell": [F4_NAMES[0]],
        "vertex_isotropic": [F4_NAMES[1]],
        "H": [F4_NAMES[3]],
        "phiH": [F4_NAMES[2]],
    }
    assert report.trace_formula
    assert report.scaling
    assert report.bi_additive
    assert report.f4_linear
    assert q_omega(0) == 0
    assert b_omega(5, 0) == 0


@pytest.mark.slow
def test_totally_singular_subspaces():
    spaces = isotropic_4spaces()
    assert spaces.counts == SUBSPACE_COUNTS
    assert spaces.class_sizes() == [135, 135]
    assert same_class_intersections()


@pytest.mark.slow
def test_pentads():
    pent = pentads()
    assert pent.figure_one()
    assert pent.same_vectors()
    assert pent.mutually_disjoint()


@pytest.mark.slow
def test_pentad_completions():
    report = pentad_completions()
    assert report.common_disjoint == 28
    assert report.line_graph_isomorphic
    assert report.clique_sizes == [3, 7]
    assert report.completion_sizes == [5, 9]
    assert report.nine_covers_singular
    assert report.others_meet_five
    assert report.tetrad_meeting == 5
    assert report.tetrad_meeting_is_column_pentad


@pytest.mark.slow
def test_symmetries_act_on_the_geometry():
    report = check_equivariance(sample_size=2, seed=3)
    assert report.checked == 7
    assert report.commutes_with_phi
    assert report.preserves_q
    assert report.carries_tags
