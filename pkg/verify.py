"""
verify.py
---------
This script runs the verification checks and writes a machine-readable report.

Every check has an id (`facts/fact5`, `s4/hexagons`, ...), the build stage it
needs, an expected value and a provenance tag (TRIVIAL is reserved for
defining properties and error paths, which the test suite covers):
- PAPER: a published value from the literature on the 600-cell.
- DERIVED: the value follows from stated facts (orbit-stabilizer, counting).

Needed stages are built in dependency order (polytopes, symmetry, embed,
mod2) behind a spinner, then the selected checks run in a thread pool. The
report is sorted by check id and is always written, even when checks fail.

Usage:
- Run every check: `python verify.py`
- Run a subset: `python verify.py --only "facts/*" --report facts.json --threads 8`

Exit codes: 0 when every selected check passes, 1 when any fails, 2 on a
usage or I/O error (including a selector that matches no check).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fnmatch import fnmatchcase
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Callable

from dotenv import load_dotenv
from tabulate import tabulate

from embed import (
    decompose_norm4_shell,
    e8_lattice,
    example1,
    lattice_L,
    rectified_embedding,
)
from golden import PHI, GoldenInt
from icosian import (
    ONE_I,
    binary_tetrahedral,
    cayley_table,
    generate_vertices,
    generated_subgroup,
    index_of,
    is_latin_square,
    natural_norm,
    order_census,
    shape_counts,
)
from mod2 import (
    F4_NAMES,
    SIZE,
    build_phi,
    build_points,
    build_quotient,
    check_equivariance,
    classify_lines,
    classify_planes,
    isotropic_4spaces,
    pentad_completions,
    pentads,
    phi_report,
    q_omega_report,
    same_class_intersections,
)
from polytopes import (
    EXPECTED_RECTIFIED_SHAPES,
    RECTIFIED_NORM,
    Cell120Label,
    VertexLabel,
    build_120cell,
    build_array,
    decagon_neighbors,
    decagons_per_pair,
    disjoint_iff_row_or_column,
    disjointness_degrees,
    edges_per_decagon_count,
    entry_components,
    enumerate_16cells,
    enumerate_24cells,
    enumerate_8cells,
    enumerate_decagons,
    enumerate_hexagons,
    enumerate_pentagons,
    enumerate_skeleton,
    find_all_partitions,
    label_all,
    mutually_orthogonal,
    orthogonal_pairs,
    pair_ip,
    pairs,
    prime_arrays,
    rectified_600cell,
    rectified_shape_census,
    scaled_600cell_spectrum,
)
from symmetry import (
    TenPerm,
    action_on_partitions,
    center,
    distinct_matrices,
    generate_group,
    identity,
    image_group_order,
    negation,
    reflection,
    stabilizer_orders,
    verify_homomorphism,
)
from utils import Loader, color, jsonable, setup_logging, write_json

load_dotenv()

logger = logging.getLogger(__name__)

PAPER, DERIVED = "PAPER", "DERIVED"

STAGES = {
    "polytopes": (label_all, enumerate_hexagons, enumerate_decagons),
    "symmetry": (generate_group,),
    "embed": (e8_lattice,),
    "mod2": (build_quotient, build_points),
}
STAGE_ORDER = tuple(STAGES)


def seed() -> int:
    return int(os.getenv("H4_SEED", "2024"))


@dataclass(frozen=True)
class Check:
    id: str
    stage: str
    expected: object
    provenance: str
    observe: Callable[[], object]


@dataclass(frozen=True)
class CheckReport:
    id: str
    status: str
    expected: object
    provenance: str
    observed: object
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self):
        return {
            "id": self.id,
            "status": self.status,
            "expected": {"value": jsonable(self.expected), "provenance": self.provenance},
            "observed": jsonable(self.observed),
            "elapsed_ms": self.elapsed_ms,
        }


class SelectorError(ValueError):
    """A --only pattern that matches no registered check."""


REGISTRY: dict[str, Check] = {}


def check(check_id: str, stage: str, expected, provenance: str):
    def register(observe):
        REGISTRY[check_id] = Check(check_id, stage, expected, provenance, observe)
        return observe

    return register


def _census(counter) -> dict[str, int]:
    return {f"{a}+{b}": n for (a, b), n in counter.items()}


# Facts


@check(
    "facts/fact1",
    "polytopes",
    {"vertices": 120, "edges": 720, "triangles": 1200, "cells": 600},
    PAPER,
)
def fact1():
    edges, triangles, cells = enumerate_skeleton().counts()
    return {"vertices": len(generate_vertices()), "edges": edges, "triangles": triangles, "cells": cells}


@check(
    "facts/fact2",
    "polytopes",
    {
        "cell24": 25,
        "cell16": 75,
        "cell8": 75,
        "orthogonal_pairs": 450,
        "cell16_in_one_cell24": True,
        "cell8_in_one_cell24": True,
        "binary_tetrahedral_is_cell24": True,
    },
    PAPER,
)
def fact2():
    cells = [set(c.members) for c in enumerate_24cells()]

    def owners(sub):
        return sum(1 for c in cells if set(sub.members) <= c)

    data = pairs()
    return {
        "cell24": len(cells),
        "cell16": len(enumerate_16cells()),
        "cell8": len(set(enumerate_8cells())),
        "orthogonal_pairs": len(orthogonal_pairs()),
        "cell16_in_one_cell24": all(owners(s) == 1 for s in enumerate_16cells()),
        "cell8_in_one_cell24": all(owners(s) == 1 for s in enumerate_8cells()),
        "binary_tetrahedral_is_cell24": {data.pair_of[i] for i in binary_tetrahedral()} in cells,
    }


@check(
    "facts/fact3",
    "symmetry",
    {"order": 14400, "rotations": 7200, "distinct_matrices": 14400, "center": 2},
    PAPER,
)
def fact3():
    group = generate_group()
    return {
        "order": len(group),
        "rotations": sum(1 for op in group if not op.parity),
        "distinct_matrices": distinct_matrices(group),
        "center": len(center()),
    }


@check(
    "facts/fact4",
    "symmetry",
    {
        "vertex_order": 120,
        "vertex_pair_orbits": [1, 12, 12, 15, 20],
        "cell_order": 576,
        "cell_cell_orbits": [1, 8, 16],
        "cell_pair_orbits": [12, 48],
    },
    PAPER,
)
def fact4():
    report = stabilizer_orders().to_json()
    keys = ("vertex_order", "vertex_pair_orbits", "cell_order", "cell_cell_orbits", "cell_pair_orbits")
    return {k: report[k] for k in keys}


@check(
    "facts/fact5",
    "polytopes",
    {"partitions": 10, "rows_and_columns": True, "disjointness_degrees": {8: 25}, "disjoint_iff_row_or_column": True},
    PAPER,
)
def fact5():
    found = find_all_partitions()
    return {
        "partitions": len(found),
        "rows_and_columns": {frozenset(p.members) for p in found} == set(build_array().partitions()),
        "disjointness_degrees": disjointness_degrees(),
        "disjoint_iff_row_or_column": disjoint_iff_row_or_column(),
    }


@check(
    "facts/fact6",
    "symmetry",
    {
        "kernel": 2,
        "kernel_is_plus_minus_one": True,
        "image_order": 7200,
        "schreier_sims_order": 7200,
        "rotations_even_on_pentads": True,
        "reflections_swap_pentads": True,
        "homomorphism": True,
    },
    PAPER,
)
def fact6():
    trivial = TenPerm(tuple(range(10)))
    kernel, image = [], set()
    rotations_even = reflections_swap = True
    for op in generate_group():
        t = action_on_partitions(op)
        image.add(t)
        if t == trivial:
            kernel.append(op)
        if op.parity:
            reflections_swap &= t.swaps_pentads()
        else:
            rotations_even &= t.even_on_pentads()
    return {
        "kernel": len(kernel),
        "kernel_is_plus_minus_one": set(kernel) == {identity(), negation()},
        "image_order": len(image),
        "schreier_sims_order": image_group_order(),
        "rotations_even_on_pentads": rotations_even,
        "reflections_swap_pentads": reflections_swap,
        "homomorphism": verify_homomorphism(seed=seed()),
    }


@check(
    "facts/fact7",
    "symmetry",
    {
        "cell_duads": 25,
        "labels": 60,
        "distinct": True,
        "even": True,
        "one": "(16)(27)(38)(49)(5X)",
        "three_duads_determine_vertex": True,
        "reflections_display_labels": True,
    },
    PAPER,
)
def fact7():
    labels = label_all()
    data = pairs()
    vertices = generate_vertices()
    triples = [frozenset(t) for lab in labels.vertex_labels for t in combinations(lab.duads(), 3)]
    reflections = all(
        str(action_on_partitions(reflection(vertices[data.rep(p)]))) == str(lab)
        for p, lab in enumerate(labels.vertex_labels)
    )
    return {
        "cell_duads": len(set(labels.cell_duads)),
        "labels": len(labels.vertex_labels),
        "distinct": len(set(labels.vertex_labels)) == len(labels.vertex_labels),
        "even": all(lab.is_even() for lab in labels.vertex_labels),
        "one": str(labels.vertex_labels[data.pair_of[index_of(ONE_I)]]),
        "three_duads_determine_vertex": len(set(triples)) == len(triples),
        "reflections_display_labels": reflections,
    }


@check(
    "facts/fact8",
    "polytopes",
    {
        "vertices": 120,
        "shapes": {"(±2,0,0,0)^S": 8, "(±1,±1,±1,±1)": 16, "(0,±1,±φ,±φ⁻¹)^A": 96},
        "all_norm_4": True,
        "latin_square": True,
        "order_census": {1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24},
        "binary_tetrahedral_subgroup": True,
    },
    PAPER,
)
def fact8():
    vertices = generate_vertices()
    tetrahedral = binary_tetrahedral()
    return {
        "vertices": len(vertices),
        "shapes": shape_counts(vertices),
        "all_norm_4": all(natural_norm(v) == GoldenInt(4, 0) for v in vertices),
        "latin_square": is_latin_square(cayley_table()),
        "order_census": order_census(),
        "binary_tetrahedral_subgroup": generated_subgroup(tetrahedral) == tetrahedral,
    }


@check(
    "facts/fact9",
    "embed",
    {"roots": 240, "determinant": 1, "union_is_roots": True, "orthogonal_counterparts": True},
    PAPER,
)
def fact9():
    report = example1()
    return {
        "roots": report.roots,
        "determinant": report.determinant,
        "union_is_roots": report.union_is_roots,
        "orthogonal_counterparts": report.orthogonal_counterparts,
    }


@check(
    "facts/fact10",
    "mod2",
    {"isotropic": 135, "points": 85, "vertex_points": 60, "cell_points": 25, "phi_order_three": True},
    PAPER,
)
def fact10():
    phi, points = build_phi(), build_points()
    return {
        "isotropic": build_quotient().census()["isotropic"],
        "points": len(points.points),
        "vertex_points": len(points.vertex_points),
        "cell_points": len(points.cell_points),
        "phi_order_three": all(phi(phi(phi(x))) == x for x in range(SIZE)),
    }


# Sections


@check(
    "s2/cell120",
    "polytopes",
    {
        "vertices": 600,
        "cells_of_24": True,
        "rows_scaled_600cell": True,
        "columns_scaled_600cell": True,
        "distinct_labels": 300,
        "labels_odd": True,
        "odd_permutation_and_home_row_once": True,
        "instance": True,
    },
    PAPER,
)
def cell120():
    cell = build_120cell()
    spectrum = scaled_600cell_spectrum(2)
    labels = cell.labels
    return {
        "vertices": len(cell.vertices),
        "cells_of_24": all(len(cell.cell_members(i, j)) == 24 for i in range(5) for j in range(5)),
        "rows_scaled_600cell": all(cell.spectrum(cell.row_members(i)) == spectrum for i in range(5)),
        "columns_scaled_600cell": all(cell.spectrum(cell.column_members(j)) == spectrum for j in range(5)),
        "distinct_labels": len(set(labels)),
        "labels_odd": all(lab.is_odd() for lab in labels),
        "odd_permutation_and_home_row_once": len({(lab.permutation(), lab.home.row) for lab in labels}) == 300,
        "instance": Cell120Label.parse("(38)|(16)(27)(4X)(59)") in set(labels),
    }


def _pair_set(texts) -> frozenset[int]:
    labels = label_all()
    return frozenset(labels.pair_with(VertexLabel.parse(t)) for t in texts)


def _prime_array_report(p: int, family) -> dict:
    array = prime_arrays(p)
    components = [entry_components(e, family) for e in array.entries()]
    used = sorted(s for comp in components for s in comp)
    return {
        "size": array.size,
        "lines_partition": array.lines_partition(),
        "entries_are_orthogonal_pairs": all(len(c) == 2 and mutually_orthogonal(*c) for c in components),
        "entries_use_each_once": used == sorted(family),
    }


def _orthogonal_count(family) -> int:
    return sum(1 for a, b in combinations(family, 2) if mutually_orthogonal(a, b))


@check(
    "s4/hexagons",
    "polytopes",
    {
        "hexagons": 200,
        "orthogonal_pairs": 100,
        "array": {"size": 10, "lines_partition": True, "entries_are_orthogonal_pairs": True, "entries_use_each_once": True},
        "witness_orthogonal": True,
    },
    PAPER,
)
def hexagons():
    family = enumerate_hexagons()
    h = _pair_set(["(16)(27)(38)(49)(5X)", "(16)(27)(39)(4X)(58)", "(16)(27)(3X)(48)(59)"])
    h_prime = _pair_set(["(17)(26)(38)(4X)(59)", "(17)(26)(39)(48)(5X)", "(17)(26)(3X)(49)(58)"])
    members = {frozenset(s.members): s for s in family}
    return {
        "hexagons": len(family),
        "orthogonal_pairs": _orthogonal_count(family),
        "array": _prime_array_report(3, family),
        "witness_orthogonal": h in members and h_prime in members and mutually_orthogonal(members[h], members[h_prime]),
    }


@check(
    "s4/decagons",
    "polytopes",
    {
        "decagons": 72,
        "orthogonal_pairs": 36,
        "array": {"size": 6, "lines_partition": True, "entries_are_orthogonal_pairs": True, "entries_use_each_once": True},
        "decagons_per_edge": {1: 720},
        "decagons_per_pair": {6: 60},
        "phi_neighbors_on_decagons": True,
        "pentagons_meet_every_cell24_once": True,
        "witness_orthogonal": True,
    },
    PAPER,
)
def decagons():
    family = enumerate_decagons()
    cells = enumerate_24cells()
    data = pairs()
    meets_once = all(
        sum(1 for v in pent.members if data.pair_of[v] in cell) == 1
        for pent in enumerate_pentagons()
        for cell in cells
    )
    d = _pair_set([
        "(16)(27)(38)(49)(5X)", "(17)(28)(39)(4X)(56)", "(18)(29)(3X)(46)(57)",
        "(19)(2X)(36)(47)(58)", "(1X)(26)(37)(48)(59)",
    ])
    d_prime = _pair_set([
        "(16)(2X)(39)(48)(57)", "(17)(26)(3X)(49)(58)", "(18)(27)(36)(4X)(59)",
        "(19)(28)(37)(46)(5X)", "(1X)(29)(38)(47)(56)",
    ])
    members = {frozenset(s.members): s for s in family}
    return {
        "decagons": len(family),
        "orthogonal_pairs": _orthogonal_count(family),
        "array": _prime_array_report(5, family),
        "decagons_per_edge": dict(edges_per_decagon_count()),
        "decagons_per_pair": decagons_per_pair(),
        "phi_neighbors_on_decagons": all(
            decagon_neighbors(p) == {q for q in range(len(data.members)) if pair_ip(p, q) == PHI}
            for p in range(len(data.members))
        ),
        "pentagons_meet_every_cell24_once": meets_once,
        "witness_orthogonal": d in members and d_prime in members and mutually_orthogonal(members[d], members[d_prime]),
    }


@check(
    "s4/arrays",
    "polytopes",
    {
        "p2": {"sylow": 8, "normalizer": 24, "size": 5, "lines_partition": True},
        "p3": {"sylow": 6, "normalizer": 12, "size": 10, "lines_partition": True},
        "p5": {"sylow": 10, "normalizer": 20, "size": 6, "lines_partition": True},
        "p2_entries_are_cell24": True,
    },
    DERIVED,
)
def arrays():
    out = {}
    for p in (2, 3, 5):
        array = prime_arrays(p)
        out[f"p{p}"] = {
            "sylow": len(array.sylow),
            "normalizer": len(array.normalizer),
            "size": array.size,
            "lines_partition": array.lines_partition(),
        }
    data = pairs()
    entries = {frozenset(data.pair_of[v] for v in e) for e in prime_arrays(2).entries()}
    out["p2_entries_are_cell24"] = entries == {frozenset(c.members) for c in enumerate_24cells()}
    return out


@check(
    "s5/isotropic",
    "mod2",
    {"counts": {1: 135, 2: 1575, 3: 2025, 4: 270}, "class_sizes": [135, 135], "same_class_intersections": True},
    PAPER,
)
def isotropic():
    spaces = isotropic_4spaces()
    return {
        "counts": spaces.counts,
        "class_sizes": spaces.class_sizes(),
        "same_class_intersections": same_class_intersections(),
    }


@check(
    "s5/pentads",
    "mod2",
    {
        "figure_one": True,
        "same_vectors": True,
        "mutually_disjoint": True,
        "common_disjoint": 28,
        "line_graph_isomorphic": True,
        "clique_sizes": [3, 7],
        "completion_sizes": [5, 9],
        "nine_covers_singular": True,
        "others_meet_five": True,
        "tetrad_meeting": 5,
        "tetrad_meeting_is_column_pentad": True,
    },
    PAPER,
)
def pentad_checks():
    pent = pentads()
    out = {
        "figure_one": pent.figure_one(),
        "same_vectors": pent.same_vectors(),
        "mutually_disjoint": pent.mutually_disjoint(),
    }
    out.update(pentad_completions().to_json())
    return out


@check(
    "s6/example1",
    "embed",
    {
        "determinant": 1,
        "roots": 240,
        "union_is_roots": True,
        "orthogonal_counterparts": True,
        "conjugate_determinant": 1,
        "conjugate_roots": 240,
        "conjugate_union_is_roots": True,
        "conjugation_isometry": True,
        "doubled_integers": True,
        "indefinite_witness": Fraction(-4),
    },
    PAPER,
)
def example1_check():
    return example1().to_json()


@check(
    "s6/example2",
    "embed",
    {
        "census": {4: 1, 2: 20, 1: 24, 0: 15},
        "pairing_block": [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]],
        "dual_pairs_to_delta": True,
        "determinant": 625,
        "even": True,
        "rootless": True,
    },
    PAPER,
)
def example2_check():
    report = lattice_L().to_json()
    report.pop("lattice")
    return report


@check(
    "s6/example3",
    "embed",
    {
        "shell": 2160,
        "classes": [
            {"q": -4, "size": 120, "source": "H", "k": -1, "spectrum_matches": True},
            {"q": 0, "size": 600, "source": "120-cell", "k": 0, "spectrum_matches": True},
            {"q": 4, "size": 720, "source": "rectified 600-cell", "k": -1, "spectrum_matches": True},
            {"q": 8, "size": 600, "source": "120-cell", "k": 1, "spectrum_matches": True},
            {"q": 12, "size": 120, "source": "H", "k": 2, "spectrum_matches": True},
        ],
        "rectified": {"vectors": 720, "norm_20_plus_8_sqrt5": True, "shapes_match": True, "embedded": 720},
    },
    PAPER,
)
def example3_check():
    classes = decompose_norm4_shell()
    rectified = rectified_600cell()
    return {
        "shell": sum(c.size for c in classes),
        "classes": [c.to_json() for c in classes],
        "rectified": {
            "vectors": len(rectified),
            "norm_20_plus_8_sqrt5": all(natural_norm(v) == RECTIFIED_NORM for v in rectified),
            "shapes_match": set(rectified_shape_census()) == EXPECTED_RECTIFIED_SHAPES,
            "embedded": len(rectified_embedding()),
        },
    }


@check(
    "s7/phi",
    "mod2",
    {
        "golden_relation": True,
        "order_three": True,
        "agrees_on_roots": True,
        "sums_isotropic": True,
        "self_adjoint": True,
        "not_an_isometry": True,
        "counterexample_b": [0, 1],
    },
    DERIVED,
)
def phi_check():
    report = phi_report().to_json()
    report["not_an_isometry"] = report.pop("isometry_failures") > 0
    return report


@check(
    "s7/points",
    "mod2",
    {
        "quotient": {"zero": 1, "isotropic": 135, "non_isotropic": 120},
        "alternating": True,
        "points": 85,
        "kinds": {"vertex": 60, "cell24": 25},
        "partition_of_nonzero": True,
    },
    PAPER,
)
def points_check():
    quotient, points = build_quotient(), build_points()
    kinds: dict[str, int] = {}
    for p in points.points:
        kinds[p.kind] = kinds.get(p.kind, 0) + 1
    covered = [x for p in points.points for x in p.vectors]
    return {
        "quotient": quotient.census(),
        "alternating": quotient.is_alternating(),
        "points": len(points.points),
        "kinds": kinds,
        "partition_of_nonzero": sorted(covered) == list(range(1, SIZE)),
    }


@check(
    "s7/lines",
    "mod2",
    {
        "lines": 357,
        "census": {"0+5": 10, "5+0": 72, "4+1": 75, "3+2": 200},
        "certificates": {
            "partition": 10,
            "decagon": 72,
            "16-cell in 24-cell": 75,
            "hexagon with crossed 24-cells": 200,
        },
    },
    PAPER,
)
def lines_check():
    lines = classify_lines()
    census: dict[tuple[int, int], int] = {}
    certificates: dict[str, int] = {}
    for line in lines:
        census[line.type] = census.get(line.type, 0) + 1
        certificates[line.certificate] = certificates.get(line.certificate, 0) + 1
    return {"lines": len(lines), "census": _census(census), "certificates": certificates}


@check("s7/planes", "mod2", {"planes": 85, "compositions": {"1+15+5": 60, "1+8+12": 25}}, PAPER)
def planes_check():
    planes = classify_planes()
    compositions: dict[str, int] = {}
    for plane in planes:
        key = "+".join(str(n) for n in plane.composition)
        compositions[key] = compositions.get(key, 0) + 1
    return {"planes": len(planes), "compositions": compositions}


@check(
    "s7/qomega",
    "mod2",
    {
        "by_class": {"cell": [F4_NAMES[0]], "vertex_isotropic": [F4_NAMES[1]], "H": [F4_NAMES[3]], "phiH": [F4_NAMES[2]]},
        "trace_formula": True,
        "scaling": True,
        "bi_additive": True,
        "f4_linear": True,
    },
    PAPER,
)
def qomega_check():
    return q_omega_report().to_json()


@check(
    "s7/stabilizers",
    "symmetry",
    {
        "vertex_order": 120,
        "vertex_pair_orbits": [1, 12, 12, 15, 20],
        "vertex_cell_orbits": [5, 20],
        "contains_minus_reflection": True,
        "cell_order": 576,
        "cell_cell_orbits": [1, 8, 16],
        "cell_pair_orbits": [12, 48],
        "joint_order": 24,
        "joint_cell_orbits": [1, 4, 8, 12],
    },
    DERIVED,
)
def stabilizers_check():
    return stabilizer_orders().to_json()


@check(
    "s7/equivariance",
    "mod2",
    {"commutes_with_phi": True, "preserves_q": True, "carries_tags": True},
    DERIVED,
)
def equivariance_check():
    report = check_equivariance(seed=seed()).to_json()
    report.pop("checked")
    return report


# Running


def select(pattern: str) -> list[Check]:
    chosen = [c for cid, c in sorted(REGISTRY.items()) if fnmatchcase(cid, pattern)]
    if not chosen:
        raise SelectorError(f"no check matches {pattern!r}")
    return chosen


def build_stages(checks: list[Check]) -> dict[str, str]:
    """Build every stage up to the last one needed; returns {stage: error} for stages that failed."""
    last = max(STAGE_ORDER.index(c.stage) for c in checks)
    failed: dict[str, str] = {}
    loader = Loader("Building stages...", end="Stages built.").start()
    try:
        for stage in STAGE_ORDER[: last + 1]:
            if failed:
                failed[stage] = f"skipped after {next(iter(failed))} failed"
                continue
            loader.desc = f"Building {stage}..."
            try:
                for build in STAGES[stage]:
                    build()
            except Exception as exc:
                logger.error("stage %s failed: %s", stage, exc)
                failed[stage] = f"{type(exc).__name__}: {exc}"
    finally:
        loader.stop()
    return failed


def run_check(item: Check, failed_stages: dict[str, str]) -> CheckReport:
    start = time.perf_counter_ns()
    if item.stage in failed_stages:
        observed, status = failed_stages[item.stage], "fail"
    else:
        try:
            observed = item.observe()
            status = "pass" if jsonable(observed) == jsonable(item.expected) else "fail"
        except Exception as exc:
            logger.exception("check %s raised", item.id)
            observed, status = f"{type(exc).__name__}: {exc}", "fail"
    elapsed = (time.perf_counter_ns() - start) // 1_000_000
    return CheckReport(item.id, status, item.expected, item.provenance, observed, elapsed)


def run(pattern: str = "*", report_path: str | None = None, threads: int | None = None) -> list[CheckReport]:
    checks = select(pattern)
    threads = threads or int(os.getenv("H4_THREADS", "4"))
    failed = build_stages(checks)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        reports = list(pool.map(partial(run_check, failed_stages=failed), checks))
    reports.sort(key=lambda r: r.id)
    if report_path is not None:
        write_json(reports, report_path)
    return reports


def summarize(reports: list[CheckReport]) -> str:
    rows = []
    for r in reports:
        status = (color.GREEN if r.passed else color.RED) + r.status + color.END
        rows.append([r.id, status, r.provenance, r.elapsed_ms])
    return tabulate(rows, headers=["check", "status", "provenance", "ms"])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Run the H4 verification checks.")
    parser.add_argument("--only", default="*", help="check-id glob, e.g. 'facts/*'")
    parser.add_argument("--report", default=os.getenv("H4_REPORT_PATH", "report.json"))
    parser.add_argument("--threads", type=int, default=os.getenv("H4_THREADS", "4"))
    args = parser.parse_args(argv)
    setup_logging()

    if args.threads < 1:
        print(color.RED + "--threads must be at least 1" + color.END, file=sys.stderr)
        return 2
    try:
        reports = run(args.only, args.report, args.threads)
    except SelectorError as exc:
        print(color.RED + str(exc) + color.END, file=sys.stderr)
        return 2
    except OSError as exc:
        print(color.RED + f"could not write {args.report}: {exc}" + color.END, file=sys.stderr)
        return 2

    print(summarize(reports))
    failures = [r for r in reports if not r.passed]
    if failures:
        print(color.RED + color.BOLD + f"{len(failures)} of {len(reports)} checks failed." + color.END)
        return 1
    print(color.GREEN + color.BOLD + f"All {len(reports)} checks passed." + color.END)
    return 0


if __name__ == "__main__":
    sys.exit(main())
