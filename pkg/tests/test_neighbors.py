"""Weak and semi-weak neighbors and the E/S refinements."""

import pytest

from choosability_verifier.graph import (
    base_class,
    generate_planar,
    is_semi_weak,
    is_weak,
    neighbor_classification,
    triangle_third_vertices,
)
from choosability_verifier.models import BaseClass, NeighborClass, SpecialClass

from .conftest import SOLIDS


def test_octahedron_edges_are_weak(octahedron):
    for u, v in octahedron.edges:
        assert is_weak(octahedron, u, v)
        assert is_weak(octahedron, v, u)


def test_cube_edges_are_neither(cube):
    for u, v in cube.edges:
        base, witness = base_class(cube, u, v)
        assert base == BaseClass.OTHER
        assert witness == []


def test_semi_weak_between_triangle_and_square(diamond):
    assert is_semi_weak(diamond, 1, 2)
    base, witness = base_class(diamond, 1, 2)
    assert base == BaseClass.SEMI_WEAK
    degrees = sorted(diamond.face(i).degree for i in witness)
    assert degrees == [3, 4]
    # the diagonal sits between the two triangles
    assert is_weak(diamond, 1, 3)


def test_bridge_is_other(solid):
    g = solid("k2")
    assert base_class(g, 1, 2) == (BaseClass.OTHER, [])


def test_triangle_third_vertices(octahedron, diamond):
    assert sorted(triangle_third_vertices(octahedron, 1, 2)) == [3, 5]
    assert triangle_third_vertices(diamond, 1, 2) == [3]


def test_low_degree_centre_gets_no_refinement(icosahedron):
    cls = neighbor_classification(icosahedron, 1, 2)
    assert cls.base == BaseClass.WEAK
    assert cls.special == SpecialClass.NONE


def test_e2_neighbor(e2_host):
    assert e2_host.degree(2) == 8
    assert e2_host.degree(1) == 5
    assert e2_host.degree(3) == e2_host.degree(4) == 6
    cls = neighbor_classification(e2_host, 2, 1)
    assert cls.base == BaseClass.WEAK
    assert cls.special == SpecialClass.E2


def test_classification_is_directional(e2_host):
    # 2 as a neighbor of the degree-5 vertex is only weak
    cls = neighbor_classification(e2_host, 1, 2)
    assert cls.special == SpecialClass.NONE


# ---------------------------------------------------------------------------
# Stacked wheels around the degree-5 vertex 1
# ---------------------------------------------------------------------------


def _degrees(g, *vs):
    return [g.degree(v) for v in vs]


def test_e3_neighbor(stacked_wheel):
    g = stacked_wheel((2, 3, 3), (2, 6, 1))
    assert _degrees(g, 2, 1, 3, 6) == [8, 5, 7, 5]
    assert neighbor_classification(g, 2, 1) == NeighborClass(base=BaseClass.WEAK, special=SpecialClass.E3)


def test_e4_neighbor(stacked_wheel):
    g = stacked_wheel((2, 3, 4), (5, 6, 4))
    assert _degrees(g, 2, 1, 3, 6) == [8, 5, 8, 8]
    assert neighbor_classification(g, 2, 1).special == SpecialClass.E4


def test_s2_neighbor(stacked_wheel):
    g = stacked_wheel((2, 3, 2), (6, 2, 1), (5, 6, 1))
    assert _degrees(g, 2, 1, 3, 6) == [7, 5, 6, 6]
    assert neighbor_classification(g, 2, 1).special == SpecialClass.S2


def test_s3_neighbor_with_second_pattern(stacked_wheel):
    # faces 2-1-3 and 2-1-6 with d(3)=7, d(6)=6; the other neighbor 5 has degree 6
    g = stacked_wheel((2, 3, 3), (5, 6, 2))
    assert _degrees(g, 2, 1, 3, 6, 4, 5) == [7, 5, 7, 6, 4, 6]
    assert neighbor_classification(g, 2, 1).special == SpecialClass.S3


def test_s4_neighbor(stacked_wheel):
    g = stacked_wheel((2, 3, 3))
    assert _degrees(g, 2, 1, 3, 6) == [7, 5, 7, 4]
    assert neighbor_classification(g, 2, 1).special == SpecialClass.S4


def test_degree_seven_centre_may_leave_neighbor_unrefined(stacked_wheel):
    g = stacked_wheel((2, 3, 3), (3, 4, 1), (5, 6, 4))
    assert _degrees(g, 2, 1, 3, 4, 5, 6) == [7, 5, 8, 5, 8, 8]
    cls = neighbor_classification(g, 2, 1)
    assert cls.base == BaseClass.WEAK
    assert cls.special == SpecialClass.NONE


# ---------------------------------------------------------------------------
# Mirror embeddings
# ---------------------------------------------------------------------------


def _assert_mirror_invariant(g):
    flipped = g.mirror()
    for u, v in g.edges:
        assert neighbor_classification(g, u, v) == neighbor_classification(flipped, u, v)
        assert neighbor_classification(g, v, u) == neighbor_classification(flipped, v, u)


@pytest.mark.parametrize("name", SOLIDS)
def test_mirror_keeps_classes_on_solids(solid, name):
    _assert_mirror_invariant(solid(name))


def test_mirror_keeps_classes_on_stacked_wheels(e2_host, semi_weak_host, stacked_wheel):
    _assert_mirror_invariant(e2_host)
    _assert_mirror_invariant(semi_weak_host)
    _assert_mirror_invariant(stacked_wheel((2, 3, 3), (5, 6, 2)))
    _assert_mirror_invariant(stacked_wheel((2, 3, 3), (2, 6, 1)))


@pytest.mark.parametrize("seed", range(4))
def test_mirror_keeps_classes_on_generated_graphs(seed):
    _assert_mirror_invariant(generate_planar(seed, 40, 8))
    _assert_mirror_invariant(generate_planar(seed, 30, 8, deletions=0.2))
