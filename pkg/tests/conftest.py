"""Shared fixtures: the sample solids and small hand-built embeddings."""

from pathlib import Path

import pytest

from choosability_verifier.graph import EmbeddedGraph, PlanarBuilder, load_graph

DATA = Path(__file__).resolve().parent.parent / "data" / "graphs"

SOLIDS = ("tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron")


def graph_path(name: str) -> str:
    return str(DATA / f"{name}.txt")


@pytest.fixture
def solid():
    """Loader for one of the shipped graph files by name."""
    return lambda name: load_graph(graph_path(name))


@pytest.fixture
def tetrahedron() -> EmbeddedGraph:
    return load_graph(graph_path("tetrahedron"))


@pytest.fixture
def octahedron() -> EmbeddedGraph:
    return load_graph(graph_path("octahedron"))


@pytest.fixture
def cube() -> EmbeddedGraph:
    return load_graph(graph_path("cube"))


@pytest.fixture
def icosahedron() -> EmbeddedGraph:
    return load_graph(graph_path("icosahedron"))


@pytest.fixture
def dodecahedron() -> EmbeddedGraph:
    return load_graph(graph_path("dodecahedron"))


@pytest.fixture
def diamond() -> EmbeddedGraph:
    """K4 minus edge 2-4: triangles 1-2-3 and 1-3-4 inside a 4-face."""
    builder = PlanarBuilder.tetrahedron()
    builder.remove_edge(2, 4)
    return builder.build()


def _face_with(builder: PlanarBuilder, *corners: int):
    return next(f for f in builder.triangular_faces() if set(corners) <= set(f))


def _stacked_wheel(*stacks) -> PlanarBuilder:
    """
    Degree-5 vertex 1 with ring 2 3 4 5 6 and apex 7 over the ring, then
    for each (a, b, k) a stack of k vertices on the apex-side triangle at
    a-b: each raises a and b by one, the first also raises 7. Stacked
    vertices are numbered from 8 in order; the last of each stack has
    degree 3, the others degree 4.
    """
    builder = PlanarBuilder({
        1: [2, 3, 4, 5, 6],
        2: [3, 1, 6, 7],
        3: [4, 1, 2, 7],
        4: [5, 1, 3, 7],
        5: [6, 1, 4, 7],
        6: [2, 1, 5, 7],
        7: [6, 5, 4, 3, 2],
    })
    for a, b, k in stacks:
        t = 7
        for _ in range(k):
            t = builder.insert_in_face(_face_with(builder, a, b, t))
    return builder


@pytest.fixture
def stacked_wheel():
    return lambda *stacks: _stacked_wheel(*stacks).build()


@pytest.fixture
def e2_host() -> EmbeddedGraph:
    """
    Stacks of two at 2-3, 2-6 and 4-5 raise 2 to degree 8 and 3, 4 to
    degree 6, making 1 an E2-neighbor of 2. Around 2 sit 9 and 11 of
    degree 3 and 8 and 10 of degree 4.
    """
    return _stacked_wheel((2, 3, 2), (2, 6, 2), (4, 5, 2)).build()


@pytest.fixture
def semi_weak_host() -> EmbeddedGraph:
    """The E2 host without edge 10-7: 10 drops to degree 3 beside the 4-face 2 7 6 10."""
    builder = _stacked_wheel((2, 3, 2), (2, 6, 2), (4, 5, 2))
    builder.remove_edge(10, 7)
    return builder.build()
