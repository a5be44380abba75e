"""
Random connected planar graphs with a degree cap
"""
import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..config import GENERATOR_FLIPS_PER_VERTEX, GENERATOR_MAX_RETRIES
from ..exceptions import GenerationError
from .embedding import EmbeddedGraph

logger = logging.getLogger(__name__)


class PlanarBuilder:
    """
    Mutable rotation system for building embeddings step by step.

    A triangular face is addressed by its walk (a, b, c): darts a->b, b->c,
    c->a under the face tracing convention of EmbeddedGraph.
    """

    def __init__(self, rotation: Optional[Dict[int, Sequence[int]]] = None):
        self.rotation: Dict[int, List[int]] = {v: list(n) for v, n in (rotation or {}).items()}

    @classmethod
    def tetrahedron(cls) -> "PlanarBuilder":
        return cls({1: [3, 4, 2], 2: [1, 4, 3], 3: [2, 4, 1], 4: [1, 3, 2]})

    @classmethod
    def from_graph(cls, g: EmbeddedGraph) -> "PlanarBuilder":
        return cls({v: g.rotation(v) for v in g.vertices})

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation.get(u, ())

    def next_vertex(self) -> int:
        return max(self.rotation, default=0) + 1

    def _insert_after(self, v: int, anchor: int, new: int) -> None:
        nbrs = self.rotation[v]
        nbrs.insert(nbrs.index(anchor) + 1, new)

    def triangular_faces(self) -> List[Tuple[int, int, int]]:
        """Walks of all faces of degree 3, each listed once"""
        seen = set()
        faces = []
        for a in sorted(self.rotation):
            for b in self.rotation[a]:
                if (a, b) in seen:
                    continue
                walk = [(a, b)]
                dart = self._next((a, b))
                while dart != (a, b) and len(walk) <= 3:
                    walk.append(dart)
                    dart = self._next(dart)
                seen.update(walk)
                if len(walk) == 3 and dart == (a, b):
                    faces.append((a, b, walk[1][1]))
        return faces

    def _next(self, dart: Tuple[int, int]) -> Tuple[int, int]:
        u, v = dart
        nbrs = self.rotation[v]
        return (v, nbrs[(nbrs.index(u) + 1) % len(nbrs)])

    def insert_in_face(self, face: Tuple[int, int, int], new: Optional[int] = None) -> int:
        """Add a degree-3 vertex inside triangular face (a, b, c)"""
        a, b, c = face
        t = self.next_vertex() if new is None else new
        self._insert_after(b, a, t)
        self._insert_after(c, b, t)
        self._insert_after(a, c, t)
        self.rotation[t] = [a, c, b]
        return t

    def flip(self, u: int, v: int) -> Optional[Tuple[int, int]]:
        """
        Replace edge uv, shared by triangles (u, v, a) and (v, u, b), with ab.
        Returns the new edge, or None when the flip would break simplicity.
        """
        a = self._next((u, v))[1]
        b = self._next((v, u))[1]
        if a == b or self.has_edge(a, b):
            return None
        if self._next((v, a)) != (a, u) or self._next((u, b)) != (b, v):
            return None
        if self.degree(u) <= 3 or self.degree(v) <= 3:
            return None
        self.rotation[u].remove(v)
        self.rotation[v].remove(u)
        self._insert_after(a, v, b)
        self._insert_after(b, u, a)
        return (a, b)

    def remove_edge(self, u: int, v: int) -> None:
        self.rotation[u].remove(v)
        self.rotation[v].remove(u)

    def add_vertex(self, v: int) -> None:
        self.rotation.setdefault(v, [])

    def build(self) -> EmbeddedGraph:
        return EmbeddedGraph({v: tuple(self.rotation[v]) for v in sorted(self.rotation)})


def _grow(rng: random.Random, n: int, max_deg: int) -> Optional[PlanarBuilder]:
    builder = PlanarBuilder.tetrahedron()
    stalls = 0
    while len(builder.rotation) < n:
        open_faces = [
            f for f in builder.triangular_faces() if all(builder.degree(x) < max_deg for x in f)
        ]
        if open_faces:
            builder.insert_in_face(rng.choice(open_faces))
            _mix(rng, builder, max_deg, flips=GENERATOR_FLIPS_PER_VERTEX)
            continue
        stalls += 1
        if stalls > GENERATOR_FLIPS_PER_VERTEX * n:
            return None
        _mix(rng, builder, max_deg, flips=GENERATOR_FLIPS_PER_VERTEX * 4)
    return builder


def _mix(rng: random.Random, builder: PlanarBuilder, max_deg: int, flips: int) -> None:
    """Random edge flips, rejecting any that push a degree over the cap"""
    for _ in range(flips):
        u = rng.choice(sorted(builder.rotation))
        v = rng.choice(builder.rotation[u])
        a = builder._next((u, v))[1]
        b = builder._next((v, u))[1]
        if builder.degree(a) >= max_deg or builder.degree(b) >= max_deg:
            continue
        builder.flip(u, v)


def _delete_edges(rng: random.Random, builder: PlanarBuilder, fraction: float) -> None:
    graph = nx.Graph((u, v) for u in builder.rotation for v in builder.rotation[u])
    edges = sorted(graph.edges())
    rng.shuffle(edges)
    budget = int(len(edges) * fraction)
    for u, v in edges:
        if budget <= 0:
            break
        graph.remove_edge(u, v)
        if nx.has_path(graph, u, v):
            builder.remove_edge(u, v)
            budget -= 1
        else:
            graph.add_edge(u, v)


def generate_planar(seed: int, n: int, max_deg: int, deletions: float = 0.0) -> EmbeddedGraph:
    """
    Connected simple planar embedded graph on n vertices with maximum degree
    at most max_deg.

    Grows a triangulation from the tetrahedron by inserting vertices into
    random triangular faces whose corners are below the cap, mixing with
    random edge flips after each insertion. A positive `deletions` fraction
    then removes random non-bridge edges. Deterministic for a fixed seed.
    """
    if n < 4:
        raise GenerationError(f"n must be at least 4, got {n}")
    if max_deg < 5:
        raise GenerationError(f"max degree must be at least 5, got {max_deg}")
    if not 0.0 <= deletions < 1.0:
        raise GenerationError(f"deletion fraction must lie in [0, 1), got {deletions}")

    for attempt in range(GENERATOR_MAX_RETRIES):
        rng = random.Random(f"{seed}:{attempt}")
        builder = _grow(rng, n, max_deg)
        if builder is None:
            logger.debug(f"[Generator] seed={seed} attempt {attempt} stalled at the degree cap")
            continue
        if deletions:
            _delete_edges(rng, builder, deletions)
        return builder.build()

    raise GenerationError(
        f"no planar graph with n={n}, max degree {max_deg} after {GENERATOR_MAX_RETRIES} attempts"
    )
