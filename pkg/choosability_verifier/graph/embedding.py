"""
Planar embeddings stored as rotation systems
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import DisconnectedGraphError, EmbeddingError, NotAnEdgeError, UnknownElementError

Dart = Tuple[int, int]
Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Unordered edge as a sorted pair"""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """A facial walk; degree counts vertices with multiplicity"""
    index: int
    walk: Tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(tail for tail, _ in self.walk)

    def appearances(self, v: int) -> int:
        return sum(1 for tail, _ in self.walk if tail == v)


class EmbeddedGraph:
    """
    Simple graph with a clockwise rotation of neighbors at every vertex.

    Face tracing convention: the dart following (u -> v) on a facial walk is
    (v -> w), where w is the neighbor immediately after u in the clockwise
    rotation of v. Instances are immutable once built.
    """

    def __init__(self, rotation: Mapping[int, Sequence[int]], lines: Optional[Mapping[int, int]] = None):
        self._order: Tuple[int, ...] = tuple(rotation)
        self._rotation: Dict[int, Tuple[int, ...]] = {v: tuple(rotation[v]) for v in self._order}
        self._validate(lines or {})
        self._position: Dict[int, Dict[int, int]] = {
            v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in self._rotation.items()
        }
        self._check_euler()

    def _validate(self, lines: Mapping[int, int]) -> None:
        for v in self._order:
            line = lines.get(v)
            if not isinstance(v, int) or v <= 0:
                raise EmbeddingError(f"vertex id {v!r} is not a positive integer", line)
            seen = set()
            for w in self._rotation[v]:
                if w == v:
                    raise EmbeddingError(f"self-loop at vertex {v}", line)
                if w in seen:
                    raise EmbeddingError(f"duplicate neighbor {w} in rotation of {v}", line)
                if w not in self._rotation:
                    raise EmbeddingError(f"unknown vertex id {w} in rotation of {v}", line)
                seen.add(w)
        for v in self._order:
            for w in self._rotation[v]:
                if v not in self._rotation[w]:
                    raise EmbeddingError(
                        f"asymmetric adjacency: {w} listed at {v} but {v} missing at {w}", lines.get(v)
                    )

    def _check_euler(self) -> None:
        components = list(nx.connected_components(self.nx_view))
        root = {v: comp_id for comp_id, comp in enumerate(components) for v in comp}
        face_count = [0] * len(components)
        for face in self.faces:
            face_count[root[self.face_vertices(face)[0]]] += 1
        for comp_id, comp in enumerate(components):
            n_edges = sum(len(self._rotation[v]) for v in comp) // 2
            characteristic = len(comp) - n_edges + face_count[comp_id]
            if characteristic != 2:
                raise EmbeddingError(
                    f"rotation system is not a sphere embedding (V-E+F = {characteristic} on a component)"
                )

    # === Basic queries ===

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._order

    def __contains__(self, v: object) -> bool:
        return v in self._rotation

    def __len__(self) -> int:
        return len(self._order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self._order == other._order and self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(tuple((v, self._rotation[v]) for v in self._order))

    def __repr__(self) -> str:
        return f"EmbeddedGraph(|V|={len(self)}, |E|={self.num_edges}, |F|={len(self.faces)})"

    def _require(self, v: int) -> None:
        if v not in self._rotation:
            raise UnknownElementError(f"unknown vertex {v}")

    def rotation(self, v: int) -> Tuple[int, ...]:
        self._require(v)
        return self._rotation[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotation(v)

    def degree(self, v: int) -> int:
        return len(self.rotation(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._rotation and v in self._position[u]

    def require_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise NotAnEdgeError(u, v)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted({edge_key(u, v) for u in self._order for v in self._rotation[u]}))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self._rotation.values()), default=0)

    def clockwise_after(self, v: int, u: int) -> int:
        """Neighbor of v immediately following u in the clockwise rotation"""
        pos = self._position[v][u]
        nbrs = self._rotation[v]
        return nbrs[(pos + 1) % len(nbrs)]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        return (v, self.clockwise_after(v, u))

    # === Faces ===

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def _edgeless_faces(self) -> Dict[int, int]:
        return {
            face.index: v
            for face, v in zip(
                (f for f in self.faces if not f.walk),
                (v for v in self._order if not self._rotation[v]),
            )
        }

    @cached_property
    def dart_face(self) -> Dict[Dart, int]:
        return {dart: face.index for face in self.faces for dart in face.walk}

    def face(self, index: int) -> Face:
        if not 0 <= index < len(self.faces):
            raise UnknownElementError(f"unknown face {index}")
        return self.faces[index]

    def faces_at_edge(self, u: int, v: int) -> Tuple[Face, Face]:
        """Faces on the two sides of edge uv (the same face twice for a bridge)"""
        self.require_edge(u, v)
        return self.faces[self.dart_face[(u, v)]], self.faces[self.dart_face[(v, u)]]

    def faces_at_vertex(self, v: int) -> List[Face]:
        """Faces around v in rotation order, one per outgoing dart"""
        return [self.faces[self.dart_face[(v, w)]] for w in self.rotation(v)]

    def face_vertices(self, face: Face) -> Tuple[int, ...]:
        if face.walk:
            return face.vertices
        return (self._edgeless_faces[face.index],)

    # === Derived views ===

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Shared read-only networkx view; use as_networkx() for a mutable copy"""
        graph = nx.Graph()
        graph.add_nodes_from(self._order)
        graph.add_edges_from((u, v) for u in self._order for v in self._rotation[u])
        return graph

    def as_networkx(self) -> nx.Graph:
        return self.nx_view.copy()

    def is_connected(self) -> bool:
        return len(self) > 0 and nx.is_connected(self.nx_view)

    def require_connected(self) -> None:
        if len(self) == 0:
            raise DisconnectedGraphError(0)
        count = nx.number_connected_components(self.nx_view)
        if count != 1:
            raise DisconnectedGraphError(count)

    def components(self) -> List["EmbeddedGraph"]:
        """Each connected component as its own rotation system, in vertex order"""
        parts = []
        seen = set()
        graph = self.nx_view
        for v in self._order:
            if v in seen:
                continue
            comp = nx.node_connected_component(graph, v)
            seen |= comp
            parts.append(EmbeddedGraph({w: self._rotation[w] for w in self._order if w in comp}))
        return parts

    def mirror(self) -> "EmbeddedGraph":
        """Mirror embedding: every rotation reversed"""
        return EmbeddedGraph({v: tuple(reversed(self._rotation[v])) for v in self._order})

    def distances_from(self, sources: Iterable[int], radius: int) -> Dict[int, int]:
        """Vertices within `radius` of any source, with their distance"""
        return dict(nx.multi_source_dijkstra_path_length(self.nx_view, set(sources), cutoff=radius))


def trace_faces(g: EmbeddedGraph) -> List[Face]:
    """
    Trace every facial walk. Darts are visited in vertex order then rotation
    order, which fixes face indices. An isolated vertex gets one empty face.
    """
    faces: List[Face] = []
    visited = set()
    for u in g.vertices:
        nbrs = g.rotation(u)
        if not nbrs:
            faces.append(Face(index=len(faces), walk=()))
            continue
        for v in nbrs:
            if (u, v) in visited:
                continue
            walk = []
            dart = (u, v)
            while dart not in visited:
                visited.add(dart)
                walk.append(dart)
                dart = g.next_dart(dart)
            faces.append(Face(index=len(faces), walk=tuple(walk)))
    return faces


# === Text format ===

def parse_rotation(text: str) -> EmbeddedGraph:
    """
    Parse '<id>: <n1> <n2> ...' lines (clockwise neighbors); '#' starts a
    comment and blank lines are ignored.
    """
    rotation: Dict[int, List[int]] = {}
    lines: Dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise EmbeddingError(f"expected '<id>: <neighbors>', got {raw.strip()!r}", lineno)
        try:
            v = int(head.strip())
            nbrs = [int(tok) for tok in tail.split()]
        except ValueError:
            raise EmbeddingError(f"non-integer vertex id in {raw.strip()!r}", lineno)
        if v <= 0 or any(w <= 0 for w in nbrs):
            raise EmbeddingError("vertex ids must be positive integers", lineno)
        if v in rotation:
            raise EmbeddingError(f"vertex {v} listed twice", lineno)
        rotation[v] = nbrs
        lines[v] = lineno
    return EmbeddedGraph(rotation, lines)


def serialize_rotation(g: EmbeddedGraph) -> str:
    out = []
    for v in g.vertices:
        nbrs = " ".join(str(w) for w in g.rotation(v))
        out.append(f"{v}: {nbrs}" if nbrs else f"{v}:")
    return "\n".join(out) + "\n"


def load_graph(path: str) -> EmbeddedGraph:
    with open(path, "r", encoding="utf-8") as f:
        return parse_rotation(f.read())
