"""
Embedded planar graphs: rotation systems, faces, neighbor classes, generation
"""
from .embedding import (
    EmbeddedGraph,
    Face,
    edge_key,
    load_graph,
    parse_rotation,
    serialize_rotation,
    trace_faces,
)
from .generator import PlanarBuilder, generate_planar
from .neighbors import (
    base_class,
    is_semi_weak,
    is_weak,
    neighbor_classification,
    triangle_third_vertices,
)

__all__ = [
    "EmbeddedGraph",
    "Face",
    "edge_key",
    "load_graph",
    "parse_rotation",
    "serialize_rotation",
    "trace_faces",
    "PlanarBuilder",
    "generate_planar",
    "base_class",
    "is_semi_weak",
    "is_weak",
    "neighbor_classification",
    "triangle_third_vertices",
]
