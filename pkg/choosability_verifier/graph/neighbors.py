"""
Weak / semi-weak neighbors and the E2-E4, S2-S4 refinements
"""
from itertools import permutations
from typing import List, Tuple

from ..models import BaseClass, NeighborClass, SpecialClass
from .embedding import EmbeddedGraph, Face


def triangle_third_vertices(g: EmbeddedGraph, a: int, b: int) -> List[int]:
    """Third vertex of each triangular face on the two sides of edge ab"""
    thirds = []
    for face in _distinct_faces(g, a, b):
        if face.degree == 3:
            thirds.extend(x for x in face.vertices if x not in (a, b))
    return thirds


def _distinct_faces(g: EmbeddedGraph, a: int, b: int) -> List[Face]:
    left, right = g.faces_at_edge(a, b)
    return [left] if left.index == right.index else [left, right]


def base_class(g: EmbeddedGraph, u: int, v: int) -> Tuple[BaseClass, List[int]]:
    """Face pattern of edge uv and the indices of the two witnessing faces"""
    left, right = g.faces_at_edge(u, v)
    witness = [left.index, right.index]
    if left.index == right.index:
        return BaseClass.OTHER, []
    degrees = sorted((left.degree, right.degree))
    if degrees == [3, 3]:
        return BaseClass.WEAK, witness
    if degrees == [3, 4]:
        return BaseClass.SEMI_WEAK, witness
    return BaseClass.OTHER, []


def neighbor_classification(g: EmbeddedGraph, u: int, v: int) -> NeighborClass:
    """Classify v as a neighbor of u"""
    base, _ = base_class(g, u, v)
    special = SpecialClass.NONE
    if base == BaseClass.WEAK and g.degree(v) == 5:
        if g.degree(u) == 8:
            special = _e_class(g, u, v)
        elif g.degree(u) == 7:
            special = _s_class(g, u, v)
    return NeighborClass(base=base, special=special)


def is_weak(g: EmbeddedGraph, u: int, v: int) -> bool:
    return base_class(g, u, v)[0] == BaseClass.WEAK


def is_semi_weak(g: EmbeddedGraph, u: int, v: int) -> bool:
    return base_class(g, u, v)[0] == BaseClass.SEMI_WEAK


# === Degree-8 centre ===

def _is_e2(g: EmbeddedGraph, u: int, v: int) -> bool:
    thirds = triangle_third_vertices(g, u, v)
    for i, w1 in enumerate(thirds):
        if g.degree(w1) != 6:
            continue
        others = [w for j, w in enumerate(thirds) if j != i]
        for w2 in triangle_third_vertices(g, v, w1):
            if w2 == u:
                continue
            if g.degree(w2) == 6:
                return True
            # second pattern also needs the other triangle at uv closed by a degree-6 vertex
            if g.degree(w2) == 7 and any(g.degree(w3) == 6 for w3 in others):
                return True
    return False


def _e_class(g: EmbeddedGraph, u: int, v: int) -> SpecialClass:
    if _is_e2(g, u, v):
        return SpecialClass.E2
    if any(g.degree(w) <= 7 for w in triangle_third_vertices(g, u, v)):
        return SpecialClass.E3
    return SpecialClass.E4


# === Degree-7 centre ===

def _is_s2(g: EmbeddedGraph, u: int, v: int) -> bool:
    thirds = triangle_third_vertices(g, u, v)
    return len(thirds) == 2 and thirds[0] != thirds[1] and all(g.degree(w) == 6 for w in thirds)


def _is_s3(g: EmbeddedGraph, u: int, v: int) -> bool:
    thirds = triangle_third_vertices(g, u, v)
    if len(thirds) != 2 or thirds[0] == thirds[1]:
        return False
    rest = [w for w in g.rotation(v) if w != u and w not in thirds]
    if len(rest) != 2:
        return False
    deg = g.degree
    for w1, w4 in permutations(thirds):
        for w2, w3 in permutations(rest):
            chain = (
                w2 in triangle_third_vertices(g, v, w1)
                and w3 in triangle_third_vertices(g, v, w2)
                and w4 in triangle_third_vertices(g, v, w3)
            )
            if chain and deg(w1) == deg(w4) == 7 and deg(w2) == deg(w3) == 6:
                return True
            if deg(w4) == 6 and deg(w2) == 6 and (deg(w1) == 7 or deg(w3) == 7):
                return True
    return False


def _is_s4(g: EmbeddedGraph, u: int, v: int) -> bool:
    if any(g.degree(w) <= 7 for w in triangle_third_vertices(g, u, v)):
        return True
    others = [w for w in g.rotation(v) if w != u]
    has6 = any(g.degree(w) == 6 for w in others)
    has7 = any(g.degree(w) == 7 for w in others)
    return has6 and has7


def _s_class(g: EmbeddedGraph, u: int, v: int) -> SpecialClass:
    if _is_s2(g, u, v):
        return SpecialClass.S2
    if _is_s3(g, u, v):
        return SpecialClass.S3
    if _is_s4(g, u, v):
        return SpecialClass.S4
    return SpecialClass.NONE
