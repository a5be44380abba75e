"""
Detection of the reducible configurations C1-C11 in embedded graphs
"""
import logging
from itertools import permutations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .graph.embedding import EmbeddedGraph
from .graph.neighbors import base_class, neighbor_classification
from .models import BaseClass, ConfigId, ConfigMatch, NeighborClass, SpecialClass

logger = logging.getLogger(__name__)

# Role names in binding order, per configuration
ROLES: Dict[ConfigId, Tuple[str, ...]] = {
    ConfigId.C1: ("u", "v"),
    ConfigId.C2: ("u", "v", "w", "x"),
    ConfigId.C3: ("u", "v1", "v2", "v3"),
    ConfigId.C4: ("u", "v1", "v2", "v3", "v4"),
    ConfigId.C5: ("u", "v1", "v2", "v3", "v4"),
    ConfigId.C6: ("u", "v1", "v2", "v3", "v4", "v5"),
    ConfigId.C7: ("u", "v1", "v2", "v3", "v4"),
    ConfigId.C8: ("u", "v", "w", "x", "y"),
    ConfigId.C9: ("u", "v1", "v2", "v3"),
    ConfigId.C10: ("u", "v1", "v2", "v3"),
    ConfigId.C11: ("u", "v", "w", "x"),
}

# Roles whose edge to u must be weak or semi-weak; their faces are reported as witnesses
FACE_ROLES: Dict[ConfigId, Tuple[str, ...]] = {
    ConfigId.C3: ("v1", "v2"),
    ConfigId.C4: ("v1", "v2"),
    ConfigId.C5: ("v1", "v2", "v3", "v4"),
    ConfigId.C6: ("v1",),
    ConfigId.C7: ("v1", "v2", "v3", "v4"),
    ConfigId.C9: ("v1", "v2", "v3"),
    ConfigId.C10: ("v2",),
}

# Interchangeable role groups (each tuple is permuted freely)
SYMMETRIES: Dict[ConfigId, Tuple[Tuple[str, ...], ...]] = {
    ConfigId.C1: (("u", "v"),),
    ConfigId.C2: (("u", "w"), ("v", "x")),
    ConfigId.C3: (("v1", "v2"),),
    ConfigId.C4: (("v3", "v4"),),
    ConfigId.C5: (("v2", "v3"),),
    ConfigId.C6: (("v3", "v4"),),
    ConfigId.C7: (("v3", "v4"),),
    ConfigId.C8: (),
    ConfigId.C9: (("v1", "v2"),),
    ConfigId.C10: (),
    ConfigId.C11: (("v", "x"),),
}

S_CLASSES = (SpecialClass.S2, SpecialClass.S3, SpecialClass.S4)


class _Host:
    """Graph plus a memo of neighbor classes, shared by one matching pass"""

    def __init__(self, g: EmbeddedGraph):
        self.g = g
        self._classes: Dict[Tuple[int, int], NeighborClass] = {}

    def deg(self, v: int) -> int:
        return self.g.degree(v)

    def nbrs(self, v: int) -> Tuple[int, ...]:
        return self.g.rotation(v)

    def cls(self, u: int, v: int) -> NeighborClass:
        key = (u, v)
        if key not in self._classes:
            self._classes[key] = neighbor_classification(self.g, u, v)
        return self._classes[key]

    def weak(self, u: int, v: int) -> bool:
        return self.cls(u, v).base == BaseClass.WEAK

    def semi_weak(self, u: int, v: int) -> bool:
        return self.cls(u, v).base == BaseClass.SEMI_WEAK

    def centres(self, degree: int) -> Iterator[int]:
        return (u for u in self.g.vertices if self.deg(u) == degree)


def _distinct(*vs: int) -> bool:
    return len(set(vs)) == len(vs)


# === Matchers (search) ===

def _find_c1(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.g.vertices:
        for v in h.nbrs(u):
            if h.deg(u) + h.deg(v) <= 10:
                yield (u, v)


def _find_c2(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(3):
        for v in h.nbrs(u):
            for w in h.nbrs(v):
                if w == u or h.deg(w) != 3:
                    continue
                for x in h.nbrs(w):
                    if x not in (u, v) and h.g.has_edge(x, u):
                        yield (u, v, w, x)


def _find_c3(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(8):
        weak3 = [v for v in h.nbrs(u) if h.deg(v) == 3 and h.weak(u, v)]
        small = [v for v in h.nbrs(u) if h.deg(v) <= 5]
        for v1, v2 in permutations(weak3, 2):
            for v3 in small:
                if _distinct(v1, v2, v3):
                    yield (u, v1, v2, v3)


def _find_c4(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(8):
        weak3 = [v for v in h.nbrs(u) if h.deg(v) == 3 and h.weak(u, v)]
        semi3 = [v for v in h.nbrs(u) if h.deg(v) == 3 and h.semi_weak(u, v)]
        small = [v for v in h.nbrs(u) if h.deg(v) <= 5]
        for v1 in weak3:
            for v2 in semi3:
                for v3, v4 in permutations(small, 2):
                    if _distinct(v1, v2, v3, v4):
                        yield (u, v1, v2, v3, v4)


def _find_c5(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(8):
        weak = [v for v in h.nbrs(u) if h.weak(u, v)]
        for v1 in (v for v in weak if h.deg(v) == 3):
            fours = [v for v in weak if h.deg(v) == 4]
            for v2, v3 in permutations(fours, 2):
                for v4 in (v for v in weak if h.deg(v) <= 5):
                    if _distinct(v1, v2, v3, v4):
                        yield (u, v1, v2, v3, v4)


def _find_c6(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(8):
        nbrs = h.nbrs(u)
        small = [v for v in nbrs if h.deg(v) <= 5]
        for v1 in (v for v in nbrs if h.deg(v) == 3 and h.weak(u, v)):
            for v2 in (v for v in nbrs if h.deg(v) == 4):
                for v3, v4 in permutations(small, 2):
                    for v5 in (v for v in nbrs if h.deg(v) <= 7):
                        if _distinct(v1, v2, v3, v4, v5):
                            yield (u, v1, v2, v3, v4, v5)


def _find_c7(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(8):
        weak = [v for v in h.nbrs(u) if h.weak(u, v)]
        weak_small = [v for v in weak if h.deg(v) <= 5]
        e2 = [v for v in weak if h.cls(u, v).special == SpecialClass.E2]
        for v1 in (v for v in weak if h.deg(v) == 3):
            for v2 in e2:
                for v3, v4 in permutations(weak_small, 2):
                    if _distinct(v1, v2, v3, v4):
                        yield (u, v1, v2, v3, v4)


def _find_c8(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(7):
        for w in (w for w in h.nbrs(u) if h.deg(w) == 6):
            common = [z for z in h.nbrs(w) if h.deg(z) == 5 and h.g.has_edge(z, u)]
            for v, x in permutations(common, 2):
                for y in h.nbrs(x):
                    if h.deg(y) == 6 and _distinct(u, v, w, x, y):
                        yield (u, v, w, x, y)


def _find_c9(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(7):
        weak = [v for v in h.nbrs(u) if h.weak(u, v)]
        fours = [v for v in weak if h.deg(v) == 4]
        thirds = [v for v in weak if h.deg(v) == 4 or h.cls(u, v).special in S_CLASSES]
        for v1, v2 in permutations(fours, 2):
            for v3 in thirds:
                if _distinct(v1, v2, v3):
                    yield (u, v1, v2, v3)


def _find_c10(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(7):
        nbrs = h.nbrs(u)
        for v2 in (v for v in nbrs if h.cls(u, v).special == SpecialClass.S3):
            for v1 in (v for v in nbrs if h.deg(v) == 4):
                for v3 in (v for v in nbrs if h.deg(v) <= 5):
                    if _distinct(v1, v2, v3):
                        yield (u, v1, v2, v3)


def _find_c11(h: _Host) -> Iterator[Tuple[int, ...]]:
    for u in h.centres(5):
        for w in (w for w in h.nbrs(u) if h.deg(w) == 6):
            common = [z for z in h.nbrs(w) if h.deg(z) == 6 and h.g.has_edge(z, u)]
            for v, x in permutations(common, 2):
                yield (u, v, w, x)


FINDERS: Dict[ConfigId, Callable[[_Host], Iterator[Tuple[int, ...]]]] = {
    ConfigId.C1: _find_c1,
    ConfigId.C2: _find_c2,
    ConfigId.C3: _find_c3,
    ConfigId.C4: _find_c4,
    ConfigId.C5: _find_c5,
    ConfigId.C6: _find_c6,
    ConfigId.C7: _find_c7,
    ConfigId.C8: _find_c8,
    ConfigId.C9: _find_c9,
    ConfigId.C10: _find_c10,
    ConfigId.C11: _find_c11,
}


# === Symmetry canonicalization ===

def _symmetry_groups(config: ConfigId, binding: Dict[str, int], g: EmbeddedGraph) -> Tuple[Tuple[str, ...], ...]:
    if config == ConfigId.C9 and g.degree(binding["v3"]) == 4:
        return (("v1", "v2", "v3"),)
    return SYMMETRIES[config]


def canonical_binding(config: ConfigId, binding: Dict[str, int], g: EmbeddedGraph) -> Dict[str, int]:
    """Smallest image of the binding under the configuration's role symmetries"""
    roles = ROLES[config]
    images = [dict(binding)]
    for group in _symmetry_groups(config, binding, g):
        expanded = []
        for image in images:
            values = [image[r] for r in group]
            for perm in permutations(values):
                moved = dict(image)
                moved.update(zip(group, perm))
                expanded.append(moved)
        images = expanded
    return min(images, key=lambda b: tuple(b[r] for r in roles))


def _witness_faces(config: ConfigId, binding: Dict[str, int], g: EmbeddedGraph) -> List[int]:
    faces: List[int] = []
    for role in FACE_ROLES.get(config, ()):
        for index in base_class(g, binding["u"], binding[role])[1]:
            if index not in faces:
                faces.append(index)
    return faces


def match_config(g: EmbeddedGraph, config: ConfigId, host: Optional[_Host] = None) -> List[ConfigMatch]:
    """All occurrences of one configuration, one per symmetry class, in sorted order"""
    config = ConfigId(config)
    h = host or _Host(g)
    roles = ROLES[config]
    seen = set()
    matches = []
    for values in FINDERS[config](h):
        binding = canonical_binding(config, dict(zip(roles, values)), g)
        key = tuple(binding[r] for r in roles)
        if key in seen:
            continue
        seen.add(key)
        matches.append(
            ConfigMatch(config=config, binding=binding, witness_faces=_witness_faces(config, binding, g))
        )
    matches.sort(key=ConfigMatch.sort_key)
    return matches


def match_all(g: EmbeddedGraph) -> Dict[ConfigId, List[ConfigMatch]]:
    h = _Host(g)
    found = {config: match_config(g, config, host=h) for config in ConfigId}
    logger.debug(f"[Configs] {summarize(found)}")
    return found


def summarize(found: Dict[ConfigId, List[ConfigMatch]]) -> Dict[str, int]:
    """Match counts per configuration, non-empty entries only"""
    return {config.value: len(matches) for config, matches in found.items() if matches}


# === Independent re-check ===

def _nbr(g: EmbeddedGraph, u: int, v: int) -> bool:
    return g.has_edge(u, v)


def _weak(g: EmbeddedGraph, u: int, v: int) -> bool:
    return _nbr(g, u, v) and base_class(g, u, v)[0] == BaseClass.WEAK


def _special(g: EmbeddedGraph, u: int, v: int) -> SpecialClass:
    return neighbor_classification(g, u, v).special


def _clauses(config: ConfigId, b: Dict[str, int], g: EmbeddedGraph) -> bool:
    d = g.degree
    if config == ConfigId.C1:
        return _nbr(g, b["u"], b["v"]) and d(b["u"]) + d(b["v"]) <= 10
    if config == ConfigId.C2:
        u, v, w, x = b["u"], b["v"], b["w"], b["x"]
        cycle = _nbr(g, u, v) and _nbr(g, v, w) and _nbr(g, w, x) and _nbr(g, x, u)
        return cycle and d(u) == 3 and d(w) == 3
    if config == ConfigId.C8:
        u, v, w, x, y = b["u"], b["v"], b["w"], b["x"], b["y"]
        return (
            d(u) == 7
            and all(_nbr(g, u, z) for z in (v, w, x))
            and _nbr(g, w, v) and _nbr(g, w, x)
            and d(w) == 6 and d(v) == 5 and d(x) == 5
            and d(y) == 6 and y != w and _nbr(g, x, y)
        )
    if config == ConfigId.C11:
        u, v, w, x = b["u"], b["v"], b["w"], b["x"]
        return (
            d(u) == 5
            and all(_nbr(g, u, z) and d(z) == 6 for z in (v, w, x))
            and _nbr(g, w, v) and _nbr(g, w, x)
        )

    u = b["u"]
    if not all(_nbr(g, u, b[r]) for r in ROLES[config][1:]):
        return False
    if config == ConfigId.C3:
        return (
            d(u) == 8
            and d(b["v1"]) == 3 and _weak(g, u, b["v1"])
            and d(b["v2"]) == 3 and _weak(g, u, b["v2"])
            and d(b["v3"]) <= 5
        )
    if config == ConfigId.C4:
        semi = base_class(g, u, b["v2"])[0] == BaseClass.SEMI_WEAK
        return (
            d(u) == 8
            and d(b["v1"]) == 3 and _weak(g, u, b["v1"])
            and d(b["v2"]) == 3 and semi
            and d(b["v3"]) <= 5 and d(b["v4"]) <= 5
        )
    if config == ConfigId.C5:
        return (
            d(u) == 8
            and all(_weak(g, u, b[r]) for r in ("v1", "v2", "v3", "v4"))
            and d(b["v1"]) == 3 and d(b["v2"]) == 4 and d(b["v3"]) == 4 and d(b["v4"]) <= 5
        )
    if config == ConfigId.C6:
        return (
            d(u) == 8
            and d(b["v1"]) == 3 and _weak(g, u, b["v1"])
            and d(b["v2"]) == 4
            and d(b["v3"]) <= 5 and d(b["v4"]) <= 5
            and d(b["v5"]) <= 7
        )
    if config == ConfigId.C7:
        return (
            d(u) == 8
            and all(_weak(g, u, b[r]) for r in ("v1", "v2", "v3", "v4"))
            and d(b["v1"]) == 3
            and _special(g, u, b["v2"]) == SpecialClass.E2
            and d(b["v3"]) <= 5 and d(b["v4"]) <= 5
        )
    if config == ConfigId.C9:
        v3 = b["v3"]
        third = d(v3) == 4 or _special(g, u, v3) in S_CLASSES
        return (
            d(u) == 7
            and all(_weak(g, u, b[r]) for r in ("v1", "v2", "v3"))
            and d(b["v1"]) == 4 and d(b["v2"]) == 4
            and third
        )
    if config == ConfigId.C10:
        return (
            d(u) == 7
            and d(b["v1"]) == 4
            and _special(g, u, b["v2"]) == SpecialClass.S3
            and d(b["v3"]) <= 5
        )
    return False


def verify_match(g: EmbeddedGraph, m: ConfigMatch) -> bool:
    """Re-check every clause of a reported match from scratch"""
    roles = ROLES[m.config]
    if set(m.binding) != set(roles):
        return False
    values: Sequence[int] = [m.binding[r] for r in roles]
    if len(set(values)) != len(values) or any(v not in g for v in values):
        return False
    return _clauses(m.config, m.binding, g)
