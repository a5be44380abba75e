"""
Exact list edge coloring by backtracking
"""
import logging
from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from ..exceptions import MalformedInstanceError, NotAnEdgeError
from ..graph.embedding import EmbeddedGraph, edge_key

logger = logging.getLogger(__name__)

Lists = Mapping[str, Iterable[int]]
Coloring = Dict[str, int]


class EdgeSystem:
    """
    Abstract edge list: label -> (x, y) endpoints in a fixed label order.
    Two labels are incident when they share an endpoint.
    """

    def __init__(self, endpoints: Mapping[str, Tuple[int, int]]):
        self.endpoints: Dict[str, Tuple[int, int]] = dict(endpoints)
        self.labels: Tuple[str, ...] = tuple(self.endpoints)
        self.index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}

        at_vertex: Dict[int, List[str]] = defaultdict(list)
        for label, (x, y) in self.endpoints.items():
            if x == y:
                raise MalformedInstanceError(f"edge {label} is a loop at {x}")
            at_vertex[x].append(label)
            at_vertex[y].append(label)
        self._incident: Dict[str, FrozenSet[str]] = {
            label: frozenset(f for v in self.endpoints[label] for f in at_vertex[v] if f != label)
            for label in self.labels
        }

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "EdgeSystem":
        return cls({f"{x}-{y}": (x, y) for x, y in pairs})

    @classmethod
    def from_graph(cls, g: EmbeddedGraph) -> "EdgeSystem":
        return cls.from_pairs(g.edges)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.endpoints

    def __repr__(self) -> str:
        return f"EdgeSystem({len(self)} edges)"

    def incident(self, label: str) -> FrozenSet[str]:
        return self._incident[label]

    def restrict(self, labels: Iterable[str]) -> "EdgeSystem":
        keep = set(labels)
        return EdgeSystem({label: self.endpoints[label] for label in self.labels if label in keep})

    def label_of(self, u: int, v: int) -> str:
        key = edge_key(u, v)
        for label, ends in self.endpoints.items():
            if edge_key(*ends) == key:
                return label
        raise NotAnEdgeError(u, v)


def path_system(n: int) -> EdgeSystem:
    return EdgeSystem.from_pairs((i, i + 1) for i in range(1, n + 1))


def cycle_system(n: int) -> EdgeSystem:
    return EdgeSystem.from_pairs((i, i % n + 1) for i in range(1, n + 1))


def star_system(n: int) -> EdgeSystem:
    return EdgeSystem.from_pairs((0, i) for i in range(1, n + 1))


def is_proper(system: EdgeSystem, coloring: Mapping[str, int]) -> bool:
    """No two incident colored edges share a color"""
    for label, color in coloring.items():
        for other in system.incident(label):
            if coloring.get(other) == color:
                return False
    return True


# === Solver ===

def color_edges(
    system: EdgeSystem,
    lists: Lists,
    fixed: Optional[Mapping[str, int]] = None,
    reduce: bool = True,
) -> Optional[Coloring]:
    """
    Proper coloring of every edge, extending `fixed`, with each free edge
    colored from its list; None when no such coloring exists.

    With `reduce`, edges whose list is longer than their count of uncolored
    incident edges are peeled off first and colored greedily after the core
    is solved. Search picks the edge with the smallest residual list (lowest
    label index on ties) and tries colors in ascending order.
    """
    fixed = dict(fixed or {})
    for label in fixed:
        if label not in system:
            raise MalformedInstanceError(f"fixed edge {label} is not in the edge system")
    if not is_proper(system, fixed):
        raise MalformedInstanceError("fixed partial coloring is not proper")

    free = [label for label in system.labels if label not in fixed]
    missing = [label for label in free if label not in lists]
    if missing:
        raise MalformedInstanceError(f"no list for edge(s) {', '.join(missing)}")

    domains: Dict[str, Set[int]] = {
        label: set(lists[label]) - {fixed[f] for f in system.incident(label) if f in fixed}
        for label in free
    }
    peeled = _peel(system, domains) if reduce else []
    skipped = set(peeled)
    core = {label: set(d) for label, d in domains.items() if label not in skipped}

    solution = _search(system, core, {})
    if solution is None:
        return None
    coloring = {**fixed, **solution}
    for label in reversed(peeled):
        used = {coloring[f] for f in system.incident(label) if f in coloring}
        coloring[label] = min(domains[label] - used)
    return {label: coloring[label] for label in system.labels}


def _peel(system: EdgeSystem, domains: Mapping[str, Set[int]]) -> List[str]:
    remaining = set(domains)
    peeled: List[str] = []
    progress = True
    while progress:
        progress = False
        for label in system.labels:
            if label not in remaining:
                continue
            load = sum(1 for f in system.incident(label) if f in remaining)
            if len(domains[label]) > load:
                remaining.discard(label)
                peeled.append(label)
                progress = True
    return peeled


def _search(system: EdgeSystem, domains: Dict[str, Set[int]], assigned: Coloring) -> Optional[Coloring]:
    if not domains:
        return dict(assigned)
    label = min(domains, key=lambda e: (len(domains[e]), system.index[e]))
    rest = {e: d for e, d in domains.items() if e != label}
    for color in sorted(domains[label]):
        pruned = {}
        wiped = False
        for e, d in rest.items():
            if e in system.incident(label) and color in d:
                d = d - {color}
                if not d:
                    wiped = True
                    break
            pruned[e] = d
        if wiped:
            continue
        assigned[label] = color
        found = _search(system, pruned, assigned)
        if found is not None:
            return found
        del assigned[label]
    return None


# === List assignment text format ===

def format_assignment(system: EdgeSystem, lists: Lists) -> str:
    """One 'x y : c1 c2 ...' line per edge, in label order"""
    out = []
    for label in system.labels:
        if label not in lists:
            continue
        x, y = system.endpoints[label]
        colors = " ".join(str(c) for c in sorted(lists[label]))
        out.append(f"{x} {y} : {colors}")
    return "\n".join(out) + "\n"


def parse_assignment(text: str, system: EdgeSystem) -> Dict[str, FrozenSet[int]]:
    lists: Dict[str, FrozenSet[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        ends = head.split()
        if not sep or len(ends) != 2:
            raise MalformedInstanceError(f"line {lineno}: expected 'u v : c1 c2 ...', got {raw.strip()!r}")
        try:
            u, v = int(ends[0]), int(ends[1])
            colors = frozenset(int(tok) for tok in tail.split())
        except ValueError:
            raise MalformedInstanceError(f"line {lineno}: non-integer token in {raw.strip()!r}")
        lists[system.label_of(u, v)] = colors
    return lists


def lists_payload(lists: Lists, order: Sequence[str]) -> Dict[str, List[int]]:
    """JSON-friendly witness: label -> sorted colors"""
    return {label: sorted(lists[label]) for label in order if label in lists}
