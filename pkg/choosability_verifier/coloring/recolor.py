"""
Directed recoloring: change the color of at least one target edge while
keeping a proper coloring, by rotating along a cycle or cascading along a
path of the availability digraph
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional

import networkx as nx

from ..exceptions import MalformedInstanceError
from .solver import Coloring, EdgeSystem, is_proper

logger = logging.getLogger(__name__)


@dataclass
class RecolorInstance:
    """
    Recolorable edges with their current proper coloring and the colors
    each may take. By default every current color must be allowed for its
    own edge; `relaxed` lifts that.
    """
    system: EdgeSystem
    current: Dict[str, int]
    allowed: Dict[str, FrozenSet[int]]
    targets: FrozenSet[str]
    relaxed: bool = field(default=False)

    def __post_init__(self):
        labels = set(self.system.labels)
        if set(self.current) != labels or set(self.allowed) != labels:
            raise MalformedInstanceError("current and allowed colors must cover exactly the recolorable edges")
        if not self.targets <= labels:
            raise MalformedInstanceError("targets must be recolorable edges")
        if not is_proper(self.system, self.current):
            raise MalformedInstanceError("current coloring is not proper")
        if not self.relaxed:
            outside = [e for e in self.system.labels if self.current[e] not in self.allowed[e]]
            if outside:
                raise MalformedInstanceError(f"current color not allowed on {', '.join(outside)}")

    def accepts(self, coloring: Mapping[str, int]) -> bool:
        """Proper, every changed edge on an allowed color, and some target changed"""
        return (
            all(coloring[e] in self.allowed[e] for e in self.system.labels if coloring[e] != self.current[e])
            and is_proper(self.system, coloring)
            and any(coloring[t] != self.current[t] for t in self.targets)
        )


def availability_digraph(inst: RecolorInstance) -> nx.DiGraph:
    """Arc x -> y when x and y are incident and y may take x's current color"""
    graph = nx.DiGraph()
    graph.add_nodes_from(inst.system.labels)
    for y in inst.system.labels:
        for x in inst.system.incident(y):
            if inst.current[x] in inst.allowed[y]:
                graph.add_edge(x, y)
    return graph


def _free_colors(inst: RecolorInstance, label: str) -> List[int]:
    around = {inst.current[f] for f in inst.system.incident(label)}
    return sorted(c for c in inst.allowed[label] if c != inst.current[label] and c not in around)


def _rotations(inst: RecolorInstance, graph: nx.DiGraph) -> Iterator[Coloring]:
    for cycle in nx.simple_cycles(graph):
        if not inst.targets.intersection(cycle):
            continue
        moved = dict(inst.current)
        for i, label in enumerate(cycle):
            moved[cycle[(i + 1) % len(cycle)]] = inst.current[label]
        yield moved


def _direct(inst: RecolorInstance) -> Iterator[Coloring]:
    for target in sorted(inst.targets, key=inst.system.index.__getitem__):
        for color in _free_colors(inst, target):
            yield {**inst.current, target: color}


def _cascades(inst: RecolorInstance, graph: nx.DiGraph) -> Iterator[Coloring]:
    for target in sorted(inst.targets, key=inst.system.index.__getitem__):
        for source in inst.system.labels:
            if source == target:
                continue
            starts = _free_colors(inst, source)
            if not starts:
                continue
            for path in nx.all_simple_paths(graph, source, target):
                for color in starts:
                    moved = dict(inst.current)
                    moved[source] = color
                    for prev, label in zip(path, path[1:]):
                        moved[label] = inst.current[prev]
                    yield moved


def _displace(inst: RecolorInstance, moved: Dict[str, int]) -> Iterator[Coloring]:
    clash = next(
        (y for x in moved for y in sorted(inst.system.incident(x), key=inst.system.index.__getitem__)
         if y not in moved and inst.current[y] == moved[x]),
        None,
    )
    if clash is None:
        yield {**inst.current, **moved}
        return
    for color in sorted(inst.allowed[clash] - {inst.current[clash]}):
        if any(moved.get(f) == color for f in inst.system.incident(clash)):
            continue
        moved[clash] = color
        yield from _displace(inst, moved)
        del moved[clash]


def _displacements(inst: RecolorInstance) -> Iterator[Coloring]:
    # each edge moves at most once; an edge still on a color some moved
    # neighbor took has to move next
    for target in sorted(inst.targets, key=inst.system.index.__getitem__):
        for color in sorted(inst.allowed[target] - {inst.current[target]}):
            yield from _displace(inst, {target: color})


def recolor_rotate_or_cascade(inst: RecolorInstance) -> Optional[Coloring]:
    """
    Rotate colors along a directed cycle through a target; failing that,
    give a target a color none of its incident edges holds; failing that,
    move some edge to a free color and shift colors along a directed path
    ending at a target. When none of these applies, the cascade branches:
    a target takes a new color and every edge it displaces moves on in
    turn, which reaches any recoloring a full search would find. Every
    candidate is checked for properness before it is returned.
    """
    graph = availability_digraph(inst)
    strategies = (_rotations(inst, graph), _direct(inst), _cascades(inst, graph), _displacements(inst))
    for strategy in strategies:
        for coloring in strategy:
            if inst.accepts(coloring):
                return coloring
    logger.debug(f"[Recolor] no rotation or cascade on {len(inst.system)} edges")
    return None


def brute_force_recolor(inst: RecolorInstance) -> Optional[Coloring]:
    """First accepted recoloring, each edge keeping its color or taking an allowed one"""
    labels = inst.system.labels
    for colors in product(*(sorted(inst.allowed[e] | {inst.current[e]}) for e in labels)):
        coloring = dict(zip(labels, colors))
        if inst.accepts(coloring):
            return coloring
    return None
