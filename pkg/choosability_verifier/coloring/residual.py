"""
Residual list sizes of uncolored edges after the rest of a graph is colored
"""
from typing import Dict, Mapping, Protocol, Sequence

from ..config import NUM_COLORS
from ..exceptions import ResidualSizeError
from .solver import EdgeSystem


class ResidualShape(Protocol):
    system: EdgeSystem
    degrees: Mapping[int, int]
    uncolored: Sequence[str]


def residual_sizes(gadget: ResidualShape) -> Dict[str, int]:
    """
    Colors left for each uncolored edge xy: every other edge at x or y
    blocks one color unless it is itself uncolored.
    """
    uncolored = set(gadget.uncolored)
    sizes: Dict[str, int] = {}
    for label in gadget.uncolored:
        x, y = gadget.system.endpoints[label]
        blocked = gadget.degrees[x] - 1 + gadget.degrees[y] - 1
        free_neighbors = sum(1 for f in gadget.system.incident(label) if f in uncolored)
        size = NUM_COLORS - (blocked - free_neighbors)
        if size <= 0:
            raise ResidualSizeError(f"edge {label} would keep {size} colors out of {NUM_COLORS}")
        sizes[label] = size
    return sizes
