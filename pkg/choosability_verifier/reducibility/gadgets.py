"""
Local gadgets around each configuration: the named edges, the degrees of
their endpoints in the worst case, and which edges are left uncolored
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from ..coloring import EdgeSystem, residual_sizes
from ..exceptions import UnknownGadgetError
from ..models import ConfigId

Deferral = Callable[[Mapping[str, Tuple[int, ...]]], bool]


@dataclass
class Gadget:
    config: Optional[ConfigId]
    variant: str
    system: EdgeSystem = field(repr=False)
    degrees: Dict[int, int] = field(repr=False)
    uncolored: Tuple[str, ...]
    vertex_names: Dict[int, str] = field(default_factory=dict, repr=False)
    expected: Dict[str, int] = field(default_factory=dict, repr=False)
    deferral: Optional[Deferral] = field(default=None, repr=False)
    sizes: Optional[Dict[str, int]] = field(default=None, repr=False)

    @property
    def name(self) -> str:
        return f"{self.config.value if self.config else 'control'}/{self.variant}"

    def uncolored_system(self) -> EdgeSystem:
        return self.system.restrict(self.uncolored)

    def profile(self) -> Dict[str, int]:
        """List sizes the uncolored edges are guaranteed in the worst case"""
        if self.sizes is not None:
            return dict(self.sizes)
        return residual_sizes(self)

    def endpoint_names(self, label: str) -> Tuple[str, str]:
        x, y = self.system.endpoints[label]
        return self.vertex_names[x], self.vertex_names[y]


def _expand(profile: Mapping[int, str]) -> Dict[str, int]:
    return {label: size for size, labels in profile.items() for label in labels.split()}


def _gadget(
    config: ConfigId,
    variant: str,
    degrees: Mapping[str, int],
    edges: Mapping[str, str],
    uncolored: str,
    expected: Mapping[int, str],
    deferral: Optional[Deferral] = None,
) -> Gadget:
    ids = {name: i for i, name in enumerate(degrees, start=1)}
    endpoints = {}
    for label, pair in edges.items():
        x, y = pair.split("-")
        endpoints[label] = (ids[x], ids[y])
    return Gadget(
        config=config,
        variant=variant,
        system=EdgeSystem(endpoints),
        degrees={ids[name]: d for name, d in degrees.items()},
        uncolored=tuple(uncolored.split()),
        vertex_names={i: name for name, i in ids.items()},
        expected=_expand(expected),
        deferral=deferral,
    )


def _equal_pairs(*pairs: Tuple[str, str]) -> Deferral:
    """Lists on each pair are the same 2 colors: the hypothesis a recoloring removes"""
    def holds(lists: Mapping[str, Tuple[int, ...]]) -> bool:
        return all(len(lists[x]) == 2 and lists[x] == lists[y] for x, y in pairs)
    return holds


# === Catalog ===

def _c1() -> List[Gadget]:
    return [_gadget(ConfigId.C1, "default", {"u": 8, "v": 2}, {"uv": "u-v"}, "uv", {1: "uv"})]


def _c2() -> List[Gadget]:
    return [_gadget(
        ConfigId.C2, "default",
        {"u": 3, "v": 8, "w": 3, "x": 8},
        {"a": "u-v", "b": "v-w", "c": "w-x", "d": "x-u"},
        "a b c d",
        {2: "a b c d"},
    )]


def _c3() -> List[Gadget]:
    return [_gadget(
        ConfigId.C3, "default",
        {"u": 8, "v1": 3, "v2": 3, "w1": 8, "x1": 8, "w2": 8, "x2": 8, "v3": 5},
        {
            "c1": "u-v1", "e1": "u-w1", "f1": "u-x1", "a1": "v1-w1", "b1": "x1-v1",
            "c2": "u-v2", "e2": "u-w2", "f2": "u-x2", "a2": "v2-w2", "b2": "x2-v2",
            "g": "u-v3",
        },
        "a1 b1 c1 a2 b2 c2",
        {2: "a1 b1 a2 b2", 3: "c1 c2"},
        deferral=_equal_pairs(("a1", "b1"), ("a2", "b2")),
    )]


def _c4() -> List[Gadget]:
    return [_gadget(
        ConfigId.C4, "default",
        {"u": 8, "v1": 3, "v2": 3, "w1": 8, "x1": 8, "p": 8, "w3": 8, "v3": 5, "v4": 5},
        {
            "c1": "u-v1", "e1": "u-w1", "a1": "v1-w1", "b1": "v1-x1", "f1": "u-x1",
            "c2": "u-v2", "a2": "v2-p", "e2": "u-p", "b2": "v2-w3",
            "g1": "u-v3", "g2": "u-v4",
        },
        "a1 b1 c1 a2 b2 c2",
        {2: "a1 b1 a2 b2", 3: "c1 c2"},
        deferral=_equal_pairs(("a1", "b1"), ("a2", "b2")),
    )]


_C5_SHARED = {
    "a": "u-v1", "b": "u-w1", "c": "u-v2", "d": "u-w2", "f": "u-w3", "h": "u-w4",
    "i": "w4-v1", "j": "v1-w1", "k": "w1-v2", "l": "x2-v2", "m": "v2-w2",
}


def _c5() -> List[Gadget]:
    consecutive = _gadget(
        ConfigId.C5, "consecutive",
        {"u": 8, "v1": 3, "v2": 4, "v3": 4, "v4": 5,
         "w1": 8, "w2": 8, "w3": 8, "w4": 8, "x2": 8, "x3": 8},
        {**_C5_SHARED, "e": "u-v3", "g": "u-v4", "n": "w2-v3", "o": "x3-v3",
         "p": "v3-w3", "q": "w3-v4", "r": "v4-w4"},
        "a b c d e f g h i j k l m n o p q r",
        {2: "l o q r", 4: "b d f h i j k m n p", 7: "g", 9: "a c e"},
    )
    # degree-5 neighbor between w2 and w3, degree-4 neighbor between w3 and w4
    split = _gadget(
        ConfigId.C5, "split",
        {"u": 8, "v1": 3, "v2": 4, "p5": 5, "q4": 4,
         "w1": 8, "w2": 8, "w3": 8, "w4": 8, "x2": 8, "x3": 8},
        {**_C5_SHARED, "e": "u-p5", "g": "u-q4", "n": "w2-p5", "o": "p5-w3",
         "p": "w3-q4", "q": "q4-x3", "r": "q4-w4"},
        "a b c d e f g h i j k l m n o p q r",
        {2: "l n o q", 4: "b d f h i j k m p r", 7: "e", 9: "a c g"},
    )
    return [consecutive, split]


def _c6() -> List[Gadget]:
    return [_gadget(
        ConfigId.C6, "default",
        {"u": 8, "v1": 3, "w1": 8, "w4": 8, "v2": 4, "v3": 5, "v4": 5, "v5": 7},
        {
            "c": "u-v1", "f": "u-w1", "e": "u-w4", "a": "w4-v1", "b": "v1-w1",
            "g1": "u-v2", "g2": "u-v3", "g3": "u-v4", "g4": "u-v5",
        },
        "a b c",
        {2: "a b c"},
        deferral=_equal_pairs(("a", "b")),
    )]


_C7_EDGES = {
    "a": "u-v1", "b": "u-x1", "c": "u-v2", "d": "u-x2", "e": "u-v3", "f": "u-x3",
    "g": "u-v4", "h": "u-x4", "i": "x4-v1", "j": "v1-x1", "k": "x1-v2", "l": "v2-x2",
    "m": "x2-v3", "n": "v3-x3", "o": "x3-v4", "p": "v4-x4",
}


def _c7() -> List[Gadget]:
    uncolored = "a b c d e f g h i j k l m n o p q r s"
    case_a = _gadget(
        ConfigId.C7, "case-a",
        {"u": 8, "v1": 3, "v2": 5, "v3": 5, "v4": 5, "x1": 8, "x2": 6, "x3": 8, "x4": 8, "y": 6, "z": 8},
        {**_C7_EDGES, "q": "v2-z", "r": "v2-y", "s": "y-x2"},
        uncolored,
        {2: "n o p q", 3: "s", 4: "b f h i j k", 5: "m r", 7: "d e g l", 9: "a c"},
    )
    # the E2-neighbor sits third around u; v2/v3 swap roles relative to case A
    case_b = _gadget(
        ConfigId.C7, "case-b",
        {"u": 8, "v1": 3, "v2": 5, "v3": 5, "v4": 5, "x1": 8, "x2": 6, "x3": 6, "x4": 8, "y": 7, "z": 8},
        {**_C7_EDGES, "c": "u-v3", "e": "u-v2", "k": "x1-v3", "l": "v3-x2",
         "m": "x2-v2", "n": "v2-x3", "q": "v2-z", "r": "v2-y", "s": "y-x3"},
        uncolored,
        {2: "k p q s", 4: "b h i j l r", 5: "o", 6: "d m", 7: "c f g n", 9: "a e"},
    )
    case_c = _gadget(
        ConfigId.C7, "case-c",
        {"u": 8, "v1": 3, "v2": 5, "v3": 5, "v4": 5, "x1": 8, "x2": 8, "x3": 6, "x4": 8, "y": 6, "z": 8},
        {**_C7_EDGES, "c": "u-v3", "e": "u-v2", "k": "x1-v3", "l": "v3-x2",
         "m": "x2-v2", "n": "v2-x3", "q": "v2-z", "r": "v2-y", "s": "y-x3"},
        uncolored,
        {2: "k l p q", 3: "s", 4: "b d h i j m", 5: "o r", 7: "c f g n", 9: "a e"},
    )
    return [case_a, case_b, case_c]


def _c8() -> List[Gadget]:
    return [_gadget(
        ConfigId.C8, "default",
        {"u": 7, "v": 5, "w": 6, "x": 5, "y": 6},
        {"a": "x-y", "b": "w-x", "c": "v-w", "d": "u-v", "e": "x-u", "f": "u-w"},
        "a b c d e f",
        {2: "a d f", 3: "c e", 4: "b"},
    )]


_C9_SHARED = {
    "a": "u-y1", "b": "u-v1", "c": "u-x", "d": "u-v2", "e": "u-y2", "f": "u-v3", "g": "u-z",
    "h": "y1-v1", "i": "v1-w1", "j": "v1-x", "k": "x-v2", "l": "v2-w2", "m": "v2-y2",
}

_C9_APART = {
    "a": "u-y1", "b": "u-v1", "c": "u-y2", "d": "u-v3", "e": "u-y3", "f": "u-v2", "g": "u-y4",
    "h": "y1-v1", "i": "v1-w1", "j": "v1-y2", "k": "y2-v3", "l": "v3-y3", "m": "y3-v2",
    "n": "v2-w2", "o": "v2-y4",
}


def _c9() -> List[Gadget]:
    shared = {"u": 7, "v1": 4, "v2": 4, "v3": 5, "x": 8, "y1": 8, "w1": 8, "w2": 8}
    z_low = _gadget(
        ConfigId.C9, "z-le-7",
        {**shared, "y2": 8, "z": 7},
        {**_C9_SHARED, "n": "y2-v3", "o": "v3-z"},
        "a b c d e f g h i j k l m n o",
        {2: "i l n o", 3: "a h", 4: "c e g j k m", 7: "f", 9: "b d"},
    )
    y2_low = _gadget(
        ConfigId.C9, "y2-le-7",
        {**shared, "y2": 7, "z": 8},
        dict(_C9_SHARED),
        "a b c d e f g h i j k l m",
        {2: "g i l", 3: "a h", 4: "c e j k m", 5: "f", 9: "b d"},
    )
    both_high = _gadget(
        ConfigId.C9, "z-y2-8",
        {**shared, "y2": 8, "z": 8, "p": 8, "q": 6},
        {**_C9_SHARED, "n": "y2-v3", "o": "v3-z", "p": "v3-p", "q": "v3-q"},
        "a b c d e f g h i j k l m n o p q",
        {2: "i l p", 3: "a g h o", 4: "c e j k m n q", 9: "b d f"},
    )
    # the two degree-4 neighbors share no common neighbor
    apart = {"u": 7, "v1": 4, "v3": 5, "v2": 4, "y1": 8, "y3": 8, "y4": 8, "w1": 8, "w2": 8}
    apart_low = _gadget(
        ConfigId.C9, "apart-y2-le-7",
        {**apart, "y2": 7},
        dict(_C9_APART),
        "a b c d e f g h i j k l m n o",
        {2: "i l n", 3: "a g h k o", 4: "e m", 5: "c j", 7: "d", 9: "b f"},
    )
    apart_high = _gadget(
        ConfigId.C9, "apart-y2-y3-8",
        {**apart, "y2": 8, "p": 6, "q": 7},
        {**_C9_APART, "p": "v3-p", "q": "v3-q"},
        "a b c d e f g h i j k l m n o p q",
        {2: "i n", 3: "a g h o q", 4: "c e j k l m p", 9: "b d f"},
    )
    return [z_low, y2_low, both_high, apart_low, apart_high]


def _c10() -> List[Gadget]:
    case_a = _gadget(
        ConfigId.C10, "case-a",
        {"u": 7, "v2": 5, "y": 6, "v1": 4, "v3": 5, "w4": 8, "w3": 7, "w2": 6},
        {"a": "u-v2", "b1": "u-v3", "b2": "u-v1", "c1": "v2-w4", "c2": "v2-w3",
         "c3": "v2-w2", "d": "v2-y", "e": "y-u"},
        "a b1 b2 c1 c2 c3 d e",
        {2: "b1 c1 e", 3: "b2 c2", 4: "c3", 5: "d", 6: "a"},
    )
    case_b = _gadget(
        ConfigId.C10, "case-b",
        {"u": 7, "v2": 5, "y1": 7, "y2": 7, "z1": 6, "z2": 6, "v1": 4},
        {"a": "u-v2", "b": "v2-y1", "c": "v2-z1", "d": "v2-z2", "e": "v2-y2", "f": "y2-u",
         "g": "u-y1", "h": "y1-z1", "i": "z1-z2", "j": "z2-y2", "k": "u-v1"},
        "a b c d e f g h i j k",
        {2: "f g h j", 3: "i k", 5: "b e", 6: "a c d"},
    )
    return [case_a, case_b]


def _c11() -> List[Gadget]:
    return [_gadget(
        ConfigId.C11, "default",
        {"u": 5, "v": 6, "w": 6, "x": 6},
        {"a": "u-v", "b": "u-w", "c": "x-u", "d": "v-w", "e": "w-x"},
        "a b c d e",
        {2: "d e", 3: "a c", 4: "b"},
    )]


_BUILDERS: Dict[ConfigId, Callable[[], List[Gadget]]] = {
    ConfigId.C1: _c1,
    ConfigId.C2: _c2,
    ConfigId.C3: _c3,
    ConfigId.C4: _c4,
    ConfigId.C5: _c5,
    ConfigId.C6: _c6,
    ConfigId.C7: _c7,
    ConfigId.C8: _c8,
    ConfigId.C9: _c9,
    ConfigId.C10: _c10,
    ConfigId.C11: _c11,
}


def gadgets_for(config: ConfigId) -> List[Gadget]:
    return _BUILDERS[config]()


def variants(config: ConfigId) -> List[str]:
    return [g.variant for g in gadgets_for(config)]


def build_gadget(config: ConfigId, variant: Optional[str] = None) -> Gadget:
    """Gadget for a configuration; the first listed case when no variant is given"""
    options = gadgets_for(config)
    if variant is None:
        return options[0]
    for gadget in options:
        if gadget.variant == variant:
            return gadget
    raise UnknownGadgetError(
        f"{config.value} has no variant {variant!r}; expected one of {', '.join(g.variant for g in options)}"
    )


def all_gadgets() -> List[Gadget]:
    return [g for config in ConfigId for g in gadgets_for(config)]


def control_gadget() -> Gadget:
    """Triangle with lists of size 2: known not to be choosable"""
    system = EdgeSystem({"a": (1, 2), "b": (2, 3), "c": (3, 1)})
    return Gadget(
        config=None,
        variant="triangle",
        system=system,
        degrees={1: 2, 2: 2, 3: 2},
        uncolored=("a", "b", "c"),
        vertex_names={1: "x", 2: "y", 3: "z"},
        sizes={"a": 2, "b": 2, "c": 2},
    )
