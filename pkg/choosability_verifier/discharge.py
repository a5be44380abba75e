"""
Discharging: initial charges, rules R1-R11, conservation audit
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .config import LOCALITY_RADIUS, MAX_DEGREE
from .configs import match_all, summarize
from .exceptions import RulesAlreadyAppliedError, UnknownElementError
from .graph.embedding import EmbeddedGraph
from .graph.neighbors import neighbor_classification
from .models import (
    AuditReport,
    BaseClass,
    ChargeLedger,
    ConfigId,
    ConfigMatch,
    Element,
    ElementKind,
    Explanation,
    NegativeElement,
    SpecialClass,
    Transfer,
)

logger = logging.getLogger(__name__)

# Charges are integer twelfths
UNIT = 12

FACE_RULES = {4: ("R1", UNIT)}
LARGE_FACE_RULE = ("R2", 2 * UNIT)

SPECIAL_RULES: Dict[SpecialClass, Tuple[str, int]] = {
    SpecialClass.E2: ("R6", UNIT // 2),
    SpecialClass.E3: ("R7", UNIT // 3),
    SpecialClass.E4: ("R8", UNIT // 4),
    SpecialClass.S2: ("R9", UNIT // 2),
    SpecialClass.S3: ("R10", UNIT // 3),
    SpecialClass.S4: ("R11", UNIT // 4),
}


def render(twelfths: int) -> str:
    """Exact fraction text for a charge held in twelfths"""
    return str(Fraction(twelfths, UNIT))


def vertex(v: int) -> Element:
    return Element(kind=ElementKind.VERTEX, id=v)


def face(index: int) -> Element:
    return Element(kind=ElementKind.FACE, id=index)


def parse_element(g: EmbeddedGraph, text: str) -> Element:
    """'7' or 'v7' for a vertex, 'f:3' or 'f3' for a face"""
    token = text.strip().lower()
    try:
        if token.startswith("f"):
            element = face(int(token[1:].lstrip(":")))
        else:
            element = vertex(int(token.lstrip("v")))
    except ValueError:
        raise UnknownElementError(f"cannot parse element {text!r}")
    _require_element(g, element)
    return element


def _require_element(g: EmbeddedGraph, element: Element) -> None:
    if element.kind == ElementKind.VERTEX and element.id not in g:
        raise UnknownElementError(f"unknown vertex {element.id}")
    if element.kind == ElementKind.FACE and not 0 <= element.id < len(g.faces):
        raise UnknownElementError(f"unknown face {element.id}")


# === Charges ===

def initial_charges(g: EmbeddedGraph) -> ChargeLedger:
    """Vertex v starts at d(v) - 6, face f at 2 d(f) - 6"""
    g.require_connected()
    return ChargeLedger(
        vertex_charge={v: (g.degree(v) - 6) * UNIT for v in g.vertices},
        face_charge={f.index: (2 * f.degree - 6) * UNIT for f in g.faces},
    )


def rule_instances(g: EmbeddedGraph) -> List[Transfer]:
    """Every applicable rule instance, evaluated on the graph structure alone"""
    transfers: List[Transfer] = []

    for f in g.faces:
        if f.degree < 4:
            continue
        rule, amount = FACE_RULES.get(f.degree, LARGE_FACE_RULE)
        for x in sorted(set(f.vertices)):
            if g.degree(x) > 5:
                continue
            times = f.appearances(x)
            transfers.append(
                Transfer(source=face(f.index), target=vertex(x), amount=amount * times, rule=rule, multiplicity=times)
            )

    for u in sorted(g.vertices):
        if g.degree(u) < 7:
            continue
        for v in sorted(g.rotation(u)):
            picked = _vertex_rule(g, u, v)
            if picked:
                rule, amount = picked
                transfers.append(Transfer(source=vertex(u), target=vertex(v), amount=amount, rule=rule))
    return transfers


def _vertex_rule(g: EmbeddedGraph, u: int, v: int) -> Optional[Tuple[str, int]]:
    dv = g.degree(v)
    if dv > 5:
        return None
    cls = neighbor_classification(g, u, v)
    if dv == 3 and cls.base == BaseClass.WEAK:
        return ("R3", UNIT)
    if dv == 3 and cls.base == BaseClass.SEMI_WEAK:
        return ("R4", UNIT // 2)
    if dv == 4 and cls.base == BaseClass.WEAK:
        return ("R5", UNIT // 2)
    if cls.special in SPECIAL_RULES:
        return SPECIAL_RULES[cls.special]
    return None


def apply_rules(g: EmbeddedGraph, ledger: ChargeLedger) -> ChargeLedger:
    """Single simultaneous pass of R1-R11; a ledger can only go through it once"""
    if ledger.applied:
        raise RulesAlreadyAppliedError()
    result = ledger.model_copy(deep=True)
    for t in rule_instances(g):
        _shift(result, t.source, -t.amount)
        _shift(result, t.target, t.amount)
        result.log.append(t)
    result.applied = True
    return result


def _shift(ledger: ChargeLedger, element: Element, amount: int) -> None:
    if element.kind == ElementKind.VERTEX:
        ledger.vertex_charge[element.id] += amount
    else:
        ledger.face_charge[element.id] += amount


def negatives(ledger: ChargeLedger) -> List[Tuple[Element, int]]:
    found = [(vertex(v), c) for v, c in sorted(ledger.vertex_charge.items()) if c < 0]
    found += [(face(i), c) for i, c in sorted(ledger.face_charge.items()) if c < 0]
    return found


# === Locality ===

def element_vertices(g: EmbeddedGraph, element: Element) -> List[int]:
    if element.kind == ElementKind.VERTEX:
        return [element.id]
    return sorted(set(g.face_vertices(g.face(element.id))))


def nearest_match_distance(
    g: EmbeddedGraph, element: Element, found: Dict[ConfigId, List[ConfigMatch]], radius: int
) -> Optional[int]:
    """Distance from the element to the closest bound vertex of any match, if within radius"""
    reach = g.distances_from(element_vertices(g, element), radius)
    best = None
    for matches in found.values():
        for m in matches:
            for v in m.binding.values():
                if v in reach and (best is None or reach[v] < best):
                    best = reach[v]
    return best


def locality_misses(
    g: EmbeddedGraph, ledger: ChargeLedger, found: Dict[ConfigId, List[ConfigMatch]], radius: int = LOCALITY_RADIUS
) -> List[str]:
    """Negative elements with no configuration match within `radius`"""
    return [
        str(element)
        for element, _ in negatives(ledger)
        if nearest_match_distance(g, element, found, radius) is None
    ]


# === Audit ===

def _audit_component(g: EmbeddedGraph, radius: int) -> Tuple[ChargeLedger, ChargeLedger, AuditReport]:
    start = initial_charges(g)
    final = apply_rules(g, start)
    found = match_all(g)
    contradiction = g.num_edges > 0 and g.max_degree <= MAX_DEGREE and not any(found.values())
    if contradiction:
        logger.error("[Discharge] configuration-free graph reached: transcription bug in matchers or rules")
    misses = locality_misses(g, final, found, radius)
    if misses:
        logger.warning(f"[Discharge] no configuration within distance {radius} of {', '.join(misses)}")
    report = AuditReport(
        initial_total=render(start.total()),
        final_total=render(final.total()),
        negatives=[NegativeElement(element=str(e), charge=render(c)) for e, c in negatives(final)],
        configs_found=summarize(found),
        contradiction_flag=contradiction,
        locality_misses=misses,
    )
    return start, final, report


def audit(g: EmbeddedGraph, per_component: bool = False, radius: int = LOCALITY_RADIUS) -> AuditReport:
    """
    Initial and final totals, negative elements, configuration counts and the
    contradiction flag. Disconnected input is rejected unless per_component,
    in which case each component is embedded and audited on its own.
    """
    if not per_component:
        start, final, report = _audit_component(g, radius)
        if final.total() != start.total():
            logger.error(f"[Discharge] charge not conserved: {render(start.total())} -> {render(final.total())}")
        return report

    parts = g.components()
    runs = [_audit_component(part, radius) for part in parts]
    reports = [report for _, _, report in runs]
    counts: Dict[str, int] = {}
    for r in reports:
        for key, n in r.configs_found.items():
            counts[key] = counts.get(key, 0) + n
    negatives_all = []
    for index, r in enumerate(reports):
        for n in r.negatives:
            name = n.element if n.element.startswith("v") else f"{n.element}@{index}"
            negatives_all.append(NegativeElement(element=name, charge=n.charge))
    return AuditReport(
        initial_total=render(sum(start.total() for start, _, _ in runs)),
        final_total=render(sum(final.total() for _, final, _ in runs)),
        negatives=negatives_all,
        configs_found={k: counts[k] for k in sorted(counts, key=lambda c: int(c[1:]))},
        contradiction_flag=any(r.contradiction_flag for r in reports),
        locality_misses=[m for r in reports for m in r.locality_misses],
        components=len(parts),
    )


# === Case analysis labels ===

def _face_branch(g: EmbeddedGraph, index: int) -> str:
    d = g.face(index).degree
    if d <= 3:
        return f"face, d={d}: gives nothing"
    if d == 4:
        return "face, d=4: gives 1 to each incident vertex of degree at most 5"
    if d == 5:
        return "face, d=5: gives 2 to each incident vertex of degree at most 5"
    return f"face, d={d}: gives 2 per incident vertex of degree at most 5, at most d/2 of them"


def _degree3_branch(g: EmbeddedGraph, x: int) -> str:
    f1, f2, f3 = sorted((f.degree for f in g.faces_at_vertex(x)), reverse=True)
    if f1 >= 5:
        return "incident faces of degree >=5 and >=4" if f2 >= 4 else "one face of degree >=5, two triangles"
    if f1 == 4 and f2 == 4:
        return "three faces of degree 4" if f3 == 4 else "two faces of degree 4, one triangle"
    if f1 == 4:
        return "one face of degree 4, two triangles"
    return "three incident triangles"


def _degree4_branch(g: EmbeddedGraph, x: int) -> str:
    triangles = sum(1 for f in g.faces_at_vertex(x) if f.degree == 3)
    if triangles <= 2:
        return "at most two incident triangles"
    return "three incident triangles" if triangles == 3 else "four incident triangles"


def _degree5_branch(g: EmbeddedGraph, x: int) -> str:
    if any(f.degree >= 4 for f in g.faces_at_vertex(x)):
        return "incident to a face of degree >=4"
    ring = g.rotation(x)
    sixes = [i for i, w in enumerate(ring) if g.degree(w) == 6]
    prefix = "five incident triangles, "
    if len(sixes) >= 3:
        return prefix + "three or more degree-6 neighbors"
    if len(sixes) == 2:
        gap = (sixes[1] - sixes[0]) % len(ring)
        consecutive = gap in (1, len(ring) - 1)
        return prefix + ("two consecutive degree-6 neighbors" if consecutive else "two non-consecutive degree-6 neighbors")
    if len(sixes) == 1:
        return prefix + "one degree-6 neighbor"
    return prefix + "no degree-6 neighbor"


def _weak_counts(g: EmbeddedGraph, x: int) -> Dict[str, int]:
    counts = {"weak3": 0, "semi3": 0, "weak4": 0}
    specials: Dict[SpecialClass, int] = {}
    for v in g.rotation(x):
        cls = neighbor_classification(g, x, v)
        dv = g.degree(v)
        if cls.base == BaseClass.WEAK and dv == 3:
            counts["weak3"] += 1
        elif cls.base == BaseClass.SEMI_WEAK and dv == 3:
            counts["semi3"] += 1
        elif cls.base == BaseClass.WEAK and dv == 4:
            counts["weak4"] += 1
        specials[cls.special] = specials.get(cls.special, 0) + 1
    counts.update({s.value: n for s, n in specials.items()})
    return counts


def _degree7_branch(g: EmbeddedGraph, x: int) -> str:
    c = _weak_counts(g, x)
    if c.get("S2"):
        return "has an S2-neighbor"
    if c["weak4"] >= 2:
        return "at least two weak degree-4 neighbors"
    if c["weak4"] == 1:
        return "one weak degree-4 neighbor, no S2-neighbor"
    return "no weak degree-4 neighbor, no S2-neighbor"


def _degree8_branch(g: EmbeddedGraph, x: int) -> str:
    c = _weak_counts(g, x)
    if c["weak3"] >= 2:
        return "at least two weak degree-3 neighbors"
    if c["weak3"] == 0:
        return "no weak degree-3 neighbor"
    head = "one weak degree-3 neighbor, "
    if c["semi3"]:
        return head + "a semi-weak degree-3 neighbor"
    if c["weak4"] >= 2:
        return head + "two weak degree-4 neighbors"
    if c["weak4"] == 1:
        if c.get("E2") or c.get("E3"):
            return head + "one weak degree-4 neighbor and an E2- or E3-neighbor"
        return head + "one weak degree-4 neighbor, no E2- or E3-neighbor"
    if c.get("E2"):
        return head + "no weak degree-4 neighbor, an E2-neighbor"
    return head + "no weak degree-4 neighbor, no E2-neighbor"


VERTEX_BRANCHES = {
    3: _degree3_branch,
    4: _degree4_branch,
    5: _degree5_branch,
    7: _degree7_branch,
    8: _degree8_branch,
}


def case_branch(g: EmbeddedGraph, element: Element) -> str:
    """Which case of the charge analysis the element falls under"""
    _require_element(g, element)
    if element.kind == ElementKind.FACE:
        return _face_branch(g, element.id)
    d = g.degree(element.id)
    if d == 6:
        return "vertex, d=6: gives nothing, receives nothing"
    if d in VERTEX_BRANCHES:
        return f"vertex, d={d}, {VERTEX_BRANCHES[d](g, element.id)}"
    if d < 3:
        return f"vertex, d={d}: outside the analysis (an edge with degree sum at most 10 is present)"
    return f"vertex, d={d}: above the degree cap"


def explain_element(g: EmbeddedGraph, element: Element) -> Explanation:
    """Every transfer with the element as source or target, plus its case label"""
    _require_element(g, element)
    start = initial_charges(g)
    final = apply_rules(g, start)
    return Explanation(
        element=str(element),
        branch=case_branch(g, element),
        initial_charge=render(start.charge_of(element)),
        final_charge=render(final.charge_of(element)),
        transfers=[t for t in final.log if element in (t.source, t.target)],
    )
