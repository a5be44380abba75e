"""
Mechanical checks of the small list-coloring lemmas: even cycles, the
4-cycle with a pendant edge, and the 3-edge star
"""
import logging
import time
from itertools import product

from ..exceptions import MalformedInstanceError
from ..models import Status, Verdict
from .enumeration import choosable_exhaustive, edge_order, iter_canonical
from .solver import EdgeSystem, color_edges, cycle_system, lists_payload, star_system

logger = logging.getLogger(__name__)

LEMMAS = ("evencycle", "l2322", "star3")


def verify_even_cycle(max_len: int = 8) -> Verdict:
    """Even cycles up to max_len are 2-choosable; odd ones below it are not"""
    if max_len < 4 or max_len % 2:
        raise MalformedInstanceError(f"max cycle length must be an even integer >= 4, got {max_len}")
    started = time.perf_counter()
    instances = 0
    for n in range(3, max_len + 1):
        system = cycle_system(n)
        verdict = choosable_exhaustive(
            system, {label: 2 for label in system}, max_edges=max_len, max_palette=2 * max_len
        )
        instances += verdict.instances
        expected = Status.PASS if n % 2 == 0 else Status.FAIL
        if verdict.status != expected:
            logger.error(f"[Lemma] cycle of length {n}: expected {expected.value}, got {verdict.status.value}")
            return Verdict(
                status=Status.FAIL,
                witness={"cycleLength": n, **(verdict.witness or {})},
                instances=instances,
                detail=f"cycle of length {n} gave {verdict.status.value}",
                elapsed=time.perf_counter() - started,
            )
    return Verdict(
        status=Status.PASS,
        instances=instances,
        detail=f"even cycles 4..{max_len} choosable, odd cycles 3..{max_len - 1} not",
        elapsed=time.perf_counter() - started,
    )


def pendant_square() -> EdgeSystem:
    """4-cycle b, c, d, e with a pendant edge a at the vertex shared by b and e"""
    return EdgeSystem({"a": (1, 5), "b": (1, 2), "c": (2, 3), "d": (3, 4), "e": (4, 1)})


def verify_l2322() -> Verdict:
    """
    On the pendant square with every list of size 2 except possibly b: if
    |L(b)| >= 3 or L(b) != L(a) the edges are colorable, and some
    assignment with L(a) = L(b) is not.
    """
    started = time.perf_counter()
    system = pendant_square()
    pairs = {label: 2 for label in system}

    checks = [
        ("|L(b)| = 3", choosable_exhaustive(system, {**pairs, "b": 3}), Status.PASS),
        ("L(a) != L(b)", choosable_exhaustive(system, pairs, where=lambda L: L["a"] != L["b"]), Status.PASS),
        ("L(a) = L(b)", choosable_exhaustive(system, pairs, where=lambda L: L["a"] == L["b"]), Status.FAIL),
    ]
    instances = sum(v.instances for _, v, _ in checks)
    for name, verdict, expected in checks:
        if verdict.status != expected:
            logger.error(f"[Lemma] pendant square, {name}: expected {expected.value}, got {verdict.status.value}")
            return Verdict(
                status=Status.FAIL,
                witness=verdict.witness,
                instances=instances,
                detail=f"case {name} gave {verdict.status.value}",
                elapsed=time.perf_counter() - started,
            )
    return Verdict(
        status=Status.PASS,
        instances=instances,
        detail="colorable unless L(a) = L(b) with all lists of size 2",
        elapsed=time.perf_counter() - started,
    )


def verify_star3() -> Verdict:
    """The 3-edge star with lists of size 2 or 3 fails exactly on three equal 2-lists"""
    started = time.perf_counter()
    system = star_system(3)
    order = edge_order(system)
    instances = 0
    for sizes in product((2, 3), repeat=len(order)):
        profile = dict(zip(order, sizes))
        for lists in iter_canonical(order, profile):
            instances += 1
            colorable = color_edges(system, lists) is not None
            first = lists[order[0]]
            all_equal_pairs = len(first) == 2 and all(lists[label] == first for label in order)
            if colorable == all_equal_pairs:
                return Verdict(
                    status=Status.FAIL,
                    witness={"lists": lists_payload(lists, system.labels)},
                    instances=instances,
                    detail="colorability disagrees with the equal-pairs characterization",
                    elapsed=time.perf_counter() - started,
                )
    return Verdict(
        status=Status.PASS,
        instances=instances,
        detail="uncolorable exactly when all three lists are the same pair",
        elapsed=time.perf_counter() - started,
    )


def verify_lemma(name: str, max_len: int = 8) -> Verdict:
    if name == "evencycle":
        return verify_even_cycle(max_len)
    if name == "l2322":
        return verify_l2322()
    if name == "star3":
        return verify_star3()
    raise MalformedInstanceError(f"unknown lemma {name!r}; expected one of {', '.join(LEMMAS)}")
