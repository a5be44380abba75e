"""
List assignments up to color renaming: canonical forms, exhaustive
enumeration and the exhaustive choosability check
"""
import logging
import random
import time
from collections import Counter, deque
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..config import EXHAUSTIVE_MAX_EDGES, EXHAUSTIVE_MAX_PALETTE, SAMPLER_MAX_STEPS
from ..exceptions import BudgetExceededError, MalformedInstanceError
from ..models import Status, Verdict
from .solver import EdgeSystem, Lists, color_edges, lists_payload

logger = logging.getLogger(__name__)

Assignment = Dict[str, Tuple[int, ...]]
Predicate = Callable[[Assignment], bool]

# A class of colors that no list seen so far tells apart: (first label, size)
ColorClass = Tuple[int, int]

FIRST_COLOR = 1


def edge_order(system: EdgeSystem) -> Tuple[str, ...]:
    """Breadth-first order over edge incidences, lowest label index first"""
    order: List[str] = []
    seen = set()
    for root in system.labels:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            label = queue.popleft()
            order.append(label)
            for nxt in sorted(system.incident(label), key=system.index.__getitem__):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return tuple(order)


def canonical_form(lists: Lists, order: Sequence[str]) -> Assignment:
    """
    Renaming-invariant relabeling of `lists` for a fixed edge order.

    Colors that every earlier list either contains together or misses
    together form a class with a contiguous range of labels. Each list takes
    the lowest labels of every class it meets, then new labels for colors not
    seen before, so two assignments get the same form exactly when one is a
    color renaming of the other.
    """
    classes: List[Tuple[int, List[int]]] = []
    seen = set()
    next_label = FIRST_COLOR
    result: Assignment = {}
    for label in order:
        colors = set(lists[label])
        out: List[int] = []
        refined: List[Tuple[int, List[int]]] = []
        for start, members in classes:
            picked = sorted(c for c in members if c in colors)
            rest = sorted(c for c in members if c not in colors)
            out.extend(range(start, start + len(picked)))
            if picked:
                refined.append((start, picked))
            if rest:
                refined.append((start + len(picked), rest))
        fresh = sorted(colors - seen)
        out.extend(range(next_label, next_label + len(fresh)))
        if fresh:
            refined.append((next_label, fresh))
            next_label += len(fresh)
            seen.update(fresh)
        classes = refined
        result[label] = tuple(out)
    return result


def _splits(classes: Sequence[ColorClass], size: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """How many colors a list of `size` takes from each class, reuse first"""
    def walk(i: int, left: int, taken: Tuple[int, ...]):
        if i == len(classes):
            yield taken, left
            return
        for k in range(min(left, classes[i][1]), -1, -1):
            yield from walk(i + 1, left - k, taken + (k,))
    yield from walk(0, size, ())


def iter_canonical(
    order: Sequence[str],
    sizes: Mapping[str, int],
    check: Optional[Callable[[int, Assignment], bool]] = None,
) -> Iterator[Assignment]:
    """
    Every canonical assignment with |L(e)| = sizes[e], once each.
    `check(position, partial)` may reject a prefix right after the list at
    `position` is placed.
    """
    partial: Assignment = {}

    def extend(pos: int, classes: List[ColorClass], next_label: int) -> Iterator[Assignment]:
        if pos == len(order):
            yield dict(partial)
            return
        label = order[pos]
        for taken, fresh in _splits(classes, sizes[label]):
            colors: List[int] = []
            refined: List[ColorClass] = []
            for (start, size), k in zip(classes, taken):
                colors.extend(range(start, start + k))
                if k:
                    refined.append((start, k))
                if size - k:
                    refined.append((start + k, size - k))
            colors.extend(range(next_label, next_label + fresh))
            if fresh:
                refined.append((next_label, fresh))
            partial[label] = tuple(colors)
            if check is None or check(pos, partial):
                yield from extend(pos + 1, refined, next_label + fresh)
            del partial[label]

    yield from extend(0, [], FIRST_COLOR)


Plan = Dict[int, Tuple[int, ...]]


def _distributions(m: int, kmax: int, budget: int) -> Iterator[Tuple[int, ...]]:
    """(m_0, ..., m_kmax): how many of m equal classes give k colors each, sum k * m_k <= budget"""
    def walk(k: int, classes: int, left: int, acc: Tuple[int, ...]):
        if k == 0:
            yield (classes,) + acc
            return
        for mk in range(min(classes, left // k), -1, -1):
            yield from walk(k - 1, classes - mk, left - k * mk, (mk,) + acc)
    yield from walk(kmax, m, budget, ())


def _multinomial(parts: Sequence[int]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def _group_choices(
    groups: Sequence[Tuple[int, int]], left: int
) -> Iterator[Tuple[int, List[int], Plan, int]]:
    """
    Splits of a list of size `left` over classes grouped as (size, count).
    Yields (number of ordered splits, refined class sizes, plan, fresh colors).
    """
    if not groups:
        yield 1, [], {}, left
        return
    (size, count), rest = groups[0], groups[1:]
    for dist in _distributions(count, min(size, left), left):
        taken = sum(k * mk for k, mk in enumerate(dist))
        parts: List[int] = []
        for k, mk in enumerate(dist):
            for part in (k, size - k):
                if part:
                    parts.extend([part] * mk)
        for ways, more, plan, fresh in _group_choices(rest, left - taken):
            yield _multinomial(dist) * ways, parts + more, {size: dist, **plan}, fresh


class CanonicalSampler:
    """
    Uniform draws over the canonical assignments of a size profile.

    Renaming classes do not depend on the order lists are read in, so the
    walk takes the largest lists first and converts each draw to the
    canonical form of `order`. The number of completions below a state only
    depends on the position and on the multiset of class sizes, each capped
    at the colors the remaining lists still ask for; those counts are
    memoized and every split is drawn with probability proportional to the
    completions below it.
    """

    def __init__(self, order: Sequence[str], sizes: Mapping[str, int], max_steps: int = SAMPLER_MAX_STEPS):
        self.order = tuple(order)
        self.walk = tuple(sorted(self.order, key=lambda label: -sizes[label]))
        self.demand = [sizes[label] for label in self.walk]
        self.remaining = [sum(self.demand[pos:]) for pos in range(len(self.walk) + 1)]
        self.max_steps = max_steps
        self._steps = 0
        self._memo: Dict[Tuple[int, Tuple[int, ...]], int] = {}
        self.total = self._count(0, ())

    def _key(self, pos: int, sizes: Iterable[int]) -> Tuple[int, ...]:
        cap = self.remaining[pos]
        return tuple(sorted((min(s, cap) for s in sizes), reverse=True))

    @staticmethod
    def _groups(key: Tuple[int, ...]) -> List[Tuple[int, int]]:
        return sorted(Counter(key).items(), reverse=True)

    def _count(self, pos: int, key: Tuple[int, ...]) -> int:
        if pos == len(self.walk):
            return 1
        memo_key = (pos, key)
        if memo_key in self._memo:
            return self._memo[memo_key]
        total = 0
        for ways, parts, _, fresh in _group_choices(self._groups(key), self.demand[pos]):
            self._steps += 1
            if self._steps > self.max_steps:
                raise BudgetExceededError(f"counting needs more than {self.max_steps} split evaluations")
            refined = parts + [fresh] if fresh else parts
            total += ways * self._count(pos + 1, self._key(pos + 1, refined))
        self._memo[memo_key] = total
        return total

    def draw(self, rng: random.Random) -> Assignment:
        classes: List[ColorClass] = []
        next_label = FIRST_COLOR
        lists: Assignment = {}
        for pos, label in enumerate(self.walk):
            capped = [min(size, self.remaining[pos]) for _, size in classes]
            options: List[Tuple[int, Plan, int]] = []
            for ways, parts, plan, fresh in _group_choices(self._groups(self._key(pos, capped)), self.demand[pos]):
                refined = parts + [fresh] if fresh else parts
                weight = ways * self._count(pos + 1, self._key(pos + 1, refined))
                if weight:
                    options.append((weight, plan, fresh))
            pick = rng.randrange(sum(weight for weight, _, _ in options))
            for weight, plan, fresh in options:
                if pick < weight:
                    break
                pick -= weight

            # which classes of each capped size give how many colors
            take = [0] * len(classes)
            for size, dist in plan.items():
                members = [i for i, c in enumerate(capped) if c == size]
                rng.shuffle(members)
                slots = iter(members)
                for k, mk in enumerate(dist):
                    for _ in range(mk):
                        take[next(slots)] = k

            colors: List[int] = []
            refined_classes: List[ColorClass] = []
            for (start, size), k in zip(classes, take):
                colors.extend(range(start, start + k))
                if k:
                    refined_classes.append((start, k))
                if size - k:
                    refined_classes.append((start + k, size - k))
            colors.extend(range(next_label, next_label + fresh))
            if fresh:
                refined_classes.append((next_label, fresh))
                next_label += fresh
            classes = refined_classes
            lists[label] = tuple(colors)
        return canonical_form(lists, self.order)


@lru_cache(maxsize=16)
def _sampler(order: Tuple[str, ...], sizes: Tuple[Tuple[str, int], ...]) -> Optional[CanonicalSampler]:
    try:
        return CanonicalSampler(order, dict(sizes))
    except BudgetExceededError as e:
        logger.warning(f"[Sample] {len(order)} lists: {e}, drawing lists one at a time instead")
        return None


def _sequential_draw(order: Sequence[str], sizes: Mapping[str, int], rng: random.Random) -> Assignment:
    lists: Dict[str, Tuple[int, ...]] = {}
    used = 0
    for label in order:
        size = sizes[label]
        pool = list(range(FIRST_COLOR, FIRST_COLOR + used + size))
        picked = sorted(rng.sample(pool, size))
        lists[label] = tuple(picked)
        used = max(used, picked[-1] - FIRST_COLOR + 1)
    return canonical_form(lists, order)


def sample_assignment(order: Sequence[str], sizes: Mapping[str, int], rng: random.Random) -> Assignment:
    """
    Uniform random canonical assignment. Profiles whose completion counts do
    not fit in SAMPLER_MAX_STEPS are drawn list by list instead, each list a
    uniform subset of the colors used so far plus enough new ones.
    """
    sampler = _sampler(tuple(order), tuple((label, sizes[label]) for label in order))
    if sampler is None:
        return _sequential_draw(order, sizes, rng)
    return sampler.draw(rng)


def is_tight(system: EdgeSystem, lists: Mapping[str, Sequence[int]], label: str) -> bool:
    """Every color of the edge's list is listed by some incident edge"""
    around = set()
    for other in system.incident(label):
        around.update(lists[other])
    return all(c in around for c in lists[label])


def _closing_positions(system: EdgeSystem, order: Sequence[str]) -> Dict[int, List[str]]:
    """Position at which each edge and all its incident edges have lists"""
    pos = {label: i for i, label in enumerate(order)}
    closing: Dict[int, List[str]] = {}
    for label in order:
        last = max([pos[label]] + [pos[f] for f in system.incident(label)])
        closing.setdefault(last, []).append(label)
    return closing


def iter_tight(system: EdgeSystem, sizes: Mapping[str, int]) -> Iterator[Assignment]:
    """Canonical assignments in which every edge is tight"""
    order = edge_order(system)
    closing = _closing_positions(system, order)

    def check(pos: int, partial: Assignment) -> bool:
        return all(is_tight(system, partial, label) for label in closing.get(pos, ()))

    return iter_canonical(order, sizes, check)


class _ReducedSearch:
    """
    Searches for an uncolorable assignment on subsets of the edges.

    An edge holding a color no incident edge lists can always be colored
    last, so a subset is choosable iff every one-edge deletion is choosable
    and every tight assignment on it is colorable. Edges with more colors
    than incident edges are dropped outright.
    """

    def __init__(self, system: EdgeSystem, sizes: Mapping[str, int]):
        self.system = system
        self.sizes = sizes
        self.instances = 0
        self.memo: Dict[FrozenSet[str], Optional[Assignment]] = {}

    def bad(self, labels: FrozenSet[str]) -> Optional[Assignment]:
        if labels not in self.memo:
            self.memo[labels] = self._bad(labels)
        return self.memo[labels]

    def _bad(self, labels: FrozenSet[str]) -> Optional[Assignment]:
        if not labels:
            return None
        sub = self.system.restrict(labels)
        for label in sub.labels:
            if self.sizes[label] > len(sub.incident(label)):
                return _with_fresh(self.bad(labels - {label}), label, self.sizes[label])
        for label in sub.labels:
            found = self.bad(labels - {label})
            if found is not None:
                return _with_fresh(found, label, self.sizes[label])
        for lists in iter_tight(sub, self.sizes):
            self.instances += 1
            if color_edges(sub, lists) is None:
                return lists
        return None


def _with_fresh(lists: Optional[Assignment], label: str, size: int) -> Optional[Assignment]:
    if lists is None:
        return None
    top = max((c for colors in lists.values() for c in colors), default=FIRST_COLOR - 1)
    return {**lists, label: tuple(range(top + 1, top + 1 + size))}


def check_budget(system: EdgeSystem, sizes: Mapping[str, int], max_edges: int, max_palette: int) -> None:
    palette = sum(sizes[label] for label in system.labels)
    if len(system) > max_edges or palette > max_palette:
        raise BudgetExceededError(
            f"{len(system)} edges with palette {palette} exceeds the exhaustive tier "
            f"({max_edges} edges, palette {max_palette})"
        )


def choosable_exhaustive(
    system: EdgeSystem,
    sizes: Mapping[str, int],
    where: Optional[Predicate] = None,
    max_edges: int = EXHAUSTIVE_MAX_EDGES,
    max_palette: int = EXHAUSTIVE_MAX_PALETTE,
) -> Verdict:
    """
    PASS iff every list assignment with |L(e)| = sizes[e] is colorable.

    Without `where` the search works through the tight-assignment reduction
    on edge subsets. A renaming-invariant `where` predicate restricts the
    check to the assignments it accepts; those are enumerated in full.
    """
    for label in system.labels:
        if sizes.get(label, 0) < 1:
            raise MalformedInstanceError(f"edge {label} needs a list size of at least 1")
    check_budget(system, sizes, max_edges, max_palette)

    started = time.perf_counter()
    order = edge_order(system)
    if where is None:
        search = _ReducedSearch(system, sizes)
        witness = search.bad(frozenset(system.labels))
        instances = search.instances
        if witness is not None:
            witness = canonical_form(witness, order)
    else:
        witness = None
        instances = 0
        for lists in iter_canonical(order, sizes):
            if not where(lists):
                continue
            instances += 1
            if color_edges(system, lists) is None:
                witness = lists
                break

    elapsed = time.perf_counter() - started
    if witness is not None:
        logger.debug(f"[ListColor] uncolorable assignment on {len(system)} edges after {instances} checks")
        return Verdict(
            status=Status.FAIL,
            witness={"lists": lists_payload(witness, system.labels)},
            instances=instances,
            elapsed=elapsed,
        )
    return Verdict(status=Status.PASS, instances=instances, elapsed=elapsed)
