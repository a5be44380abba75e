"""Directed recoloring against the brute-force oracle."""

import random
from itertools import combinations

import pytest

from choosability_verifier.coloring import (
    EdgeSystem,
    RecolorInstance,
    availability_digraph,
    brute_force_recolor,
    recolor_rotate_or_cascade,
    star_system,
)
from choosability_verifier.exceptions import MalformedInstanceError
from choosability_verifier.models import Status
from choosability_verifier.reducibility import (
    RECOLOR_CLAIMS,
    random_recolor_instance,
    recolor_claim_verdict,
    weakened_control,
)

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _star_instance(current, allowed, targets):
    system = star_system(len(current))
    labels = system.labels
    return RecolorInstance(
        system=system,
        current=dict(zip(labels, current)),
        allowed={label: frozenset(a) for label, a in zip(labels, allowed)},
        targets=frozenset(labels[i] for i in targets),
    )


def _random_star_instance(rng: random.Random) -> RecolorInstance:
    n = rng.randint(1, 6)
    palette = list(range(1, 10))
    current = rng.sample(palette, n)
    allowed = []
    for color in current:
        others = [c for c in palette if c != color]
        allowed.append({color, *rng.sample(others, rng.randint(0, 3))})
    targets = rng.sample(range(n), rng.randint(1, n))
    return _star_instance(current, allowed, targets)


def _random_instance(rng: random.Random) -> RecolorInstance:
    pairs = rng.sample(list(combinations(range(1, 6), 2)), rng.randint(2, 6))
    system = EdgeSystem({f"e{i}": pair for i, pair in enumerate(pairs)})
    palette = list(range(1, 10))
    current = {}
    for label in system.labels:
        taken = {current[f] for f in system.incident(label) if f in current}
        current[label] = rng.choice([c for c in palette if c not in taken])
    allowed = {}
    for label, color in current.items():
        others = [c for c in palette[:6] if c != color]
        allowed[label] = frozenset({color, *rng.sample(others, rng.randint(0, 3))})
    targets = frozenset(rng.sample(system.labels, rng.randint(1, 2)))
    return RecolorInstance(system=system, current=current, allowed=allowed, targets=targets)


# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------


def test_rotation_swaps_two_colors():
    inst = _star_instance([1, 2], [{1, 2}, {1, 2}], [0])
    assert recolor_rotate_or_cascade(inst) == {"0-1": 2, "0-2": 1}


def test_free_color_is_taken_directly():
    inst = _star_instance([1, 2], [{1, 3}, {2}], [0])
    assert recolor_rotate_or_cascade(inst) == {"0-1": 3, "0-2": 2}


def test_cascade_along_a_path():
    inst = _star_instance([1, 2], [{1, 2}, {2, 3}], [0])
    graph = availability_digraph(inst)
    assert list(graph.edges()) == [("0-2", "0-1")]
    assert recolor_rotate_or_cascade(inst) == {"0-1": 2, "0-2": 3}


def test_stuck_targets_cannot_move():
    inst = _star_instance([1, 2, 3], [{1}, {1, 2, 3}, {3, 4}], [0])
    assert recolor_rotate_or_cascade(inst) is None
    assert brute_force_recolor(inst) is None


def test_accepts_rejects_unchanged_targets():
    inst = _star_instance([1, 2], [{1, 2}, {1, 2, 3}], [0])
    assert not inst.accepts({"0-1": 1, "0-2": 3})
    assert inst.accepts({"0-1": 2, "0-2": 3})
    assert not inst.accepts({"0-1": 2, "0-2": 2})


def test_oracle_agreement_on_random_stars():
    rng = random.Random("recolor-oracle")
    for _ in range(1000):
        inst = _random_star_instance(rng)
        fast = recolor_rotate_or_cascade(inst)
        slow = brute_force_recolor(inst)
        assert (fast is None) == (slow is None), inst
        if fast is not None:
            assert inst.accepts(fast)


def test_two_sided_moves():
    # path a-b-c, target b: moving b to 1 needs both a and c to leave 1
    system = EdgeSystem({"a": (1, 2), "b": (2, 3), "c": (3, 4)})
    inst = RecolorInstance(
        system=system,
        current={"a": 1, "b": 2, "c": 1},
        allowed={"a": frozenset({1, 3}), "b": frozenset({1, 2}), "c": frozenset({1, 3})},
        targets=frozenset({"b"}),
    )
    assert brute_force_recolor(inst) == {"a": 3, "b": 1, "c": 3}
    assert recolor_rotate_or_cascade(inst) == {"a": 3, "b": 1, "c": 3}


def test_displaced_edges_move_on_both_sides():
    system = EdgeSystem({"e0": (1, 5), "e1": (1, 4), "e2": (3, 5)})
    inst = RecolorInstance(
        system=system,
        current={"e0": 1, "e1": 4, "e2": 4},
        allowed={"e0": frozenset({1, 4}), "e1": frozenset({1, 3, 4}), "e2": frozenset({2, 3, 4})},
        targets=frozenset({"e0"}),
    )
    assert recolor_rotate_or_cascade(inst) == {"e0": 4, "e1": 1, "e2": 2}


def test_oracle_agreement_on_random_edge_systems():
    rng = random.Random("recolor-general")
    for _ in range(1000):
        inst = _random_instance(rng)
        fast = recolor_rotate_or_cascade(inst)
        slow = brute_force_recolor(inst)
        assert (fast is None) == (slow is None), inst
        if fast is not None:
            assert inst.accepts(fast)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


class TestInstanceValidation:
    def test_current_must_be_allowed(self):
        with pytest.raises(MalformedInstanceError, match="not allowed"):
            _star_instance([1, 2], [{3}, {2}], [0])

    def test_relaxed_lifts_the_check(self):
        system = star_system(2)
        inst = RecolorInstance(
            system=system,
            current={"0-1": 1, "0-2": 2},
            allowed={"0-1": frozenset({3}), "0-2": frozenset({2})},
            targets=frozenset({"0-1"}),
            relaxed=True,
        )
        assert recolor_rotate_or_cascade(inst) == {"0-1": 3, "0-2": 2}

    def test_current_must_be_proper(self):
        with pytest.raises(MalformedInstanceError, match="not proper"):
            _star_instance([1, 1], [{1}, {1}], [0])

    def test_targets_must_be_recolorable(self):
        system = star_system(1)
        with pytest.raises(MalformedInstanceError):
            RecolorInstance(
                system=system,
                current={"0-1": 1},
                allowed={"0-1": frozenset({1})},
                targets=frozenset({"0-9"}),
            )


# ---------------------------------------------------------------------------
# Sub-claims
# ---------------------------------------------------------------------------


def test_random_claim_instances_are_valid():
    rng = random.Random("claims")
    for claim in RECOLOR_CLAIMS:
        inst = random_recolor_instance(claim, rng)
        assert {label: len(inst.allowed[label]) for label in inst.system.labels} == dict(claim.sizes)
        assert inst.targets == frozenset(claim.targets)


@pytest.mark.parametrize("claim", RECOLOR_CLAIMS, ids=[c.name for c in RECOLOR_CLAIMS])
def test_recoloring_sub_claims(claim):
    verdict = recolor_claim_verdict(claim, samples=1000, seed=42)
    assert verdict.status == Status.PASS
    assert verdict.instances == 1000


def test_weakened_control_records_without_failing():
    verdict = weakened_control(samples=300, seed=42)
    assert verdict.status == Status.PASS
    assert verdict.detail.endswith("of 300 instances without a recoloring")
