"""Reducibility verdicts for the gadget catalog."""

import pytest

from choosability_verifier.models import ClaimVerdict, ConfigId, Status, Tier
from choosability_verifier.reducibility import (
    EXHAUSTIVE_CONFIGS,
    build_gadget,
    check_recoloring_claims,
    check_reducible_exhaustive,
    check_reducible_sampled,
    control_gadget,
    gadgets_for,
    overall_status,
    run_all,
    verify_config,
)

SAMPLED_GADGETS = [g for c in ConfigId if c not in EXHAUSTIVE_CONFIGS for g in gadgets_for(c)]

# ---------------------------------------------------------------------------
# Exhaustive tier
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("config", EXHAUSTIVE_CONFIGS, ids=[c.value for c in EXHAUSTIVE_CONFIGS])
def test_exhaustive_gadgets_pass(config):
    verdict = check_reducible_exhaustive(build_gadget(config))
    assert verdict.status == Status.PASS
    assert verdict.witness is None


def test_large_gadget_is_over_budget():
    verdict = check_reducible_exhaustive(build_gadget(ConfigId.C5, "consecutive"))
    assert verdict.status == Status.BUDGET
    assert "exceeds the exhaustive tier" in verdict.detail


# ---------------------------------------------------------------------------
# Sampled tier
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("gadget", SAMPLED_GADGETS, ids=[g.name for g in SAMPLED_GADGETS])
def test_sampled_gadgets_pass_reduced(gadget):
    verdict = check_reducible_sampled(gadget, samples=300, seed=42)
    assert verdict.status == Status.PASS, verdict.witness
    assert verdict.instances == 300


@pytest.mark.slow
@pytest.mark.parametrize("gadget", SAMPLED_GADGETS, ids=[g.name for g in SAMPLED_GADGETS])
def test_sampled_gadgets_pass_full(gadget):
    verdict = check_reducible_sampled(gadget, samples=10_000, seed=42)
    assert verdict.status == Status.PASS, verdict.witness


def test_triangle_control_fails():
    verdict = check_reducible_sampled(control_gadget(), samples=1000, seed=42)
    assert verdict.status == Status.FAIL
    assert verdict.witness["lists"] == {"a": [1, 2], "b": [1, 2], "c": [1, 2]}
    assert verdict.instances == verdict.witness["sample"] + 1


def test_threads_do_not_change_the_witness():
    single = check_reducible_sampled(control_gadget(), samples=1000, seed=3, threads=1)
    pooled = check_reducible_sampled(control_gadget(), samples=1000, seed=3, threads=3)
    assert pooled.to_json() == single.to_json()


def test_same_seed_same_report():
    gadget = build_gadget(ConfigId.C6)
    first = check_reducible_sampled(gadget, samples=200, seed=9)
    second = check_reducible_sampled(gadget, samples=200, seed=9)
    assert first.to_json() == second.to_json()


def test_deferral_covers_equal_pairs_only():
    gadget = build_gadget(ConfigId.C6)
    assert gadget.deferral({"a": (1, 2), "b": (1, 2), "c": (1, 3)})
    assert not gadget.deferral({"a": (1, 2), "b": (1, 3), "c": (1, 2)})
    c3 = build_gadget(ConfigId.C3)
    lists = {"a1": (1, 2), "b1": (1, 2), "a2": (3, 4), "b2": (3, 4), "c1": (1, 2, 5), "c2": (3, 4, 5)}
    assert c3.deferral(lists)
    assert not c3.deferral({**lists, "b2": (3, 5)})


# ---------------------------------------------------------------------------
# Aggregation
# ---------------------------------------------------------------------------


def test_recoloring_claims_pass():
    verdict = check_recoloring_claims(samples=200, seed=42)
    assert verdict.status == Status.PASS
    assert verdict.instances == 600


def test_verify_config_exhaustive():
    claims = verify_config(ConfigId.C11, Tier.EXHAUSTIVE)
    assert [(c.claim, c.variant, c.tier, c.status) for c in claims] == [
        ("C11", "default", Tier.EXHAUSTIVE, Status.PASS),
    ]


def test_verify_config_sampled_includes_recoloring():
    claims = verify_config(ConfigId.C6, Tier.SAMPLED, samples=100, seed=1, recolor_samples=100)
    assert [c.variant for c in claims] == ["default", "recolor"]
    assert overall_status(claims) == Status.PASS


def test_exhaustive_tier_skips_sampled_configs():
    assert verify_config(ConfigId.C9, Tier.EXHAUSTIVE) == []


def test_overall_status_precedence():
    def verdict(status):
        return ClaimVerdict(claim="C1", variant="default", tier=Tier.EXHAUSTIVE, status=status)

    assert overall_status([verdict(Status.PASS)]) == Status.PASS
    assert overall_status([verdict(Status.PASS), verdict(Status.BUDGET)]) == Status.BUDGET
    assert overall_status([verdict(Status.BUDGET), verdict(Status.FAIL)]) == Status.FAIL


def test_run_all_exhaustive_tier():
    report = run_all(Tier.EXHAUSTIVE)
    assert report.status == Status.PASS
    assert [c.claim for c in report.claims] == ["lemma"] * 3 + ["C1", "C2", "C8", "C11"]


@pytest.mark.slow
def test_run_all_both_tiers():
    report = run_all(Tier.BOTH, seed=42)
    assert report.status == Status.PASS
    assert report.claims[-1].variant == "recolor-weakened"
    again = run_all(Tier.BOTH, seed=42)
    assert again.to_json() == report.to_json()
