"""Residual list sizes of every gadget against its worst-case profile."""

import pytest

from choosability_verifier.coloring import EdgeSystem, residual_sizes
from choosability_verifier.exceptions import ResidualSizeError, UnknownGadgetError
from choosability_verifier.models import ConfigId
from choosability_verifier.reducibility import (
    Gadget,
    all_gadgets,
    build_gadget,
    control_gadget,
    gadgets_for,
    variants,
)

GADGETS = all_gadgets()


@pytest.mark.parametrize("gadget", GADGETS, ids=[g.name for g in GADGETS])
def test_profile_matches_quoted_sizes(gadget):
    assert gadget.profile() == gadget.expected


@pytest.mark.parametrize("gadget", GADGETS, ids=[g.name for g in GADGETS])
def test_every_uncolored_edge_has_a_profile_entry(gadget):
    assert set(gadget.expected) == set(gadget.uncolored)


def test_catalog_variant_counts():
    assert len(GADGETS) == 19
    assert variants(ConfigId.C6) == ["default"]
    assert variants(ConfigId.C5) == ["consecutive", "split"]
    assert variants(ConfigId.C7) == ["case-a", "case-b", "case-c"]
    assert len(variants(ConfigId.C9)) == 5
    assert variants(ConfigId.C10) == ["case-a", "case-b"]
    assert all(len(gadgets_for(c)) == 1 for c in (ConfigId.C1, ConfigId.C2, ConfigId.C8, ConfigId.C11))


def test_c5_consecutive_profile():
    profile = build_gadget(ConfigId.C5, "consecutive").profile()
    assert {label for label, size in profile.items() if size == 2} == {"l", "o", "q", "r"}
    assert {label for label, size in profile.items() if size == 9} == {"a", "c", "e"}
    assert profile["g"] == 7


def test_c1_single_color():
    gadget = build_gadget(ConfigId.C1)
    assert gadget.profile() == {"uv": 1}
    assert gadget.endpoint_names("uv") == ("u", "v")


def test_unknown_variant():
    with pytest.raises(UnknownGadgetError):
        build_gadget(ConfigId.C7, "case-z")


def test_control_uses_explicit_sizes():
    gadget = control_gadget()
    assert gadget.name == "control/triangle"
    assert gadget.profile() == {"a": 2, "b": 2, "c": 2}


def test_empty_residual_list_is_an_error():
    gadget = Gadget(
        config=None,
        variant="overloaded",
        system=EdgeSystem({"e": (1, 2)}),
        degrees={1: 8, 2: 8},
        uncolored=("e",),
    )
    with pytest.raises(ResidualSizeError):
        residual_sizes(gadget)


def test_uncolored_neighbors_free_a_color():
    gadget = Gadget(
        config=None,
        variant="path",
        system=EdgeSystem({"a": (1, 2), "b": (2, 3)}),
        degrees={1: 8, 2: 2, 3: 8},
        uncolored=("a", "b"),
    )
    # 9 - (7 + 1 - 1) on both edges
    assert residual_sizes(gadget) == {"a": 2, "b": 2}
