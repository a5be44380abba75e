"""The small list-coloring lemmas, checked mechanically."""

import pytest

from choosability_verifier.coloring import (
    LEMMAS,
    choosable_exhaustive,
    pendant_square,
    verify_even_cycle,
    verify_l2322,
    verify_lemma,
    verify_star3,
)
from choosability_verifier.exceptions import MalformedInstanceError
from choosability_verifier.models import Status


def test_even_cycles_up_to_eight():
    verdict = verify_even_cycle(8)
    assert verdict.status == Status.PASS
    assert verdict.instances > 0
    assert verdict.elapsed < 10


@pytest.mark.parametrize("max_len", [3, 5, 2])
def test_even_cycle_rejects_bad_lengths(max_len):
    with pytest.raises(MalformedInstanceError):
        verify_even_cycle(max_len)


def test_pendant_square_shape():
    system = pendant_square()
    assert system.incident("a") == frozenset({"b", "e"})
    assert system.incident("c") == frozenset({"b", "d"})


def test_pendant_square_negative_control():
    system = pendant_square()
    sizes = {label: 2 for label in system}
    verdict = choosable_exhaustive(system, sizes, where=lambda L: L["a"] == L["b"])
    assert verdict.status == Status.FAIL
    lists = verdict.witness["lists"]
    assert lists["a"] == lists["b"]


def test_pendant_square_lemma():
    assert verify_l2322().status == Status.PASS


def test_three_star_lemma():
    verdict = verify_star3()
    assert verdict.status == Status.PASS
    assert verdict.instances > 0


@pytest.mark.parametrize("name", LEMMAS)
def test_verify_lemma_by_name(name):
    assert verify_lemma(name).passed


def test_unknown_lemma():
    with pytest.raises(MalformedInstanceError, match="unknown lemma"):
        verify_lemma("lemma9")
