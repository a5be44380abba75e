"""
List edge coloring kernel
"""
from .enumeration import (
    CanonicalSampler,
    canonical_form,
    choosable_exhaustive,
    edge_order,
    is_tight,
    iter_canonical,
    iter_tight,
    sample_assignment,
)
from .lemmas import LEMMAS, pendant_square, verify_even_cycle, verify_l2322, verify_lemma, verify_star3
from .recolor import RecolorInstance, availability_digraph, brute_force_recolor, recolor_rotate_or_cascade
from .residual import residual_sizes
from .solver import (
    EdgeSystem,
    color_edges,
    cycle_system,
    format_assignment,
    is_proper,
    lists_payload,
    parse_assignment,
    path_system,
    star_system,
)

__all__ = [
    "EdgeSystem",
    "color_edges",
    "is_proper",
    "path_system",
    "cycle_system",
    "star_system",
    "format_assignment",
    "parse_assignment",
    "lists_payload",
    "canonical_form",
    "edge_order",
    "iter_canonical",
    "iter_tight",
    "is_tight",
    "sample_assignment",
    "CanonicalSampler",
    "choosable_exhaustive",
    "LEMMAS",
    "pendant_square",
    "verify_even_cycle",
    "verify_l2322",
    "verify_star3",
    "verify_lemma",
    "residual_sizes",
    "RecolorInstance",
    "availability_digraph",
    "recolor_rotate_or_cascade",
    "brute_force_recolor",
]
