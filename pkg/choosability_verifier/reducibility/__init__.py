"""
Reducibility of configurations C1-C11
"""
from .checks import (
    EXHAUSTIVE_CONFIGS,
    RECOLOR_CLAIMS,
    WEAKENED_CLAIM,
    RecolorClaim,
    check_recoloring_claims,
    check_reducible_exhaustive,
    check_reducible_sampled,
    overall_status,
    random_recolor_instance,
    recolor_claim_verdict,
    run_all,
    verify_config,
    weakened_control,
)
from .gadgets import Gadget, all_gadgets, build_gadget, control_gadget, gadgets_for, variants

__all__ = [
    "Gadget",
    "build_gadget",
    "gadgets_for",
    "all_gadgets",
    "variants",
    "control_gadget",
    "EXHAUSTIVE_CONFIGS",
    "RECOLOR_CLAIMS",
    "WEAKENED_CLAIM",
    "RecolorClaim",
    "random_recolor_instance",
    "check_reducible_exhaustive",
    "check_reducible_sampled",
    "check_recoloring_claims",
    "recolor_claim_verdict",
    "weakened_control",
    "verify_config",
    "overall_status",
    "run_all",
]
