"""
Reducibility verdicts: exhaustive and sampled list-coloring checks of the
gadgets, the recoloring sub-claims, and the aggregated run
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..coloring import (
    LEMMAS,
    EdgeSystem,
    RecolorInstance,
    choosable_exhaustive,
    color_edges,
    edge_order,
    lists_payload,
    recolor_rotate_or_cascade,
    sample_assignment,
    star_system,
    verify_lemma,
)
from ..config import DEFAULT_RECOLOR_SAMPLES, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_THREADS, NUM_COLORS
from ..exceptions import BudgetExceededError
from ..models import ClaimVerdict, ConfigId, RunReport, Status, Tier, Verdict
from .gadgets import Gadget, gadgets_for

logger = logging.getLogger(__name__)

EXHAUSTIVE_CONFIGS = (ConfigId.C1, ConfigId.C2, ConfigId.C8, ConfigId.C11)

Assignment = Dict[str, Tuple[int, ...]]


# === Exhaustive tier ===

def check_reducible_exhaustive(gadget: Gadget) -> Verdict:
    """Every assignment matching the gadget's profile colors the uncolored edges"""
    try:
        verdict = choosable_exhaustive(gadget.uncolored_system(), gadget.profile())
    except BudgetExceededError as e:
        logger.warning(f"[Reduce] {gadget.name}: {e}")
        return Verdict(status=Status.BUDGET, detail=str(e))
    logger.info(f"[Reduce] {gadget.name}: exhaustive {verdict.status.value} ({verdict.instances} assignments)")
    return verdict


# === Sampled tier ===

def _colorable_batch(endpoints: Dict[str, Tuple[int, int]], batch: List[Assignment]) -> List[bool]:
    system = EdgeSystem(endpoints)
    return [color_edges(system, lists) is not None for lists in batch]


def _batches(items: List[Assignment], count: int) -> List[List[Assignment]]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def check_reducible_sampled(
    gadget: Gadget,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    threads: int = DEFAULT_THREADS,
) -> Verdict:
    """
    Draw `samples` canonical assignments for the gadget's profile and color
    each one. An uncolorable sample covered by the gadget's recoloring
    deferral counts as deferred; any other is a failure, and the lowest
    failing sample index supplies the witness whatever the thread count.
    """
    started = time.perf_counter()
    system = gadget.uncolored_system()
    sizes = gadget.profile()
    order = edge_order(system)
    rng = random.Random(f"{seed}:{gadget.name}")
    drawn = [sample_assignment(order, sizes, rng) for _ in range(samples)]

    if threads > 1 and samples > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            batches = _batches(drawn, threads)
            results = executor.map(_colorable_batch, [system.endpoints] * len(batches), batches)
            colorable = [ok for chunk in results for ok in chunk]
    else:
        colorable = _colorable_batch(system.endpoints, drawn)

    deferred = 0
    for index, (lists, ok) in enumerate(zip(drawn, colorable)):
        if ok:
            continue
        if gadget.deferral is not None and gadget.deferral(lists):
            deferred += 1
            continue
        logger.error(
            f"[Reduce] {gadget.name}: sample {index} is not colorable: {lists_payload(lists, system.labels)}"
        )
        return Verdict(
            status=Status.FAIL,
            witness={"sample": index, "lists": lists_payload(lists, system.labels)},
            instances=index + 1,
            deferred=deferred,
            elapsed=time.perf_counter() - started,
        )

    logger.info(f"[Reduce] {gadget.name}: {samples} samples PASS ({deferred} deferred to recoloring)")
    return Verdict(
        status=Status.PASS,
        instances=samples,
        deferred=deferred,
        elapsed=time.perf_counter() - started,
    )


# === Recoloring sub-claims ===

@dataclass(frozen=True)
class RecolorClaim:
    """Sizes of the allowed lists on the recolorable star at u, and the edges that must move"""
    config: ConfigId
    variant: str
    sizes: Tuple[Tuple[str, int], ...]
    targets: Tuple[str, ...]

    @property
    def name(self) -> str:
        return f"{self.config.value}/{self.variant}"


RECOLOR_CLAIMS = (
    RecolorClaim(ConfigId.C3, "recolor", (("e1", 2), ("f1", 2), ("e2", 2), ("f2", 2), ("g", 4)),
                 ("e1", "f1", "e2", "f2")),
    RecolorClaim(ConfigId.C4, "recolor", (("e1", 2), ("f1", 2), ("e2", 2), ("g1", 4), ("g2", 4)),
                 ("e1", "f1", "e2")),
    RecolorClaim(ConfigId.C6, "recolor", (("e", 2), ("f", 2), ("g1", 5), ("g2", 4), ("g3", 4), ("g4", 2)),
                 ("e", "f")),
)

WEAKENED_CLAIM = RecolorClaim(
    ConfigId.C3, "recolor-weakened", (("e1", 2), ("f1", 2), ("e2", 2), ("f2", 2), ("g", 3)),
    ("e1", "f1", "e2", "f2"),
)


def random_recolor_instance(claim: RecolorClaim, rng: random.Random) -> RecolorInstance:
    """
    All recolorable edges meet at u, so the current coloring uses distinct
    colors; each allowed list holds the current color plus random others.
    """
    labels = [label for label, _ in claim.sizes]
    star = star_system(len(labels))
    system = EdgeSystem({label: star.endpoints[key] for label, key in zip(labels, star.labels)})
    palette = list(range(1, NUM_COLORS + 1))
    current = dict(zip(labels, rng.sample(palette, len(labels))))
    allowed = {}
    for label, size in claim.sizes:
        others = [c for c in palette if c != current[label]]
        allowed[label] = frozenset([current[label], *rng.sample(others, size - 1)])
    return RecolorInstance(system=system, current=current, allowed=allowed, targets=frozenset(claim.targets))


def _run_claim(claim: RecolorClaim, samples: int, seed: int) -> Tuple[int, Optional[RecolorInstance]]:
    rng = random.Random(f"{seed}:{claim.name}")
    failures = 0
    first = None
    for _ in range(samples):
        inst = random_recolor_instance(claim, rng)
        if recolor_rotate_or_cascade(inst) is None:
            failures += 1
            first = first or inst
    return failures, first


def _instance_payload(inst: RecolorInstance) -> Dict[str, object]:
    return {
        "current": dict(inst.current),
        "allowed": {label: sorted(colors) for label, colors in inst.allowed.items()},
        "targets": sorted(inst.targets),
    }


def recolor_claim_verdict(claim: RecolorClaim, samples: int, seed: int) -> Verdict:
    started = time.perf_counter()
    failures, first = _run_claim(claim, samples, seed)
    if first is not None:
        logger.error(f"[Reduce] {claim.name}: {failures} of {samples} instances could not be recolored")
        return Verdict(
            status=Status.FAIL,
            witness=_instance_payload(first),
            instances=samples,
            detail=f"{failures} instances without a recoloring",
            elapsed=time.perf_counter() - started,
        )
    logger.info(f"[Reduce] {claim.name}: {samples} instances recolored")
    return Verdict(status=Status.PASS, instances=samples, elapsed=time.perf_counter() - started)


def weakened_control(samples: int = DEFAULT_RECOLOR_SAMPLES, seed: int = DEFAULT_SEED) -> Verdict:
    """
    The first sub-claim with one color fewer on g. Failures are recorded in
    the detail rather than treated as a refutation.
    """
    started = time.perf_counter()
    failures, first = _run_claim(WEAKENED_CLAIM, samples, seed)
    logger.info(f"[Reduce] {WEAKENED_CLAIM.name}: {failures} of {samples} instances without a recoloring")
    return Verdict(
        status=Status.PASS,
        witness=_instance_payload(first) if first else None,
        instances=samples,
        detail=f"{failures} of {samples} instances without a recoloring",
        elapsed=time.perf_counter() - started,
    )


def check_recoloring_claims(samples: int = DEFAULT_RECOLOR_SAMPLES, seed: int = DEFAULT_SEED) -> Verdict:
    """Random instances of every recoloring sub-claim must all recolor a target"""
    started = time.perf_counter()
    total = 0
    for claim in RECOLOR_CLAIMS:
        verdict = recolor_claim_verdict(claim, samples, seed)
        total += verdict.instances
        if not verdict.passed:
            return verdict.model_copy(update={"detail": f"{claim.name}: {verdict.detail}", "instances": total})
    return Verdict(
        status=Status.PASS,
        instances=total,
        detail=", ".join(claim.name for claim in RECOLOR_CLAIMS),
        elapsed=time.perf_counter() - started,
    )


# === Aggregated run ===

def overall_status(claims: List[ClaimVerdict]) -> Status:
    """FAIL if anything failed, BUDGET if something could not run, PASS otherwise"""
    statuses = {c.status for c in claims}
    if Status.FAIL in statuses:
        return Status.FAIL
    return Status.BUDGET if Status.BUDGET in statuses else Status.PASS


def _claim(claim: str, variant: str, tier: Tier, verdict: Verdict) -> ClaimVerdict:
    return ClaimVerdict(
        claim=claim,
        variant=variant,
        tier=tier,
        status=verdict.status,
        instances=verdict.instances,
        deferred=verdict.deferred,
        witness=verdict.witness,
    )


def verify_config(
    config: ConfigId,
    tier: Tier = Tier.BOTH,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    threads: int = DEFAULT_THREADS,
    recolor_samples: int = DEFAULT_RECOLOR_SAMPLES,
) -> List[ClaimVerdict]:
    """Verdicts for every variant of one configuration under the requested tier"""
    exhaustive = config in EXHAUSTIVE_CONFIGS
    verdicts: List[ClaimVerdict] = []
    for gadget in gadgets_for(config):
        if exhaustive and tier in (Tier.EXHAUSTIVE, Tier.BOTH):
            verdicts.append(_claim(config.value, gadget.variant, Tier.EXHAUSTIVE, check_reducible_exhaustive(gadget)))
        if not exhaustive and tier in (Tier.SAMPLED, Tier.BOTH):
            verdict = check_reducible_sampled(gadget, samples, seed, threads)
            verdicts.append(_claim(config.value, gadget.variant, Tier.SAMPLED, verdict))
    if tier in (Tier.SAMPLED, Tier.BOTH):
        for claim in RECOLOR_CLAIMS:
            if claim.config == config:
                verdict = recolor_claim_verdict(claim, recolor_samples, seed)
                verdicts.append(_claim(config.value, claim.variant, Tier.SAMPLED, verdict))
    return verdicts


def run_all(
    tier: Tier = Tier.BOTH,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    threads: int = DEFAULT_THREADS,
    recolor_samples: int = DEFAULT_RECOLOR_SAMPLES,
) -> RunReport:
    """
    Lemmas and exhaustive gadgets first, then sampled gadgets and recoloring
    sub-claims, in catalog order. The first FAIL stops the run.
    """
    claims: List[ClaimVerdict] = []

    def halted() -> bool:
        if claims and claims[-1].status == Status.FAIL:
            failed = claims[-1]
            logger.error(f"[Reduce] {failed.claim}/{failed.variant} FAILED, witness: {failed.witness}")
            return True
        return False

    if tier in (Tier.EXHAUSTIVE, Tier.BOTH):
        for name in LEMMAS:
            claims.append(_claim("lemma", name, Tier.EXHAUSTIVE, verify_lemma(name)))
            if halted():
                return RunReport(status=Status.FAIL, claims=claims)
        for config in EXHAUSTIVE_CONFIGS:
            for verdict in verify_config(config, Tier.EXHAUSTIVE):
                claims.append(verdict)
                if halted():
                    return RunReport(status=Status.FAIL, claims=claims)

    if tier in (Tier.SAMPLED, Tier.BOTH):
        for config in ConfigId:
            if config in EXHAUSTIVE_CONFIGS:
                continue
            for verdict in verify_config(config, Tier.SAMPLED, samples, seed, threads, recolor_samples):
                claims.append(verdict)
                if halted():
                    return RunReport(status=Status.FAIL, claims=claims)
        claims.append(_claim(
            WEAKENED_CLAIM.config.value, WEAKENED_CLAIM.variant, Tier.SAMPLED,
            weakened_control(recolor_samples, seed),
        ))

    return RunReport(status=overall_status(claims), claims=claims)
