"""
Command-line front end
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from .coloring import LEMMAS, verify_lemma
from .config import (
    API_HOST,
    API_PORT,
    DEFAULT_RECOLOR_SAMPLES,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    LOCALITY_RADIUS,
    LOG_LEVEL,
    MAX_DEGREE,
)
from .discharge import apply_rules, audit, explain_element, initial_charges, parse_element, render
from .exceptions import VerifierError
from .graph import generate_planar, load_graph, serialize_rotation
from .models import CommandRequest, ConfigId, RunReport, Status, Tier
from .reducibility import overall_status, run_all, verify_config
from .reports import classify_report, faces_report, match_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choosability-verifier",
        description="Configurations, discharging and reducibility checks for 9-edge-choosability of planar graphs with maximum degree 8",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("faces", help="Trace the faces of an embedded graph")
    p.add_argument("input_path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="Classify v as a neighbor of u")
    p.add_argument("input_path")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("match", help="Find configuration occurrences")
    p.add_argument("input_path")
    p.add_argument("--config", type=ConfigId, choices=list(ConfigId), default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("discharge", help="Run the discharging rules and audit the charges")
    p.add_argument("input_path")
    p.add_argument("--trace", action="store_true", help="Print every transfer")
    p.add_argument("--per-component", action="store_true", help="Audit each connected component on its own")
    p.add_argument("--radius", type=int, default=LOCALITY_RADIUS)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("explain", help="Transfers and case label of one vertex or face")
    p.add_argument("input_path")
    p.add_argument("element", help="Vertex id, or f:<index> for a face")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-lemma", help="Check one of the small list-coloring lemmas")
    p.add_argument("lemma", choices=LEMMAS)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-config", help="Check reducibility of one configuration")
    p.add_argument("config", type=ConfigId, choices=list(ConfigId))
    _add_run_flags(p)

    p = sub.add_parser("run-all", help="Check every lemma and configuration")
    _add_run_flags(p)

    p = sub.add_parser("gen", help="Generate a random embedded planar graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=MAX_DEGREE)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--deletions", type=float, default=0.0, help="Fraction of edges to delete, keeping connectivity")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("serve", help="Serve the HTTP API")
    p.add_argument("--host", default=API_HOST)
    p.add_argument("--port", type=int, default=API_PORT)
    return parser


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tier", type=Tier, choices=list(Tier), default=Tier.BOTH)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--recolor-samples", type=int, default=DEFAULT_RECOLOR_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=DEFAULT_THREADS)
    p.add_argument("--json", action="store_true")


def to_request(args: argparse.Namespace) -> CommandRequest:
    options = {k: v for k, v in vars(args).items() if k not in ("subcommand", "input_path")}
    return CommandRequest(subcommand=args.subcommand, input_path=getattr(args, "input_path", None), options=options)


# === Handlers ===

def _faces(req: CommandRequest) -> int:
    g = load_graph(req.input_path)
    report = faces_report(g)
    if req.options["json"]:
        print(report.to_json())
        return EXIT_OK
    print(f"V={report.vertices} E={report.edges} F={len(report.faces)} V-E+F={report.euler_characteristic}")
    for face in report.faces:
        print(f"f{face.index} (degree {face.degree}): {' '.join(str(v) for v in face.vertices)}")
    return EXIT_OK


def _classify(req: CommandRequest) -> int:
    g = load_graph(req.input_path)
    report = classify_report(g, req.options["u"], req.options["v"])
    if req.options["json"]:
        print(report.to_json())
    else:
        print(f"{report.v} as a neighbor of {report.u}: {report.base.value}, {report.special.value}")
    return EXIT_OK


def _match(req: CommandRequest) -> int:
    g = load_graph(req.input_path)
    report = match_report(g, req.options["config"])
    if req.options["json"]:
        print(report.to_json())
        return EXIT_OK
    print(f"{len(report.matches)} matches")
    for m in report.matches:
        binding = ", ".join(f"{role}={v}" for role, v in m.binding.items())
        print(f"{m.config.value}: {binding}")
    return EXIT_OK


def _discharge(req: CommandRequest) -> int:
    g = load_graph(req.input_path)
    opts = req.options
    report = audit(g, per_component=opts["per_component"], radius=opts["radius"])
    if opts["trace"] and not opts["per_component"]:
        # keep stdout parseable when a JSON report follows
        out = sys.stderr if opts["json"] else sys.stdout
        for t in apply_rules(g, initial_charges(g)).log:
            times = f" x{t.multiplicity}" if t.multiplicity > 1 else ""
            print(f"{t.rule}: {t.source} -> {t.target} {render(t.amount)}{times}", file=out)
    if opts["json"]:
        print(report.to_json())
    else:
        print(f"initial total {report.initial_total}, final total {report.final_total}")
        for n in report.negatives:
            print(f"negative: {n.element} at {n.charge}")
        print(f"configurations: {report.configs_found or 'none'}")
        for miss in report.locality_misses:
            print(f"no configuration within distance {opts['radius']} of {miss}")
        if report.contradiction_flag:
            print("CONTRADICTION: configuration-free graph reached")
    negative = report.contradiction_flag or report.initial_total != report.final_total
    return EXIT_NEGATIVE if negative else EXIT_OK


def _explain(req: CommandRequest) -> int:
    g = load_graph(req.input_path)
    explanation = explain_element(g, parse_element(g, req.options["element"]))
    if req.options["json"]:
        print(explanation.to_json())
        return EXIT_OK
    print(f"{explanation.element}: {explanation.branch}")
    print(f"charge {explanation.initial_charge} -> {explanation.final_charge}")
    for t in explanation.transfers:
        print(f"  {t.rule}: {t.source} -> {t.target} {render(t.amount)}")
    return EXIT_OK


def _verify_lemma(req: CommandRequest) -> int:
    verdict = verify_lemma(req.options["lemma"], req.options["max_len"])
    if req.options["json"]:
        print(verdict.to_json())
    else:
        print(f"{req.options['lemma']}: {verdict.status.value} ({verdict.instances} assignments) {verdict.detail or ''}".rstrip())
    return EXIT_OK if verdict.passed else EXIT_NEGATIVE


def _print_run(report: RunReport, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        for c in report.claims:
            extra = f", {c.deferred} deferred" if c.deferred else ""
            print(f"{c.claim}/{c.variant} [{c.tier.value}]: {c.status.value} ({c.instances} instances{extra})")
            if c.witness:
                print(f"  witness: {c.witness}")
        print(f"overall: {report.status.value}")
    return EXIT_OK if report.status == Status.PASS else EXIT_NEGATIVE


def _run_options(opts: Dict) -> Dict:
    return {
        "samples": opts["samples"],
        "seed": opts["seed"],
        "threads": opts["threads"],
        "recolor_samples": opts["recolor_samples"],
    }


def _verify_config(req: CommandRequest) -> int:
    opts = req.options
    claims = verify_config(opts["config"], opts["tier"], **_run_options(opts))
    return _print_run(RunReport(status=overall_status(claims), claims=claims), opts["json"])


def _run_all(req: CommandRequest) -> int:
    opts = req.options
    return _print_run(run_all(opts["tier"], **_run_options(opts)), opts["json"])


def _gen(req: CommandRequest) -> int:
    opts = req.options
    g = generate_planar(opts["seed"], opts["n"], opts["max_degree"], deletions=opts["deletions"])
    text = serialize_rotation(g)
    if opts["output"]:
        with open(opts["output"], "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"[CLI] wrote {len(g)} vertices, {g.num_edges} edges to {opts['output']}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _serve(req: CommandRequest) -> int:
    import uvicorn

    uvicorn.run("choosability_verifier.main:app", host=req.options["host"], port=req.options["port"])
    return EXIT_OK


HANDLERS: Dict[str, Callable[[CommandRequest], int]] = {
    "faces": _faces,
    "classify": _classify,
    "match": _match,
    "discharge": _discharge,
    "explain": _explain,
    "verify-lemma": _verify_lemma,
    "verify-config": _verify_config,
    "run-all": _run_all,
    "gen": _gen,
    "serve": _serve,
}


def dispatch(req: CommandRequest) -> int:
    """Run one subcommand; 0 on success, 1 on a negative finding, 2 on bad input"""
    try:
        return HANDLERS[req.subcommand](req)
    except (VerifierError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    args = build_parser().parse_args(argv)
    return dispatch(to_request(args))


if __name__ == "__main__":
    raise SystemExit(main())
