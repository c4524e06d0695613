"""Command line interface.

Exit status: 0 success, 1 a check came out negative, 2 bad input,
3 ball size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from . import __version__
from ._accel import BACKEND
from .core import CoxeterPresentation, PresentationError, reduce
from .descent import CAP_ENV, BallCapExceeded, left_descents, right_descents
from .io import digest, load_presentation
from .structure import (
    boundary_minimal,
    irreducible_components,
    maximal_spherical_subsets,
    parabolic_orbit_dense,
)
from .verify import DEFAULT_SUITES, MUTATION_ENV, MUTATIONS, SUITES, run_suites
from .witness import FiniteGroup, QuasiDensityWitness, Splitting, certify_witness, find_hole, find_witness

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _names(p: CoxeterPresentation, t) -> list[str]:
    return p.names(t)


def _presentation_block(p, name, path):
    return {"file": path, "name": name, "generators": list(p.generators), "digest": digest(p)}


def cmd_reduce(p: CoxeterPresentation, args) -> tuple[dict, int]:
    raw = args.word_flag if args.word_flag is not None else (args.word or "")
    nf = reduce(p, raw)
    return {
        "input": raw,
        "normal_form": p.format(nf),
        "letters": [p.generators[i] for i in nf],
        "length": len(nf),
        "right_descents": _names(p, right_descents(p, nf)),
        "left_descents": _names(p, left_descents(p, nf)),
    }, EXIT_OK


def cmd_analyze(p: CoxeterPresentation, args) -> tuple[dict, int]:
    dec = irreducible_components(p)
    verdict = boundary_minimal(p)
    out = {
        "components": [_names(p, c) for c in dec.components],
        "s_tilde": _names(p, dec.s_tilde),
        "finite_part": _names(p, dec.finite_part),
        "maximal_spherical_subsets": [_names(p, c) for c in maximal_spherical_subsets(p)],
        "minimality": verdict.outcome,
        "splitting": [_names(p, part) for part in verdict.splitting] if verdict.splitting else None,
    }
    if args.subset:
        out["orbit_density"] = [
            {"subset": _names(p, p.subset(t)), "orbit_dense": parabolic_orbit_dense(p, t)} for t in args.subset
        ]
    return out, EXIT_OK


def _step_block(p, step):
    return {
        "letter": p.generators[step.letter] if step.letter is not None else None,
        "from": _names(p, step.source),
        "to": _names(p, step.target),
        "checked": step.checked,
        "failures": [p.format(w) for w in step.failures],
    }


def cmd_witness(p: CoxeterPresentation, args) -> tuple[dict, int]:
    outcome = find_witness(p)
    if isinstance(outcome, FiniteGroup):
        return {"outcome": "finite-group"}, EXIT_OK
    if isinstance(outcome, Splitting):
        holes = []
        code = EXIT_OK
        for s in range(p.rank):
            h = find_hole(p, s, args.hole_radius, args.n_max)
            holes.append({
                "generator": p.generators[s],
                "hole": p.format(h.element) if h else None,
                "distance": h.distance if h else None,
            })
            if h is None:
                code = EXIT_NEGATIVE
        return {
            "outcome": "splitting",
            "splitting": [_names(p, outcome.first), _names(p, outcome.rest)],
            "hole_radius": args.hole_radius,
            "n_max": args.n_max,
            "holes": holes,
        }, code
    w: QuasiDensityWitness = outcome
    rep = certify_witness(p, w, args.radius)
    density = rep.density
    return {
        "outcome": "witness",
        "s0": p.generators[w.s0],
        "start_clique": _names(p, w.start_clique),
        "chain": p.format(w.chain),
        "trace": [_names(p, v) for v in w.trace],
        "bound_n": w.bound_n,
        "certification": {
            "radius": rep.radius,
            "certified": rep.passed,
            "empirical_n": getattr(density, "n", None),
            "density": type(density).__name__,
            "counterexample": p.format(density.counterexample) if hasattr(density, "counterexample") else None,
            "inclusion": _step_block(p, rep.inclusion),
            "steps": [_step_block(p, s) for s in rep.steps],
        },
    }, EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_verify(p: CoxeterPresentation, args) -> tuple[dict, int]:
    names = DEFAULT_SUITES if not args.lemmas else [n.strip() for n in args.lemmas.split(",") if n.strip()]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise PresentationError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    mutation = os.environ.get(MUTATION_ENV)
    if mutation and mutation not in MUTATIONS:
        raise PresentationError(f"unknown mutation {mutation!r}")
    results = run_suites(p, args.radius, names, descents=MUTATIONS.get(mutation) if mutation else None)
    out = {
        "radius": args.radius,
        "suites": [
            {"name": r.name, "checked": r.checked, "failures": r.failures, "passed": r.passed, "counterexamples": r.violations}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    if mutation:
        out["mutation"] = mutation
    return out, EXIT_OK if out["all_passed"] else EXIT_NEGATIVE


COMMANDS = {"reduce": cmd_reduce, "analyze": cmd_analyze, "witness": cmd_witness, "verify": cmd_verify}


def _render_text(report: dict) -> str:
    lines = []

    def emit(key, val, indent=0):
        pad = "  " * indent
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            for k, v in val.items():
                emit(k, v, indent + 1)
        elif isinstance(val, list) and val and all(isinstance(v, dict) for v in val):
            lines.append(f"{pad}{key}:")
            for v in val:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={_flat(x)}" for k, x in v.items()))
        else:
            lines.append(f"{pad}{key}: {_flat(val)}")

    for k, v in report.items():
        emit(k, v)
    return "\n".join(lines)


def _flat(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        if all(isinstance(x, list) for x in v):
            return " | ".join("{" + " ".join(x) + "}" for x in v) or "[]"
        return "{" + " ".join(str(x) for x in v) + "}"
    return str(v)


def _verify_table(report: dict) -> str:
    rows = [f"{'suite':<24}{'checked':>10}{'failures':>10}  result"]
    for s in report["result"]["suites"]:
        rows.append(f"{s['name']:<24}{s['checked']:>10}{s['failures']:>10}  {'PASS' if s['passed'] else 'FAIL'}")
        for c in s["counterexamples"]:
            rows.append(f"    {c}")
    return "\n".join(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="racgmin", description="Boundary minimality for right-angled Coxeter systems.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="presentation file (JSON)")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock timing from the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="normal form, length and descent sets of a word")
    p.add_argument("word", nargs="?", help="space-separated generator names")
    p.add_argument("--word", dest="word_flag", help="same as the positional word")

    p = sub.add_parser("analyze", parents=[common], help="irreducible decomposition and minimality verdict")
    p.add_argument("--subset", action="append", help="space-separated names; decides density of its boundary orbit")

    p = sub.add_parser("witness", parents=[common], help="construct and certify a quasi-density witness")
    p.add_argument("--radius", type=int, default=8, help="certification radius (default 8)")
    p.add_argument("--n-max", type=int, default=4, help="hole threshold for reducible systems (default 4)")
    p.add_argument("--hole-radius", type=int, default=12, help="ball radius for hole search (default 12)")

    p = sub.add_parser("verify", parents=[common], help="exhaustive structural checks on a ball")
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("--lemmas", "--suites", dest="lemmas", help=f"comma-separated suites (default: {','.join(DEFAULT_SUITES)}; also: deletion)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    report = {"command": args.command, "arguments": {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "format", "no_timing")}}
    try:
        p, name = load_presentation(args.file)
        report["presentation"] = _presentation_block(p, name, args.file)
        result, code = COMMANDS[args.command](p, args)
    except PresentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BallCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.format == "machine":
            report["error"] = {"kind": "ball-cap", "cap": exc.cap, "complete_radius": exc.reached_radius, "elements": exc.size, "env": CAP_ENV}
            print(json.dumps(report, indent=2))
        return EXIT_CAP
    report["result"] = result
    report["exit_code"] = code
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 4), "backend": BACKEND}
    if args.format == "machine":
        print(json.dumps(report, indent=2))
    else:
        print(_render_text({k: v for k, v in report.items() if k != "result" or args.command != "verify"}))
        if args.command == "verify":
            print(_verify_table(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
