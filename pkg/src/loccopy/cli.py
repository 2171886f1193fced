"""Command-line interface.

Subcommands: majorize, catalysis, check-pair, synthesize, simulate,
generate, survey.  Output is a single JSON object on stdout (or a human
table with --pretty).  Exit codes: 0 for success or an affirmative
verdict, 1 for a negative verdict, 2 for input errors.  File arguments
accept "-" for stdin.  The default seed comes from $LOCCOPY_SEED when
set, else 0.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys

import numpy as np

from . import generators, serialization
from .config import DEFAULT, AmbiguityError, NumericConfig, PreconditionError
from .copying import (
    ORTHOGONAL,
    orthogonality,
    pair_operator,
    spectral_verdict,
    synthesize_protocol,
)
from .majorization import CATALYTIC, DIRECT, catalytic_copy_check, majorizes
from .simulator import run_copy
from .states import max_entangled

TAU = 2.0 * math.pi

OK = 0
NEGATIVE = 1
INPUT_ERROR = 2

_TOLERANCE_FLAGS = (
    "unitarity_tol",
    "phase_tol",
    "ortho_tol",
    "sum_tol",
    "max_ent_tol",
    "fidelity_tol",
    "synthesis_tol",
)


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None


def _write_json(obj: dict, path: str | None) -> None:
    text = json.dumps(obj)
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _emit(args, payload: dict, pretty_lines: list[str]) -> None:
    if args.pretty:
        print("\n".join(pretty_lines))
    else:
        print(json.dumps(payload))


def _config_from(args) -> NumericConfig:
    overrides = {
        name: getattr(args, name)
        for name in _TOLERANCE_FLAGS
        if getattr(args, name, None) is not None
    }
    return dataclasses.replace(DEFAULT, **overrides)


def _default_seed() -> int:
    return int(os.environ.get("LOCCOPY_SEED", "0"))


def _load_pair(paths: list[str]):
    if len(paths) == 1:
        return serialization.pair_from_json(_load_json(paths[0]))
    psi1 = serialization.state_from_json(_load_json(paths[0]))
    psi2 = serialization.state_from_json(_load_json(paths[1]))
    return psi1, psi2


def _partial_sum_rows(v: np.ndarray, w: np.ndarray, tol: float) -> list[dict]:
    n = max(v.size, w.size)
    a = np.pad(np.sort(v)[::-1], (0, n - v.size))
    b = np.pad(np.sort(w)[::-1], (0, n - w.size))
    ca, cb = np.cumsum(a), np.cumsum(b)
    return [
        {"r": k + 1, "lhs": float(ca[k]), "rhs": float(cb[k]),
         "satisfied": bool(ca[k] <= cb[k] + tol)}
        for k in range(n)
    ]


def _sum_table(rows: list[dict], lhs: str, rhs: str) -> list[str]:
    out = [f"{'r':>3}  {lhs:>18}  {rhs:>18}  ok"]
    for row in rows:
        mark = "yes" if row["satisfied"] else "NO"
        out.append(f"{row['r']:>3}  {row['lhs']:>18.12f}  {row['rhs']:>18.12f}  {mark}")
    return out


def cmd_majorize(args) -> int:
    cfg = _config_from(args)
    v = serialization.schmidt_from_json(_load_json(args.src))
    w = serialization.schmidt_from_json(_load_json(args.dst))
    result = majorizes(w, v, cfg)
    rows = _partial_sum_rows(v.probs, w.probs, cfg.sum_tol)
    payload = {
        "majorizes": result,
        "nielsen_transformable": result,
        "partial_sums": rows,
    }
    pretty = _sum_table(rows, "sum src", "sum dst")
    pretty.append(f"dst majorizes src: {result}")
    _emit(args, payload, pretty)
    return OK if result else NEGATIVE


def cmd_catalysis(args) -> int:
    cfg = _config_from(args)
    psi = serialization.schmidt_from_json(_load_json(args.psi))
    blank = serialization.schmidt_from_json(_load_json(args.blank))
    verdict = catalytic_copy_check(psi, blank, cfg)
    tensored_src = np.outer(psi.probs, blank.probs).ravel()
    tensored_dst = np.outer(psi.probs, psi.probs).ravel()
    rows = _partial_sum_rows(tensored_src, tensored_dst, cfg.sum_tol)
    payload = {"verdict": verdict, "tensored_partial_sums": rows}
    pretty = _sum_table(rows, "sum psi*blank", "sum psi*psi")
    pretty.append(f"verdict: {verdict}")
    _emit(args, payload, pretty)
    return OK if verdict in (DIRECT, CATALYTIC) else NEGATIVE


def cmd_check_pair(args) -> int:
    cfg = _config_from(args)
    psi1, psi2 = _load_pair(args.states)
    t = pair_operator(psi1, psi2, cfg)
    kind = orthogonality(t, cfg)
    report = spectral_verdict(t, cfg)
    payload = {"d": psi1.d, "orthogonality": kind}
    payload.update(serialization.report_to_json(report))
    pretty = [
        f"d = {psi1.d}",
        f"orthogonality: {kind}",
        f"trace: {report.trace:.3e}",
        f"rotation removed: {report.rotation:.9f} rad",
        "clusters (phase, multiplicity): "
        + ", ".join(f"({rep:.6f}, {count})" for rep, count in report.clusters),
        f"copyable: {report.copyable}"
        + (f" with M = {report.detected_m}" if report.copyable else ""),
    ]
    _emit(args, payload, pretty)
    return OK if report.copyable else NEGATIVE


def cmd_synthesize(args) -> int:
    cfg = _config_from(args)
    psi1, psi2 = _load_pair(args.states)
    if args.blank is not None:
        blank = serialization.state_from_json(_load_json(args.blank))
    else:
        blank = max_entangled(psi1.d)
    try:
        protocol = synthesize_protocol(psi1, psi2, blank, cfg)
    except PreconditionError as exc:
        print(f"not synthesizable: {exc}", file=sys.stderr)
        return NEGATIVE
    _write_json(serialization.protocol_to_json(protocol), args.out)
    if args.pretty:
        print(
            f"synthesized protocol for d = {protocol.d}; "
            f"phases: {protocol.phases[0]:+.9f}, {protocol.phases[1]:+.9f}",
            file=sys.stderr,
        )
    return OK


def cmd_simulate(args) -> int:
    cfg = _config_from(args)
    protocol = serialization.protocol_from_json(_load_json(args.protocol))
    psi = serialization.state_from_json(_load_json(args.state))
    fidelity, theta = run_copy(protocol, psi, cfg)
    passes = fidelity >= 1.0 - cfg.fidelity_tol
    payload = {"fidelity": fidelity, "theta": theta, "passes": passes}
    pretty = [
        f"fidelity: {fidelity:.15f}",
        f"recovered theta: {theta:+.9f}",
        f"passes (>= 1 - {cfg.fidelity_tol:g}): {passes}",
    ]
    _emit(args, payload, pretty)
    return OK if passes else NEGATIVE


def cmd_generate(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    meta: dict = {"family": args.family, "seed": seed}
    if args.family == "orthogonal":
        if args.d is None:
            raise ValueError("--d is required for the orthogonal family")
        psi1, psi2 = generators.orthogonal_pair(args.d, seed)
    elif args.family == "copyable":
        if args.d is None or args.m is None:
            raise ValueError("--d and --m are required for the copyable family")
        psi1, psi2 = generators.copyable_pair(args.d, args.m, seed)
        meta["m"] = args.m
    else:  # nonprime
        if args.d1 is None or args.d2 is None:
            raise ValueError("--d1 and --d2 are required for the nonprime family")
        d = args.d1 * args.d2
        delta = args.delta
        if delta is None:
            rng = np.random.default_rng((seed, 2))
            delta = float(rng.uniform(0.0, TAU / d)) or TAU / (2 * d)
        psi1, psi2 = generators.nonprime_counterexample(args.d1, args.d2, delta, seed)
        meta.update({"d1": args.d1, "d2": args.d2, "delta": delta})
    _write_json(serialization.pair_to_json(psi1, psi2, **meta), args.out)
    return OK


def _smallest_factor(d: int) -> int | None:
    for k in range(2, int(math.isqrt(d)) + 1):
        if d % k == 0:
            return k
    return None


def cmd_survey(args) -> int:
    cfg = _config_from(args)
    seed = args.seed if args.seed is not None else _default_seed()
    rows = []
    for d in args.d:
        orthogonal_count = 0
        copyable_count = 0
        for k in range(args.samples):
            # flat, well-mixed per-sample seed derived from (seed, d, k)
            sample_seed = int(np.random.SeedSequence((seed, d, k)).generate_state(1)[0])
            if args.family == "orthogonal":
                psi1, psi2 = generators.orthogonal_pair(d, sample_seed)
            else:  # nonprime
                d1 = _smallest_factor(d)
                if d1 is None:
                    raise ValueError(f"nonprime family requires composite d, got {d}")
                d2 = d // d1
                rng = np.random.default_rng(sample_seed)
                delta = 0.0
                while not 0.0 < delta < TAU / d:
                    delta = float(rng.uniform(0.0, TAU / d))
                psi1, psi2 = generators.nonprime_counterexample(d1, d2, delta, sample_seed)
            t = pair_operator(psi1, psi2, cfg)
            if orthogonality(t, cfg) == ORTHOGONAL:
                orthogonal_count += 1
            if spectral_verdict(t, cfg).copyable:
                copyable_count += 1
        rows.append({
            "d": d,
            "samples": args.samples,
            "orthogonal_fraction": orthogonal_count / args.samples,
            "copyable_fraction": copyable_count / args.samples,
        })
    payload = {"family": args.family, "seed": seed, "rows": rows}
    pretty = [f"{'d':>3}  {'samples':>7}  {'orthogonal':>10}  {'copyable':>8}"]
    for row in rows:
        pretty.append(
            f"{row['d']:>3}  {row['samples']:>7}  "
            f"{row['orthogonal_fraction']:>10.3f}  {row['copyable_fraction']:>8.3f}"
        )
    _emit(args, payload, pretty)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="human-readable table instead of JSON")
    for name in _TOLERANCE_FLAGS:
        common.add_argument(f"--{name.replace('_', '-')}", dest=name,
                            type=float, default=None, metavar="X",
                            help=f"override {name} (default {getattr(DEFAULT, name):g})")

    parser = argparse.ArgumentParser(
        prog="loccopy",
        description="LOCC copying of orthogonal maximally entangled states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("majorize", parents=[common],
                       help="does dst majorize src (Nielsen: src -> dst possible)?")
    p.add_argument("src", help="Schmidt JSON file or -")
    p.add_argument("dst", help="Schmidt JSON file or -")
    p.set_defaults(handler=cmd_majorize)

    p = sub.add_parser("catalysis", parents=[common],
                       help="classify copying psi onto blank: direct, catalytic, impossible")
    p.add_argument("psi", help="Schmidt JSON file or -")
    p.add_argument("blank", help="Schmidt JSON file or -")
    p.set_defaults(handler=cmd_catalysis)

    p = sub.add_parser("check-pair", parents=[common],
                       help="orthogonality and spectral copyability of a state pair")
    p.add_argument("states", nargs="+",
                   help="one pair JSON file, or two state JSON files ('-' for stdin)")
    p.set_defaults(handler=cmd_check_pair)

    p = sub.add_parser("synthesize", parents=[common],
                       help="build the copying protocol for an orthogonal pair")
    p.add_argument("states", nargs="+",
                   help="one pair JSON file, or two state JSON files ('-' for stdin)")
    p.add_argument("--blank", default=None,
                   help="blank state JSON (default: the reference maximally entangled state)")
    p.add_argument("--out", default=None, help="write protocol JSON here (default stdout)")
    p.set_defaults(handler=cmd_synthesize)

    p = sub.add_parser("simulate", parents=[common],
                       help="verify a protocol against a state by four-particle simulation")
    p.add_argument("protocol", help="protocol JSON file or -")
    p.add_argument("state", help="state JSON file or -")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("generate", parents=[common], help="generate a test state pair")
    p.add_argument("--family", required=True,
                   choices=["orthogonal", "copyable", "nonprime"])
    p.add_argument("--d", type=int, default=None, help="subsystem dimension")
    p.add_argument("--m", type=int, default=None, help="root count for the copyable family")
    p.add_argument("--d1", type=int, default=None, help="first factor of D (nonprime)")
    p.add_argument("--d2", type=int, default=None, help="second factor of D (nonprime)")
    p.add_argument("--delta", type=float, default=None,
                   help="spectral spacing in (0, 2pi/D) (nonprime; default random)")
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (default $LOCCOPY_SEED or 0)")
    p.add_argument("--out", default=None, help="write pair JSON here (default stdout)")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("survey", parents=[common],
                       help="fraction of random orthogonal pairs that are copyable, per d")
    p.add_argument("--d", type=int, nargs="+", required=True, help="dimensions to survey")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--family", choices=["orthogonal", "nonprime"], default="orthogonal")
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (default $LOCCOPY_SEED or 0)")
    p.set_defaults(handler=cmd_survey)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except AmbiguityError as exc:
        print(str(exc), file=sys.stderr)
        return INPUT_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
