"""Batch front end: evaluate duality maps, run witness scenarios, run suites.

Three subcommands, JSON in and JSON out everywhere:

* ``eval``  -- print J(element) for one element of one space (for the
  set-valued backends: the classification plus a canonical selection);
* ``run``   -- execute a scenario file of witness requests, write one
  non-membership certificate per scenario, print a summary table;
* ``suite`` -- run the appendix property battery plus backend invariants
  and write the report.

Exit codes: 0 on full success, 1 when a verdict or property fails, 2 on
malformed input, unknown theorem ids, or violated hypotheses.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import c01, l1, serialize
from .coderivative import Schedule, certify_nonmembership
from .lp import LpSpace, duality_map
from .oracles import SuiteReport, run_appendix_battery, run_backend_invariants
from .witnesses import HypothesisViolation, build_witness


def _space_from_args(args):
    if args.space == "lp":
        if args.p is None:
            raise ValueError("--space lp requires --p")
        return LpSpace(float(args.p))
    if args.space == "l1":
        if args.weights is None:
            raise ValueError("--space l1 requires --weights")
        return l1.FiniteMeasureSpace(np.asarray(json.loads(args.weights), dtype=float))
    if args.space == "c01":
        return c01.C01Space()
    raise ValueError(f"unknown space: {args.space}")


def cmd_eval(args) -> int:
    space = _space_from_args(args)
    if args.space == "lp":
        if args.vector is None:
            raise ValueError("--space lp requires --vector")
        x = np.asarray(json.loads(args.vector), dtype=float)
        out = serialize.encode_dual(space, duality_map(x, space.p))
    elif args.space == "l1":
        if args.values is None:
            raise ValueError("--space l1 requires --values")
        f = space.check(json.loads(args.values))
        info = l1.duality_set_classify(f, space)
        out = {
            "singleton": info.singleton,
            "free_points": [int(i) for i in np.flatnonzero(info.free_points)],
            "selection": [float(v) for v in info.selection],
        }
    else:
        if args.f is None:
            raise ValueError("--space c01 requires --f")
        raw = args.f
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError:
            pass  # named shorthand such as "tent"
        f = serialize.pwl_from_json(raw)
        if c01.sup_norm(f) == 0.0:
            out = {"maximizing_set": None, "selection": serialize.measure_to_json(c01.zero_measure())}
        else:
            mset = c01.maximizing_set(f)
            out = {
                "maximizing_set": {
                    "atoms": list(mset.atoms),
                    "intervals": [list(iv) for iv in mset.intervals],
                },
                "selection": serialize.measure_to_json(c01.canonical_duality_measure(f)),
            }
    print(json.dumps(out))
    return 0


def _load_scenarios(path: Path):
    data = json.loads(path.read_text())
    if isinstance(data, list):
        return data, {}, None
    return data.get("scenarios", []), data.get("tolerances", {}), data.get("out")


def cmd_run(args) -> int:
    path = Path(args.scenario_file)
    scenarios, tolerances, file_out = _load_scenarios(path)
    cert_tol = float(tolerances.get("cert_tol", 1e-6))
    settle_tol = float(tolerances.get("settle_tol", 1e-6))
    membership_tol = float(tolerances.get("membership_tol", 1e-9))

    records = []
    rows = []
    for scenario in scenarios:
        space = serialize.space_from_descriptor(scenario["space"])
        theorem = scenario["theorem"]
        witness = build_witness(space, theorem, scenario.get("params", {}))
        schedule = None
        if scenario.get("schedule"):
            schedule = Schedule(**scenario["schedule"])
        cert = certify_nonmembership(
            witness.query,
            witness.curve,
            witness.claimed_bound,
            schedule,
            cert_tol=cert_tol,
            settle_tol=settle_tol,
            membership_tol=membership_tol,
        )
        echo = {
            "theorem": theorem,
            "space": scenario["space"],
            "params": scenario.get("params", {}),
        }
        records.append(serialize.certificate_to_json(cert, echo))
        rows.append((theorem, cert.claimed_bound, cert.estimate.limit, cert.verdict))

    out_path = Path(args.out or file_out or path.with_suffix(".certificates.json"))
    out_path.write_text(json.dumps(records, indent=2))

    print(f"{'theorem':<14}{'bound':>14}{'limit':>18}  verdict")
    for theorem, bound, limit, verdict in rows:
        bound_txt = "positive" if bound is None else f"{bound:.8f}"
        print(f"{theorem:<14}{bound_txt:>14}{limit:>18.10f}  {verdict}")
    print(f"certificates: {out_path}")
    return 0 if all(r[3] == "certified" for r in rows) else 1


def cmd_suite(args) -> int:
    space = _space_from_args(args)
    battery = run_appendix_battery(space, args.samples, args.seed)
    extra = run_backend_invariants(space, args.samples, args.seed)
    report = SuiteReport(
        battery.space, battery.seed, battery.sample_count, battery.records + extra
    )
    out_path = Path(args.out or "suite_report.json")
    out_path.write_text(json.dumps(report.to_json(), indent=2))
    for rec in report.records:
        status = "pass" if rec.passed else "FAIL"
        extra = "" if rec.applicable else " (not applicable)"
        print(f"{rec.property_id}: {status}  max_violation={rec.max_violation:.3e}{extra}")
    print(f"report: {out_path}")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualitymap",
        description="duality maps and coderivative non-membership certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the duality map at one element")
    p_eval.add_argument("--space", required=True, choices=["lp", "l1", "c01"])
    p_eval.add_argument("--p", type=float, help="exponent for the lp space")
    p_eval.add_argument("--weights", help="JSON array of atom weights (l1)")
    p_eval.add_argument("--vector", help="JSON array (lp element)")
    p_eval.add_argument("--values", help="JSON array (l1 element)")
    p_eval.add_argument("--f", help='piecewise-linear function JSON, or "tent"')
    p_eval.set_defaults(func=cmd_eval)

    p_run = sub.add_parser("run", help="run a scenario file and emit certificates")
    p_run.add_argument("scenario_file")
    p_run.add_argument("--out", help="certificate output path")
    p_run.set_defaults(func=cmd_run)

    p_suite = sub.add_parser("suite", help="run the appendix property battery")
    p_suite.add_argument("--space", required=True, choices=["lp", "l1", "c01"])
    p_suite.add_argument("--p", type=float)
    p_suite.add_argument("--weights")
    p_suite.add_argument("--samples", type=int, default=100)
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.add_argument("--out", help="report output path")
    p_suite.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, OSError, json.JSONDecodeError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
