"""Command-line interface: capacity, measures, verify, sweep, and lemma.

State arguments accept either a JSON file path or the inline form
"family:params", e.g. werner:0.75, lambda_a:0.3, pure_schmidt:0.8,0.6,
bell_diagonal:0.7,0.1,0.1,0.1.  All output is JSON except sweep, which
writes CSV.
"""

import argparse
import json
import math
import sys
from pathlib import Path

from .densecoding import (
    capacity,
    gdc_ensemble,
    optimize_cgdc,
    optimize_gdc_probs,
    sdc_letters,
)
from .entanglement import concurrence, entanglement_of_formation, is_ppt
from .separable import ErConfig, er_numeric
from .states import FAMILIES, build_family_state, state_from_json_dict
from .errors import DensecapError
from .verify import (
    check_bounds,
    er_closed_for_family,
    lemma_campaign,
    run_campaign,
    sweep_family,
    write_sweep_csv,
)


def parse_state_arg(text):
    """Resolve a --state argument to (rho, family, params)."""
    if ":" in text:
        family, _, raw = text.partition(":")
        if family in FAMILIES:
            params = [float(x) for x in raw.split(",") if x != ""]
            return build_family_state(family, params), family, params
    path = Path(text)
    if path.exists():
        with open(path, encoding="utf-8") as handle:
            return state_from_json_dict(json.load(handle))
    raise SystemExit(
        f"cannot interpret state {text!r}: not of the family:params form "
        f"(families: {', '.join(FAMILIES)}) and no such file"
    )


def _clean_floats(obj):
    """Replace inf floats so the emitted JSON stays standard."""
    if isinstance(obj, dict):
        return {k: _clean_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_clean_floats(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    return obj


def _emit(payload):
    print(json.dumps(_clean_floats(payload), indent=2, sort_keys=True))


def cmd_capacity(args):
    rho, _, _ = parse_state_arg(args.state)
    if args.mode == "sdc":
        value = capacity(sdc_letters(rho))
        probs = [0.25, 0.25, 0.25, 0.25]
    elif args.mode == "gdc":
        if args.probs:
            probs = [float(x) for x in args.probs.split(",")]
            value = capacity(gdc_ensemble(rho, probs))
        else:
            result = optimize_gdc_probs(rho, seed=args.seed)
            probs = [float(p) for p in result["probs"]]
            value = result["capacity"]
    else:  # cgdc-opt
        result = optimize_cgdc(rho, seed=args.seed)
        probs = [float(p) for p in result["encoding"].probs]
        value = result["capacity"]
    _emit({"capacity_bits": value, "mode": args.mode, "probs": probs})
    return 0


def cmd_measures(args):
    rho, family, params = parse_state_arg(args.state)
    config = ErConfig(starts=args.er_starts, seed=args.er_seed)
    estimate = er_numeric(rho, config)
    payload = {
        "e_f": entanglement_of_formation(rho),
        "e_r_numeric": estimate.value,
        "e_r_numeric_converged": estimate.converged,
        "concurrence": concurrence(rho),
        "ppt": is_ppt(rho),
    }
    closed = er_closed_for_family(family, params)
    if closed is not None:
        payload["e_r_closed"] = closed
    _emit(payload)
    return 0


def cmd_verify(args):
    er_config = ErConfig(starts=args.er_starts, seed=args.er_seed)
    if args.state:
        rho, family, params = parse_state_arg(args.state)
        report = check_bounds(rho, family=family, params=params, er_config=er_config)
        _emit(report.to_dict())
        return 0 if report.passed else 1
    if args.random is None:
        raise SystemExit("verify needs --state or --random N")
    ranks = (args.rank,) if args.rank else (1, 2, 3, 4)
    summary, reports = run_campaign(
        args.random, seed=args.seed, ranks=ranks, er_config=er_config
    )
    payload = {
        "summary": summary,
        "reports": [r.to_dict() for r in reports],
    }
    _emit(payload)
    return 0 if summary["all_passed"] else 1


def cmd_sweep(args):
    rows = sweep_family(args.family, args.start, args.stop, args.step)
    write_sweep_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_lemma(args):
    result = lemma_campaign(args.random, seed=args.seed)
    _emit(result)
    return 0 if result["all_passed"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="densecap",
        description="dense-coding capacities, entanglement measures, and bound checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", help="capacity of a dense-coding ensemble")
    p.add_argument("--state", required=True)
    p.add_argument("--probs", help="comma-separated priors p0,p1,p2,p3 (gdc mode)")
    p.add_argument("--mode", choices=("sdc", "gdc", "cgdc-opt"), default="sdc")
    p.add_argument("--seed", type=int, default=0, help="optimizer seed")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("measures", help="entanglement measures of a state")
    p.add_argument("--state", required=True)
    p.add_argument("--er-starts", type=int, default=12)
    p.add_argument("--er-seed", type=int, default=0)
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("verify", help="bounds report for a state or a random campaign")
    p.add_argument("--state")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rank", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--er-starts", type=int, default=12)
    p.add_argument("--er-seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="closed-form capacity/E_R sweep to CSV")
    p.add_argument("--family", choices=("lambda_a", "lambda_b", "werner"), required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemma", help="product-form check of the SDC average")
    p.add_argument("--random", type=int, required=True, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemma)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DensecapError as exc:
        raise SystemExit(f"error: {exc}") from exc


if __name__ == "__main__":
    sys.exit(main())
