"""Command-line surface: parameter exploration, single-shot decoding,
and experiment runs.

Exit status: 0 on success (decode: non-empty candidate list), 1 on
usage or validation errors, 2 when a decode finds no codeword within
the target radius.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decoder import (
    GRSCode,
    RootPolicy,
    build_schedule,
    decoding_radius,
    minimal_parameters,
    multi_trial_decode,
    permissibility_margin,
    within_johnson_bound,
)
from .simulator import ExperimentConfig, format_summary, run_experiment, write_csv


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        raise _UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise _UsageError(f"malformed integer list: {text!r}")


def _build_code(args) -> GRSCode:
    alphas = _int_list(args.alphas) if args.alphas else list(range(1, args.n + 1))
    ws = _int_list(args.ws) if args.ws else [1] * args.n
    return GRSCode(args.q, args.n, args.k, tuple(alphas), tuple(ws))


def _max_radius(code: GRSCode) -> int:
    tau = 0
    while within_johnson_bound(code, tau + 1):
        tau += 1
    return tau


def _cmd_params(args) -> int:
    code = _build_code(args)
    johnson = _max_radius(code)
    if args.tau is not None:
        params = minimal_parameters(code, args.tau)
        if params is None:
            print(
                f"error: target radius {args.tau} exceeds Johnson bound "
                f"(max achievable tau = {johnson})",
                file=sys.stderr,
            )
            return 1
        s, l = params
        print(f"(s,l)=({s},{l}), E={permissibility_margin(code, s, l, args.tau)}")
        print(f"Johnson bound: max achievable tau = {johnson}")
        return 0
    if args.s is not None or args.l is not None:
        if args.s is None or args.l is None:
            raise _UsageError("--s and --l must be given together")
        tau = decoding_radius(code, args.s, args.l)
        print(f"tau({args.s},{args.l}) = {tau}")
        if tau >= 0:
            print(f"E({args.s},{args.l},{tau}) = {permissibility_margin(code, args.s, args.l, tau)}")
        return 0
    print(f"GRS({code.n},{code.k}) over F_{code.q}: radius table up to the Johnson bound")
    print(f"Johnson bound: max achievable tau = {johnson}")
    print("tau   s   l   E")
    start = decoding_radius(code, 1, 1)
    for tau in range(start, johnson + 1):
        params = minimal_parameters(code, tau)
        if params is None:
            continue
        s, l = params
        print(f"{tau:3d} {s:3d} {l:3d} {permissibility_margin(code, s, l, tau):3d}")
    return 0


def _cmd_decode(args) -> int:
    code = _build_code(args)
    received = _int_list(args.received)
    if len(received) != code.n:
        raise _UsageError(f"received word needs {code.n} entries, got {len(received)}")
    if any(not 0 <= x < code.q for x in received):
        raise _UsageError(f"received entries must lie in [0, {code.q})")
    policy = (
        RootPolicy.FINAL_ONLY if args.root_policy == "final-only" else RootPolicy.EVERY_INCREASE
    )
    schedule = build_schedule(code, args.tau, policy)
    result = multi_trial_decode(
        code,
        tuple(received),
        schedule,
        use_reencoding=args.reencode,
        collect_profiles=args.verbose,
    )
    s, l, tau = result.stopped_at
    print(f"decoding GRS({code.n},{code.k}) over F_{code.q}, target radius {args.tau}")
    print(f"schedule: {' '.join(step.value for step in schedule.steps)}")
    if args.verbose:
        for rep in result.trial_reports:
            print(rep.to_json())
            if rep.profile:
                print(rep.profile)
    print(f"stopped at (s,l,tau)=({s},{l},{tau})")
    print(
        f"ops: mul={result.ops.mul_count} add={result.ops.add_count} "
        f"inv={result.ops.inv_count}"
    )
    if not result.candidates:
        print("no codeword within the target radius")
        return 2
    print(f"candidates: {len(result.candidates)}")
    for cand in result.candidates:
        coeffs = ",".join(str(cand.f.coefficient(i)) for i in range(code.k))
        cw = ",".join(str(x) for x in cand.codeword)
        print(f"  f = {coeffs}  distance = {cand.distance}  codeword = {cw}")
    return 0


def _cmd_simulate(args) -> int:
    with open(args.config) as fh:
        config = ExperimentConfig.from_json(json.load(fh))
    records = run_experiment(config, threads=args.threads)
    try:
        write_csv(records, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"{len(records)} trial records written to {args.out}")
    print(format_summary(records))
    return 0


def _make_parser() -> _Parser:
    parser = _Parser(prog="mtgs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_code_args(p):
        p.add_argument("--q", type=int, required=True, help="field size (prime)")
        p.add_argument("--n", type=int, required=True, help="code length")
        p.add_argument("--k", type=int, required=True, help="code dimension")
        p.add_argument("--alphas", help="evaluation points, comma-separated (default 1..n)")
        p.add_argument("--ws", help="column multipliers, comma-separated (default all 1)")

    p = sub.add_parser("params", help="decoding-radius and parameter exploration")
    add_code_args(p)
    p.add_argument("--tau", type=int, help="target radius: print minimal (s,l)")
    p.add_argument("--s", type=int, help="multiplicity (with --l: print tau(s,l))")
    p.add_argument("--l", type=int, help="list size (with --s: print tau(s,l))")
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("decode", help="multi-trial decode one received word")
    add_code_args(p)
    p.add_argument("--received", required=True, help="received word, comma-separated")
    p.add_argument("--tau", type=int, required=True, help="target decoding radius")
    p.add_argument("--reencode", action="store_true", help="apply the re-encoding transform")
    p.add_argument(
        "--root-policy",
        choices=["every-increase", "final-only"],
        default="every-increase",
    )
    p.add_argument("--verbose", action="store_true", help="per-step reports and degree profiles")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="run a Monte-Carlo comparison from a JSON config")
    p.add_argument("--config", required=True, help="experiment config (JSON)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--threads", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=_cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
