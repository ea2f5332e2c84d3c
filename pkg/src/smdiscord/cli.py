"""``smdiscord`` command line: eval, sweep, root, figures, oracle.

Exit codes: 0 success, 2 parse/validation error, 3 numerical-domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .discord import discord_bell
from .entropy import KIND_ALIASES, EntropyParams
from .errors import NumericalDomainError, ValidationError
from .figures import reproduce_figures
from .oracle import discord_oracle
from .states import parse_state_spec
from .sweep import (
    FAMILIES,
    STATE_PARAM,
    RootQuery,
    SweepAxis,
    SweepSpec,
    eval_point,
    find_zero_discord,
    write_compare_csv,
    write_sweep_csv,
)

EXIT_OK, EXIT_VALIDATION, EXIT_DOMAIN = 0, 2, 3


def _add_entropy_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--entropy", required=required, choices=["sm", "renyi", "tsallis", "vn"],
                   help="entropy family")
    p.add_argument("--q", type=float, help="entropy order q")
    p.add_argument("--r", type=float, help="Sharma-Mittal parameter r")


def _entropy_from(args) -> EntropyParams:
    return EntropyParams(KIND_ALIASES[args.entropy], args.q, args.r)


def _bracket(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValidationError(f"bracket {text!r} must look like lo:hi")
    try:
        return float(lo), float(hi)
    except ValueError:
        raise ValidationError(f"bracket {text!r} is not numeric") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smdiscord",
        description="Generalized (Sharma-Mittal, Renyi, Tsallis, von Neumann) quantum "
        "discord and negativity for two-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one state")
    p.add_argument("--state", required=True,
                   help="werner:p=..|isotropic:F=..|pointer:C=..[,axis=..]|bell:c1=..,c2=..,c3=..|file:<json>")
    _add_entropy_args(p)
    p.add_argument("--json", action="store_true", help="print a JSON record")

    p = sub.add_parser("sweep", help="CSV sweep over 1 or 2 parameters")
    p.add_argument("--state-family", required=True, choices=FAMILIES)
    p.add_argument("--sweep", required=True, help="param:lo:hi:steps")
    p.add_argument("--sweep2", help="second param:lo:hi:steps")
    _add_entropy_args(p, required=False)
    for name in ("p", "F", "C", "c1", "c2", "c3"):
        p.add_argument(f"--{name}", type=float, help=f"fixed {name}")
    p.add_argument("--axis", type=int, default=3, choices=[1, 2, 3], help="pointer axis")
    p.add_argument("--compare", action="store_true",
                   help="emit all four discords and negativity along the state parameter")
    p.add_argument("--absolute", action="store_true", help="comparison values as |D|")
    p.add_argument("--out", default="-", help="output CSV path (default stdout)")

    p = sub.add_parser("root", help="bisect for a zero of the signed discord")
    p.add_argument("--state-family", required=True, choices=sorted(STATE_PARAM))
    _add_entropy_args(p)
    p.add_argument("--bracket", required=True, help="lo:hi")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--axis", type=int, default=3, choices=[1, 2, 3])

    p = sub.add_parser("figures", help="write every figure CSV and a manifest")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--absolute", action="store_true", help="comparison CSVs as |D|")

    p = sub.add_parser("oracle", help="closed form vs measurement-scan oracle")
    p.add_argument("--state", required=True)
    _add_entropy_args(p)
    p.add_argument("--grid", type=int, default=2000)
    return parser


def _cmd_eval(args) -> int:
    record = eval_point(args.state, _entropy_from(args))
    if args.json:
        print(json.dumps(record, indent=2))
    else:
        print(f"state            {record['state']}")
        print(f"entropy          {_entropy_from(args).label}")
        for key in ("signed", "absolute", "marginal_entropy", "conditional_term",
                    "joint_entropy", "negativity"):
            print(f"{key:<16} {record[key]:.12g}")
        print("eigenvalues      " + " ".join(f"{x:.12g}" for x in record["eigenvalues"]))
    return EXIT_OK


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _cmd_sweep(args) -> int:
    first = SweepAxis.parse(args.sweep)
    fh, close = _open_out(args.out)
    try:
        if args.compare:
            family = args.state_family
            if family not in STATE_PARAM or first.name != STATE_PARAM[family] or args.sweep2:
                raise ValidationError(
                    "--compare sweeps exactly the state parameter of werner/isotropic/pointer"
                )
            if args.q is None or args.r is None:
                raise ValidationError("--compare needs --q and --r")
            EntropyParams.sharma_mittal(args.q, args.r)
            write_compare_csv(family, np.linspace(first.lo, first.hi, first.steps),
                              args.q, args.r, fh, args.absolute, args.axis)
        else:
            if args.entropy is None:
                raise ValidationError("--entropy is required unless --compare is given")
            axes = (first,) if not args.sweep2 else (first, SweepAxis.parse(args.sweep2))
            fixed = {k: getattr(args, k) for k in ("p", "F", "C", "c1", "c2", "c3", "q", "r")
                     if getattr(args, k) is not None}
            fixed["axis"] = args.axis
            spec = SweepSpec(args.state_family, axes, KIND_ALIASES[args.entropy], fixed)
            write_sweep_csv(spec, fh)
    finally:
        if close:
            fh.close()
    return EXIT_OK


def _cmd_root(args) -> int:
    lo, hi = _bracket(args.bracket)
    res = find_zero_discord(RootQuery(args.state_family, _entropy_from(args), lo, hi,
                                      args.tol, args.axis))
    print(json.dumps(res.to_dict(), indent=2))
    return EXIT_OK


def _cmd_figures(args) -> int:
    for path in reproduce_figures(args.out, args.absolute):
        print(path)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    spec = parse_state_spec(args.state)
    ent = _entropy_from(args)
    closed = discord_bell(spec.bell, ent)
    found = discord_oracle(spec.matrix(), ent, args.grid)
    print(f"closed_form  {closed.signed:.12g}")
    print(f"oracle       {found.result.signed:.12g}")
    print(f"delta        {abs(found.result.signed - closed.signed):.3e}")
    print("direction    " + " ".join(f"{x:.12g}" for x in found.direction.z))
    print(f"theta        {found.theta:.12g}  (c = {spec.bell.c:.12g})")
    print(f"directions   {found.n_directions}")
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "root": _cmd_root,
    "figures": _cmd_figures,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except NumericalDomainError as exc:
        print(f"smdiscord: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValidationError as exc:
        print(f"smdiscord: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
