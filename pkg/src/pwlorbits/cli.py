"""Command-line interface.

Subcommands: interval, generate, locate, scan, verify, dual, regime.
Exit codes: 0 ok, 1 usage error, 2 analytic error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import crosscheck, oracle, renorm
from .errors import OrbitError
from .interval import (
    Params,
    bound_locations,
    is_admissible,
    mu_interval,
    parse_rational,
    rational_str,
)
from .patterngen import euler_phi, generate_period
from .symbolic import Pattern, dual, is_primitive


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise _UsageError(str(e)) from None


def _pattern(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ValueError as e:
        raise _UsageError(str(e)) from None


def _params(args) -> Params:
    a, b = _rational(args.a), _rational(args.b)
    l = _rational(args.l) if getattr(args, "l", None) is not None else Fraction(-1)
    return Params(a, b, l)


def _dec(x: Fraction) -> str:
    return f"{float(x):.10g}"


def _interval_text(iv) -> str:
    if iv.empty:
        return "empty"
    return f"({rational_str(iv.lo)}, {rational_str(iv.hi)}]  ~ ({_dec(iv.lo)}, {_dec(iv.hi)}]"


def _cmd_interval(args) -> int:
    params = _params(args)
    p = _pattern(args.pattern)
    admissible = is_admissible(p, params)
    iv = mu_interval(p, params)
    if args.json:
        doc = {
            "pattern": p.word,
            "period": len(p),
            "primitive": is_primitive(p),
            "admissible": admissible,
            "interval": iv.to_json(),
        }
        if not iv.empty:
            locs = bound_locations(p, params)
            doc["mu1_position"] = locs.idx_mu1
            doc["mu2_position"] = locs.idx_mu2
            doc["bounds"] = [
                {
                    "position": b.position,
                    "kind": b.kind,
                    "value": rational_str(b.value),
                    "decimal": float(b.value),
                }
                for b in locs.bounds
            ]
        print(json.dumps(doc, indent=2))
        return 0
    print(f"pattern     {p.word}  (period {len(p)})")
    print(f"admissible  {'yes' if admissible else 'no'}")
    print(f"P           {_interval_text(iv)}")
    if not iv.empty:
        locs = bound_locations(p, params)
        print(f"mu1         {rational_str(iv.lo)} ~ {_dec(iv.lo)}  from R at position {locs.idx_mu1}")
        print(f"mu2         {rational_str(iv.hi)} ~ {_dec(iv.hi)}  from L at position {locs.idx_mu2}")
        print("bounds (position, symbol, kind, value):")
        for b in locs.bounds:
            sym = p[b.position]
            print(f"  {b.position:>3}  {sym}  {b.kind:<5}  {rational_str(b.value)} ~ {_dec(b.value)}")
    return 0


def _cmd_dual(args) -> int:
    params = _params(args)
    p = _pattern(args.pattern)
    d = dual(p)
    iv = mu_interval(p, params)
    div = mu_interval(d, params.swapped())
    if args.json:
        print(
            json.dumps(
                {
                    "pattern": p.word,
                    "dual": d.word,
                    "interval": iv.to_json(),
                    "dual_interval_swapped_slopes": div.to_json(),
                },
                indent=2,
            )
        )
        return 0
    print(f"pattern            {p.word}")
    print(f"dual               {d.word}")
    print(f"P (a, b)           {_interval_text(iv)}")
    print(f"P_dual (b, a)      {_interval_text(div)}")
    return 0


def _cmd_generate(args) -> int:
    fam = generate_period(args.period)
    if args.json:
        doc = {
            "period": fam.period,
            "phi": euler_phi(fam.period),
            "members": [
                {"k": k, "pattern": fam.members[k].word} for k in sorted(fam.members)
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    for k in sorted(fam.members):
        print(f"{k}\t{fam.members[k].word}")
    return 0


def _cmd_locate(args) -> int:
    params = _params(args)
    mu = _rational(args.mu)
    descent = renorm.descend(params, mu, max_depth=args.max_depth)
    p = descent.pattern
    iv = mu_interval(p, params)
    if args.json:
        doc = {
            "pattern": p.word,
            "period": len(p),
            "interval": iv.to_json(),
            "trace": [
                {
                    "level": i + 1,
                    "a": rational_str(lv.params.a),
                    "b": rational_str(lv.params.b),
                    "mu": rational_str(lv.mu),
                    "region": lv.tag.describe(),
                }
                for i, lv in enumerate(descent.levels)
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    for i, lv in enumerate(descent.levels):
        line = (
            f"level {i + 1}: a={rational_str(lv.params.a)} b={rational_str(lv.params.b)} "
            f"mu={rational_str(lv.mu)} -> {lv.tag.describe()}"
        )
        print(line)
    print(f"pattern  {p.word}")
    print(f"period   {len(p)}")
    print(f"P        {_interval_text(iv)}")
    return 0


def _cmd_scan(args) -> int:
    params = _params(args)
    lo, hi = float(_rational(args.mu_from)), float(_rational(args.mu_to))
    records = oracle.sweep(
        params,
        lo,
        hi,
        args.steps,
        transient=args.transient,
        max_period=args.max_period,
        tol=args.tol,
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            oracle.write_csv(records, fh)
    else:
        oracle.write_csv(records, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    ok = crosscheck.run_verify(n_max=args.n_max, pairs=args.pairs, seed=args.seed)
    return 0 if ok else 3


def _cmd_regime(args) -> int:
    params = _params(args)
    mu = _rational(args.mu)
    reg = oracle.classify_regime(params, mu)
    if args.json:
        doc = {
            "case": reg.case,
            "x_left": rational_str(reg.x_left) if reg.x_left is not None else None,
            "x_right": rational_str(reg.x_right) if reg.x_right is not None else None,
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"case {reg.case}")
    if reg.x_left is not None:
        print(f"x_left   {rational_str(reg.x_left)} ~ {_dec(reg.x_left)}")
    if reg.x_right is not None:
        print(f"x_right  {rational_str(reg.x_right)} ~ {_dec(reg.x_right)}")
    if reg.case == 5:
        print("no fixed point: periodic orbit regime")
    return 0


def _add_slopes(sp) -> None:
    sp.add_argument("--a", required=True, help='left slope, "p/q" or plain decimal')
    sp.add_argument("--b", required=True, help='right slope, "p/q" or plain decimal')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pwlorbits", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("interval", help="existence interval and bound locations of a pattern")
    _add_slopes(sp)
    sp.add_argument("pattern", help="orbit pattern, e.g. LLRLR")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_interval)

    sp = sub.add_parser("dual", help="dual pattern and its interval under swapped slopes")
    _add_slopes(sp)
    sp.add_argument("pattern")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_dual)

    sp = sub.add_parser("generate", help="all phi(n) admissible patterns of period n")
    sp.add_argument("--period", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser("locate", help="resolve mu to its orbit pattern")
    _add_slopes(sp)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--max-depth", type=int, default=32)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_locate)

    sp = sub.add_parser("scan", help="sweep mu and write the detected orbits as CSV")
    _add_slopes(sp)
    sp.add_argument("--from", dest="mu_from", required=True)
    sp.add_argument("--to", dest="mu_to", required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--out", help="CSV path (stdout when omitted)")
    sp.add_argument("--transient", type=int, default=10_000)
    sp.add_argument("--max-period", type=int, default=512)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("verify", help="cross-validate analytics, generation and simulation")
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--pairs", type=int, default=3, help="number of slope pairs to test")
    sp.add_argument("--seed", type=int, default=7)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("regime", help="fixed-point case (1-6) at a given mu")
    _add_slopes(sp)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--l", default=None, help="discontinuity height, default -1")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_regime)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"pwlorbits: error: {e}", file=sys.stderr)
        return 1
    except OrbitError as e:
        print(f"pwlorbits: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"pwlorbits: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
