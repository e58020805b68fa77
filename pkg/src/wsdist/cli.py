"""Command-line front end.

Four subcommands: `density` tabulates the closed-form densities on an
s-grid as CSV, `pair` evaluates one distributional pairing as JSON,
`oracle` runs the epsilon-extrapolated direct-quadrature comparison and
emits an OracleReport as JSON, `selftest` runs the built-in invariant
bundle.  All numeric output carries 17 significant digits so a
round-trip through text is exact in double precision; complex numbers
are {re, im} objects in JSON and paired columns in CSV.

Exit codes: 0 success, 2 order-constraint violation, 3 quadrature
non-convergence, 4 oracle deviation beyond tolerance.  The WS_TOL
environment variable overrides each command's default tolerance; an
explicit --tol beats both.
"""

import argparse
import json
import os
import sys

from .distributions import Measure, TestFunction, pair
from .errors import NonConvergenceError, OrderError, ToleranceError
from .oracle import jj_pairing_oracle, pairing_oracle
from .quadrature import EpsSchedule
from .selftest import run_selftest
from .weber_schafheitlin import OrderPair, prop1_distribution, prop2_distribution

EXIT_OK = 0
EXIT_ORDER = 2
EXIT_NONCONV = 3
EXIT_DEVIATION = 4


def _fmt(x):
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.17g}"


def _default_tol(args, fallback):
    if args.tol is not None:
        return args.tol
    env = os.environ.get("WS_TOL")
    if env:
        return float(env)
    return fallback


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_bump(spec):
    parts = [float(p) for p in spec.split(",")]
    if len(parts) == 2:
        parts.append(1.0)
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            "bump must be 'center,halfwidth[,amplitude]'"
        )
    return TestFunction(*parts)


def _parse_schedule(spec):
    return EpsSchedule(tuple(float(p) for p in spec.split(",")))


def _distribution(args):
    orders = OrderPair(args.mu, args.nu)
    if args.prop == 1:
        return prop1_distribution(orders, alpha=args.alpha)
    return prop2_distribution(orders)


def cmd_density(args):
    dist = _distribution(args)
    lines = []
    if args.prop == 1:
        header = "s,F_re,F_im,h_re,h_im"
    else:
        header = "s,m0,h"
    n = args.s_steps
    if n < 1:
        raise ValueError("--s-steps must be at least 1")
    if n == 1:
        grid = [args.s_min]
    else:
        grid = [args.s_min + (args.s_max - args.s_min) * i / (n - 1) for i in range(n)]
    for s in grid:
        if args.prop == 1:
            F = complex(dist.F(s))
            h = complex(dist.h(s))
            lines.append(
                ",".join(map(_fmt, (s, F.real, F.imag, h.real, h.imag)))
            )
        else:
            lines.append(",".join(map(_fmt, (s, dist.F(s), dist.h(s)))))
    if args.format == "json":
        rows = [[float(v) for v in ln.split(",")] for ln in lines]
        text = json.dumps({"columns": header.split(","), "rows": rows}, indent=1)
        text += "\n"
    else:
        text = header + "\n" + "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_pair(args):
    dist = _distribution(args)
    measure = Measure.LEBESGUE if args.measure == "lebesgue" else Measure.HAAR
    tol = _default_tol(args, 1e-9)
    value = pair(dist, args.bump, measure=measure, tol=tol)
    doc = {
        "command": "pair",
        "proposition": args.prop,
        "mu": args.mu,
        "nu": args.nu,
        "alpha": args.alpha,
        "measure": args.measure,
        "bump": {
            "center": args.bump.center,
            "halfwidth": args.bump.halfwidth,
            "amplitude": args.bump.amplitude,
        },
        "tol": tol,
        "value": {"re": value.real, "im": value.imag},
    }
    _emit(json.dumps(doc, indent=1) + "\n", args.output)
    return EXIT_OK


def cmd_oracle(args):
    orders = OrderPair(args.mu, args.nu)
    tol = _default_tol(args, 1e-4)
    if args.prop == 1:
        report = pairing_oracle(orders, args.bump, args.eps_schedule, tol)
    else:
        report = jj_pairing_oracle(orders, args.bump, args.eps_schedule, tol)
    doc = {
        "command": "oracle",
        "proposition": args.prop,
        "mu": args.mu,
        "nu": args.nu,
        "tol": tol,
        "eps_schedule": list(args.eps_schedule.values),
        "report": report.to_json_dict(),
    }
    _emit(json.dumps(doc, indent=1) + "\n", args.output)
    return EXIT_OK if report.rel_deviation <= tol else EXIT_DEVIATION


def cmd_selftest(args):
    ok = run_selftest(only=args.only, tol_override=args.tol)
    return EXIT_OK if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wsdist",
        description=(
            "Critical-exponent Weber-Schafheitlin integrals as distributions: "
            "densities, pairings, and direct-quadrature validation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bump_default=None):
        p.add_argument("--mu", type=float, required=True, help="order of the s-scaled kernel")
        p.add_argument("--nu", type=float, required=True, help="order of the unit-argument Bessel factor")
        p.add_argument("--prop", type=int, choices=(1, 2), default=1,
                       help="1: Hankel-Bessel result, 2: Bessel-Bessel result")
        p.add_argument("--alpha", type=float, default=0.0,
                       help="decomposition parameter of the PV split (prop 1)")
        p.add_argument("--tol", type=float, default=None,
                       help="tolerance (default per command; WS_TOL env overrides)")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")
        if bump_default is not None:
            p.add_argument("--bump", type=_parse_bump, default=_parse_bump(bump_default),
                           help="test function 'center,halfwidth[,amplitude]'")

    p = sub.add_parser("density", help="tabulate the closed-form density on an s-grid (CSV)")
    common(p)
    p.add_argument("--s-min", type=float, default=0.25)
    p.add_argument("--s-max", type=float, default=3.0)
    p.add_argument("--s-steps", type=int, default=56)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("pair", help="pair the distribution with a bump test function (JSON)")
    common(p, bump_default="1.0,0.5,1.0")
    p.add_argument("--measure", choices=("lebesgue", "haar"), default="lebesgue")
    p.set_defaults(fn=cmd_pair)

    p = sub.add_parser("oracle", help="epsilon-extrapolated direct quadrature vs closed form (JSON)")
    common(p, bump_default="1.0,0.5,1.0")
    p.add_argument("--eps-schedule", type=_parse_schedule,
                   default=_parse_schedule("0.2,0.1,0.05,0.025"),
                   help="comma-separated decreasing regularization parameters")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("selftest", help="run the built-in invariant checks")
    p.add_argument("--only", default=None,
                   help="restrict to one module (specfun, quadrature, ...)")
    p.add_argument("--tol", type=float, default=None,
                   help="override every check tolerance (1e-30 forces failure)")
    p.set_defaults(fn=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except OrderError as exc:
        print(f"order constraint violated: {exc}", file=sys.stderr)
        return EXIT_ORDER
    except (ToleranceError, NonConvergenceError) as exc:
        print(f"quadrature did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONV


if __name__ == "__main__":
    sys.exit(main())
