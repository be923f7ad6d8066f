"""Command-line front end: ``oscq table1 | convergence | compare-om | transform``.

CSV files use 17 significant digits in scientific notation; lines starting
with ``#`` are comments. Exit codes: 0 success, 2 usage error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys

from . import __version__
from .error_analysis import decompose_error
from .exceptions import DomainError
from .integrands import IntegrandSpec, parse_integrand
from .maps import OouraMoriMap1, SingleExponentialMap, make_map
from .quadrature import QuadratureParams, choose_m, cosine_transform, default_n, sine_transform
from .special import LorentzianParams

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

TABLE1_A = (-1.0, 0.0, 1.0)
TABLE1_M = tuple(range(1, 11))
DEFAULT_N_LIST = tuple(k * k for k in range(4, 21))
COMPARE_N_LIST = (8, 16, 32, 64, 128, 256, 512)
#: OM1 is run with m = OM1_MATCH * n / log(n)
OM1_MATCH = 2.5


class UsageError(Exception):
    pass


class NumericalFailure(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.16e}"


def _finite(*values):
    for v in values:
        if v is not None and not math.isfinite(v):
            raise NumericalFailure(f"non-finite result {v!r}")


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None
    with fh:
        yield fh


def _write_csv(path: str, comments, header, rows):
    with _open_out(path) as fh:
        for line in comments:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# ---------------------------------------------------------------------------
# commands


def table1_rows():
    """Decompositions on the grid ``m = 1..10``, ``a = -1, 0, 1`` (``b = t = 1``)."""
    return [decompose_error(LorentzianParams(a, 1.0, 1.0), m) for m in TABLE1_M for a in TABLE1_A]


def cmd_table1(args) -> int:
    rows = []
    for d, a in zip(table1_rows(), TABLE1_A * len(TABLE1_M)):
        _finite(d.total, d.pole_term, d.saddle_term)
        s = fmt(d.saddle_term) if d.saddle_converged else ""
        rows.append([fmt(d.m), fmt(a), fmt(d.total), fmt(d.pole_term), s,
                     "true" if d.saddle_converged else "false"])
    comments = [
        "I - T_m, pole term R_m and saddle term S_m; b = 1, t = 1, n = ceil(4 m^2)",
        "R_m evaluated at the asymptotic pole log z + z/2, z = (a + ib) t / m",
    ]
    _write_csv(args.out, comments, ["m", "a", "total", "R_m", "S_m", "saddle_converged"], rows)
    return EXIT_OK


def convergence_errors(spec: IntegrandSpec, t: float, alpha: float, n_list):
    """``(n, m, |I - T_{n,m}|)`` with ``m = choose_m(n, alpha)`` and the SE map."""
    ref = spec.sine_reference(t)
    if ref is None:
        raise UsageError(f"no closed-form sine transform for {spec.label()}")
    out = []
    for n in n_list:
        m = choose_m(n, alpha)
        value = sine_transform(spec, SingleExponentialMap(), QuadratureParams(m, n, t))
        out.append((n, m, abs(ref - value)))
    return out


def cmd_convergence(args) -> int:
    spec = _parse_integrand(args.integrand)
    rows = []
    for n, m, err in convergence_errors(spec, args.t, args.alpha, args.n_list):
        _finite(err)
        rows.append([n, fmt(m), fmt(err)])
    comments = [f"integrand {spec.label()}, t = {args.t!r}, alpha = {args.alpha!r}, m = sqrt(n pi / alpha)"]
    _write_csv(args.out, comments, ["n", "m", "abs_error"], rows)
    return EXIT_OK


def om1_m(n: int) -> float:
    """Rule parameter for the OM1 map at truncation ``n``."""
    return OM1_MATCH * n / math.log(n)


def compare_om_errors(n_list=COMPARE_N_LIST):
    """``(n, err_se, err_om1)`` for ``int_0^inf sin(x)/x dx = pi/2``."""
    spec = IntegrandSpec.sinc()
    ref = math.pi / 2
    se, om1 = SingleExponentialMap(), OouraMoriMap1()
    out = []
    for n in n_list:
        e_se = abs(sine_transform(spec, se, QuadratureParams(choose_m(n, math.pi), n)) - ref)
        e_om = abs(sine_transform(spec, om1, QuadratureParams(om1_m(n), n)) - ref)
        out.append((n, e_se, e_om))
    return out


def cmd_compare_om(args) -> int:
    rows = []
    for n, e_se, e_om in compare_om_errors():
        _finite(e_se, e_om)
        rows.append([n, fmt(e_se), fmt(e_om)])
    comments = [
        "sin(x)/x on (0, inf), t = 1, nodes k pi/m for |k| <= n",
        "se: m = sqrt(n)",
        f"om1: K = 2 pi, m = {OM1_MATCH} n / log(n)",
    ]
    _write_csv(args.out, comments, ["n", "err_se", "err_om1"], rows)
    return EXIT_OK


def resolve_params(m, n, alpha, t) -> QuadratureParams:
    """Fill in ``m`` or ``n`` from the other one."""
    if m is not None:
        return QuadratureParams(m, n if n is not None else default_n(m), t)
    if n is None:
        raise UsageError("give --m, or --n together with --alpha")
    if alpha is None:
        raise UsageError("--n needs --alpha to choose m")
    return QuadratureParams(choose_m(n, alpha), n, t)


def cmd_transform(args) -> int:
    spec = _parse_integrand(args.integrand)
    params = resolve_params(args.m, args.n, args.alpha, args.t)
    tmap = make_map(args.map, m=params.m)
    if args.cosine:
        value = cosine_transform(spec, tmap, params)
        ref = spec.cosine_reference(args.t)
    else:
        value = sine_transform(spec, tmap, params)
        ref = spec.sine_reference(args.t)
    _finite(value)
    print(f"value {fmt(value)}")
    print(f"m {fmt(params.m)}")
    print(f"n {params.n}")
    if ref is not None:
        print(f"reference {fmt(ref)}")
        print(f"abs_error {fmt(abs(value - ref))}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parsing


def _parse_integrand(text: str) -> IntegrandSpec:
    try:
        return parse_integrand(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _n_list(text: str):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("n values must be positive integers")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oscq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="error decomposition on the m = 1..10, a = -1, 0, 1 grid")
    p.add_argument("--out", required=True, help="output CSV path, '-' for stdout")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("convergence", help="error against n with m = sqrt(n pi / alpha)")
    p.add_argument("--integrand", required=True, help="NAME[:key=value,...]")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n-list", type=_n_list, default=list(DEFAULT_N_LIST))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("compare-om", help="single exponential map against Ooura-Mori for sin(x)/x")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compare_om)

    p = sub.add_parser("transform", help="evaluate one sine or cosine transform")
    p.add_argument("--integrand", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--m", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--cosine", action="store_true", help="cosine transform by the midpoint rule")
    p.add_argument("--map", choices=("se", "om1", "om2"), default="se")
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"oscq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, ArithmeticError) as exc:
        print(f"oscq: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
