"""Command-line front end.

Subcommands: gen-bd, eig, svd, inv, solve, table, figure.
Exit codes: 0 success, 2 validation error, 3 convergence failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bessel import BASIS_NAMES, CollocationSpec, collocation_bd
from .bidiagonal import from_bdf, to_bdf, validate
from .errors import (
    DimensionMismatch,
    InvalidNodes,
    NoConvergence,
    NonRealSpectrum,
    NotTotallyPositive,
    ParseError,
    RangeError,
    SingularMatrix,
    TooLarge,
)
from .experiments import (
    DEFAULT_SEED,
    FIGURE_IDS,
    figure,
    figure_svg,
    rows_to_csv,
    table,
)
from .matrices import NodeSequence
from .scalars import DEFAULT_POLICY, PrecisionPolicy, format_rational, parse_rational
from .solvers import eigenvalues, inverse, singular_values, solve

_VALIDATION_ERRORS = (
    InvalidNodes, ParseError, NotTotallyPositive, DimensionMismatch,
    TooLarge, SingularMatrix, RangeError, ValueError,
)
_CONVERGENCE_ERRORS = (NoConvergence, NonRealSpectrum)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _nodes_from_args(args) -> NodeSequence:
    if args.nodes is not None:
        return NodeSequence.from_string(args.nodes)
    if args.n is not None:
        return NodeSequence.integers(args.n)
    raise InvalidNodes("provide --nodes or --n")


def _policy_from_args(args) -> PrecisionPolicy:
    tol = getattr(args, "tol", None)
    if tol is None:
        return DEFAULT_POLICY
    return PrecisionPolicy(agreement_rtol=tol)


def _load_bd(path: str):
    bd = from_bdf(Path(path).read_text())
    bad = validate(bd)
    if bad:
        raise ParseError(f"invalid BD in {path}: " + "; ".join(bad))
    return bd


def _spectrum_csv(result) -> str:
    lines = ["index,value,achieved_bits"]
    for i, v in enumerate(result.values, start=1):
        lines.append(f"{i},{format(v, '.16e')},{result.achieved_precision_bits}")
    return "\n".join(lines) + "\n"


def cmd_gen_bd(args) -> None:
    nodes = _nodes_from_args(args)
    bd = collocation_bd(CollocationSpec(args.basis, nodes))
    _emit(to_bdf(bd), args.out)


def cmd_eig(args) -> None:
    bd = _load_bd(args.bdf)
    _emit(_spectrum_csv(eigenvalues(bd, _policy_from_args(args))), args.out)


def cmd_svd(args) -> None:
    bd = _load_bd(args.bdf)
    _emit(_spectrum_csv(singular_values(bd, _policy_from_args(args))), args.out)


def cmd_inv(args) -> None:
    bd = _load_bd(args.bdf)
    inv = inverse(bd)
    lines = [",".join(format_rational(x) for x in row) for row in inv.rows]
    _emit("\n".join(lines) + "\n", args.out)


def cmd_solve(args) -> None:
    bd = _load_bd(args.bdf)
    tokens = Path(args.rhs).read_text().replace(",", " ").split()
    b = [parse_rational(t) for t in tokens]
    x = solve(bd, b)
    lines = ["index,value"]
    lines.extend(f"{i},{format_rational(v)}" for i, v in enumerate(x, start=1))
    _emit("\n".join(lines) + "\n", args.out)


def cmd_table(args) -> None:
    header, rows = table(args.id, seed=args.seed, policy=_policy_from_args(args))
    _emit(rows_to_csv(header, rows), args.out)


def cmd_figure(args) -> None:
    header, rows = figure(args.id, args.n_max, policy=_policy_from_args(args))
    csv_text = rows_to_csv(header, rows)
    if args.out:
        csv_path = Path(args.out)
        csv_path.write_text(csv_text)
        svg_path = csv_path.with_suffix(".svg")
        svg_path.write_text(figure_svg(header, rows, f"sweep {args.id}"))
    else:
        sys.stdout.write(csv_text)


def _add_node_args(p):
    p.add_argument("--nodes", help="comma-separated rational nodes, e.g. 1,3/2,2")
    p.add_argument("--n", type=int, help="use integer nodes 1..n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpbessel",
        description="High-relative-accuracy computations with Bessel "
                    "collocation matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-bd", help="write the BD of a collocation matrix")
    p.add_argument("--basis", choices=BASIS_NAMES, default="bessel")
    _add_node_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_bd)

    for name, fn, hlp in (("eig", cmd_eig, "eigenvalues from a BDF file"),
                          ("svd", cmd_svd, "singular values from a BDF file")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("bdf")
        p.add_argument("--tol", type=float)
        p.add_argument("--out")
        p.set_defaults(func=fn)

    p = sub.add_parser("inv", help="exact inverse from a BDF file")
    p.add_argument("bdf")
    p.add_argument("--out")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("solve", help="exact linear solve from a BDF file")
    p.add_argument("bdf")
    p.add_argument("--rhs", required=True,
                   help="file of rational right-hand-side tokens")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="reproduce a comparison table as CSV")
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3, 4, 5))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--tol", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", help="error sweep as CSV (+ SVG with --out)")
    p.add_argument("--id", required=True, choices=FIGURE_IDS)
    p.add_argument("--n-max", type=int, default=15)
    p.add_argument("--tol", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except _CONVERGENCE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
