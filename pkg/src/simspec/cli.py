"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import checks, hearing
from .complex import Complex, components_and_cycles, euler_characteristic, random_complex, refine, wu_characteristic
from .errors import SimspecError
from .io import complex_to_json, load_complex, matrix_to_csv, matrix_to_json, parse_complex_json, parse_edges
from .linalg import eig_symmetric
from .operators import dirac_and_hodge, operator

SEED_ENV = "SIMSPEC_SEED"
KINDS_HELP = "L, g, d, D, H, H0..Hr, LmG, M, Y, h, R"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SimspecError(f"{SEED_ENV}={env!r} is not an integer") from None
    return args.seed


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from None


def _add_input(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("input", nargs=None if required else "?", help="complex file (.json or .edges)")
    p.add_argument("--inline", help="complex given inline as JSON generating sets")
    p.add_argument("--input-format", choices=["json", "edges"], help="override extension detection")
    p.add_argument("-k", "--refine", type=int, default=0, metavar="N", help="refine N times first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="f-vector, chi, Wu characteristic, Betti numbers")
    _add_input(p, required=False)

    p = sub.add_parser("refine", help="apply Barycentric refinements and emit the complex")
    _add_input(p, required=False)
    p.set_defaults(refine=1)

    p = sub.add_parser("matrix", help="emit one operator")
    _add_input(p, required=False)
    p.add_argument("--kind", required=True, help=KINDS_HELP)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("spectrum", help="numeric eigenvalues with exact inertia and multiplicities")
    _add_input(p, required=False)
    p.add_argument("--operator", choices=["L", "H", "H0", "H1", "g", "LmG"], default="L")
    p.add_argument("--exact", nargs="*", type=_rational, default=None, metavar="LAMBDA")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("betti", help="Betti numbers by one or all methods")
    _add_input(p, required=False)
    p.add_argument("--method", choices=[*hearing.METHODS, "all"], default="hodge")

    p = sub.add_parser("verify", help="run identity checks (bundled fixtures when no input)")
    _add_input(p, required=False)
    p.add_argument("--check", choices=[*checks.CHECK_NAMES, "all"], default="all")

    p = sub.add_parser("random", help="emit a random complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("experiment", help="exploratory experiments (CSV)")
    p.add_argument("name", choices=["b2"])
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--m", type=int, default=15)
    p.add_argument("--seed", type=int, default=1)
    return parser


def _load(args, required: bool = True) -> Complex | None:
    if args.inline is not None:
        K = parse_complex_json(args.inline)
    elif args.input == "-":
        text = sys.stdin.read()
        K = parse_edges(text) if args.input_format == "edges" else parse_complex_json(text)
    elif args.input is not None:
        K = load_complex(args.input, args.input_format)
    elif required:
        raise SimspecError("no input complex given (path or --inline)")
    else:
        return None
    if args.refine < 0:
        raise SimspecError("--refine must be >= 0")
    return refine(K, args.refine)


def _info(K: Complex) -> dict:
    out = {
        "simplices": len(K),
        "dim": K.dim,
        "fvector": list(K.fvec),
        "chi": euler_characteristic(K),
        "wu": wu_characteristic(K),
        "betti": {"hodge": list(hearing.betti_hodge(K).b)},
        "refined": K.is_refined,
    }
    if K.dim <= 1:
        out["betti"]["combinatorial"] = list(components_and_cycles(K))
    return out


def _spectrum(K: Complex, args):
    if args.operator in ("H0", "H1"):
        _, _, blocks = dirac_and_hodge(K)
        k = int(args.operator[1])
        if k >= len(blocks):
            raise SimspecError(f"complex has no {k}-simplices")
        M = blocks[k]
    else:
        M = operator(K, args.operator)
    probes = args.exact if args.exact is not None else (-1, 0, 1)
    summary = eig_symmetric(M, tol=args.tol, probes=probes)
    if args.format == "csv":
        return "eigenvalue\n" + "".join(f"{v:.6g}\n" for v in summary.to_dict()["eigenvalues"])
    return _dump({"operator": args.operator, **summary.to_dict()})


def _verify(K: Complex | None, name: str):
    names = checks.CHECK_NAMES if name == "all" else [name]
    reports = []
    for n in names:
        if K is None:
            reports.append(checks.run_on_fixtures(n))
        elif name == "all" and n != "isospectral-demo" and not checks.applies(n, K):
            continue
        else:
            reports.append(checks.run_check(n, K))
    return reports


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "random":
            if args.n < 1 or args.m < 1:
                raise SimspecError("--n and --m must be >= 1")
            out.write(complex_to_json(random_complex(args.n, args.m, _seed(args))))
        elif args.verb == "experiment":
            out.write(hearing.b2_experiment(args.trials, args.n, args.m, _seed(args)))
        elif args.verb == "verify":
            K = _load(args, required=False)
            reports = _verify(K, args.check)
            out.write(_dump([r.to_dict() for r in reports]))
            return 0 if all(r.passed for r in reports) else 1
        else:
            K = _load(args)
            if args.verb == "info":
                out.write(_dump(_info(K)))
            elif args.verb == "refine":
                out.write(complex_to_json(K))
            elif args.verb == "matrix":
                M = operator(K, args.kind)
                out.write(matrix_to_csv(M) if args.format == "csv" else matrix_to_json(M))
            elif args.verb == "spectrum":
                out.write(_spectrum(K, args))
            elif args.verb == "betti":
                if args.method == "all":
                    vectors = hearing.all_betti(K)
                else:
                    vectors = [hearing.betti(K, args.method)]
                out.write(_dump([v.to_dict() for v in vectors]))
    except (SimspecError, ValueError) as exc:
        print(f"simspec: error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
