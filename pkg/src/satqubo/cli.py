"""Command-line front-end.

Subcommands: gen, translate, solve, verify, scaling, compare.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .experiment import (
    SCALING_METHODS,
    TABLE3_METHODS,
    mean_satisfied_table,
    run_comparison,
    run_scaling,
    write_csv,
)
from .formula import (
    FormulaError,
    critical_clause_count,
    parse_dimacs,
    random_3sat,
    satisfied_count,
    write_dimacs,
)
from .qubo import QuboError
from .solve import EXHAUSTIVE_CAP, SaParams, SolveError, solve_exhaustive, solve_sa
from .translate import (
    METHODS,
    ChancellorParams,
    ChoiParams,
    Translation,
    TranslationError,
    decode,
    translate,
)
from .verify import run_verification


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _parse_range(spec: str) -> list[int]:
    """'a:b' or 'a:b:step' (inclusive bounds), or a single integer."""
    parts = spec.split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {spec!r}") from None
    if len(nums) == 1:
        return nums
    if len(nums) == 2:
        lo, hi = nums
        step = 1
    elif len(nums) == 3:
        lo, hi, step = nums
    else:
        raise argparse.ArgumentTypeError(f"bad range {spec!r}")
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {spec!r}")
    return list(range(lo, hi + 1, step))


def _parse_sizes(spec: str) -> list[tuple[int, int]]:
    """'5x21,10x42,12x50' -> [(5, 21), (10, 42), (12, 50)]."""
    out = []
    for token in spec.split(","):
        try:
            n, m = token.split("x")
            out.append((int(n), int(m)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad sizes {spec!r}") from None
    return out


def _method_list(spec: str) -> list[str]:
    methods = spec.split(",")
    for m in methods:
        if m not in METHODS:
            raise argparse.ArgumentTypeError(f"unknown method {m!r}")
    return methods


def _add_sa_flags(p: argparse.ArgumentParser):
    p.add_argument("--sweeps", type=int, default=SaParams.sweeps)
    p.add_argument("--restarts", type=int, default=SaParams.restarts)
    p.add_argument("--t-initial", type=float, default=SaParams.t_initial)
    p.add_argument("--t-final", type=float, default=SaParams.t_final)


def _method_kwargs(args) -> dict:
    kwargs = {}
    if args.method == "choi":
        kwargs["choi_params"] = ChoiParams(args.choi_x, args.choi_y, args.choi_z)
    elif args.method == "nuessleinnm":
        kwargs["share_aux"] = not args.no_share_aux
    return kwargs


def _add_method_flags(p: argparse.ArgumentParser, required: bool):
    p.add_argument("--method", choices=METHODS, required=required)
    p.add_argument("--choi-x", type=int, default=1)
    p.add_argument("--choi-y", type=int, default=3)
    p.add_argument("--choi-z", type=int, default=3)
    p.add_argument("--no-share-aux", action="store_true")
    p.add_argument("--permissive", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satqubo")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random 3-SAT instance (DIMACS)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int)
    p.add_argument("--ratio", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("translate", help="translate DIMACS CNF to a QUBO")
    p.add_argument("input")
    _add_method_flags(p, required=True)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("solve", help="solve a translation JSON or a CNF file")
    p.add_argument("input")
    _add_method_flags(p, required=False)
    p.add_argument("--solver", choices=("exhaustive", "sa"), default="sa")
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP)
    _add_sa_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="run the oracle-equivalence suite")
    p.add_argument("--n-range", type=_parse_range, default=[3, 4, 5, 6])
    p.add_argument("--m-range", type=_parse_range, default=[1, 2, 3, 4, 5, 6, 7, 8])
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--methods", type=_method_list, default=list(METHODS))
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("scaling", help="coupling-count scaling experiment")
    p.add_argument("--n", type=_parse_range, default=list(range(20, 201, 20)))
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--methods", type=_method_list, default=list(SCALING_METHODS))
    p.add_argument("--ratio", type=float, default=4.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("compare", help="four-way solution-quality comparison")
    p.add_argument("--sizes", type=_parse_sizes, default=[(5, 21), (10, 42), (12, 50)])
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--methods", type=_method_list, default=list(TABLE3_METHODS))
    _add_sa_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--summary", action="store_true")
    p.add_argument("-o", "--output", default="-")

    return parser


def _cmd_gen(parser, args) -> int:
    if args.m is not None and args.ratio is not None:
        parser.error("give either -m or --ratio, not both")
    m = args.m if args.m is not None else critical_clause_count(args.n, args.ratio or 4.2)
    f = random_3sat(args.n, m, args.seed)
    _write(args.output, write_dimacs(f))
    return 0


def _cmd_translate(args) -> int:
    f = parse_dimacs(_read(args.input), strict=not args.permissive)
    t = translate(f, args.method, **_method_kwargs(args))
    info = f"{t.k} logical qubits, {t.qubo.coupling_count()} couplings"
    _write(args.output, t.to_json() + "\n")
    print(info, file=sys.stderr if args.output == "-" else sys.stdout)
    return 0


def _cmd_solve(parser, args) -> int:
    text = _read(args.input)
    f = None
    if text.lstrip().startswith("{"):
        t = Translation.from_json(text)
    else:
        if args.method is None:
            parser.error("solving a CNF input requires --method")
        f = parse_dimacs(text, strict=not args.permissive)
        t = translate(f, args.method, **_method_kwargs(args))
    if args.solver == "exhaustive":
        result = solve_exhaustive(t.qubo, cap=args.cap)
    else:
        result = solve_sa(
            t.qubo,
            SaParams(args.sweeps, args.restarts, args.t_initial, args.t_final, args.seed),
        )
    doc = result.to_dict()
    if f is not None:
        doc["satisfied"] = satisfied_count(f, decode(t, result.best))
    _write(args.output, json.dumps(doc) + "\n")
    return 0


def _cmd_verify(args) -> int:
    if args.count == 0:
        print("warning: --count 0 checks nothing", file=sys.stderr)
        print("verified 0 formulas: trivial pass")
        return 0
    n_range = (min(args.n_range), max(args.n_range))
    m_range = (min(args.m_range), max(args.m_range))
    checked, failures = run_verification(
        count=args.count,
        n_range=n_range,
        m_range=m_range,
        methods=args.methods,
        seed=args.seed,
    )
    if failures:
        for fail in failures:
            print(f"FAIL [{fail.method}] {fail.detail}", file=sys.stderr)
            sys.stderr.write(fail.dimacs)
        print(f"{len(failures)} failure(s) over {checked} formulas", file=sys.stderr)
        return 1
    print(f"verified {checked} formulas x {len(args.methods)} methods: all passed")
    return 0


def _cmd_scaling(args) -> int:
    records = run_scaling(
        args.n, replicates=args.replicates, methods=args.methods,
        seed=args.seed, ratio=args.ratio,
    )
    _write(args.output, write_csv(records, kind="scaling"))
    return 0


def _cmd_compare(args) -> int:
    sa = SaParams(args.sweeps, args.restarts, args.t_initial, args.t_final)
    records = run_comparison(
        args.sizes, replicates=args.replicates, sa=sa,
        seed=args.seed, methods=args.methods,
    )
    _write(args.output, write_csv(records, kind="comparison"))
    if args.summary:
        out = sys.stderr if args.output == "-" else sys.stdout
        out.write(mean_satisfied_table(records, methods=args.methods))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(parser, args)
        if args.command == "translate":
            return _cmd_translate(args)
        if args.command == "solve":
            return _cmd_solve(parser, args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "scaling":
            return _cmd_scaling(args)
        if args.command == "compare":
            return _cmd_compare(args)
        parser.error(f"unknown command {args.command!r}")
    except SolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FormulaError, QuboError, TranslationError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
