"""Command-line interface.

Subcommands: closure, closure-power, poincare, hilbert, reduction,
check-closed, colon-powers.  Exit codes: 0 success, 1 computation error
(typed message on stderr), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import cache as cache_mod
from . import reports
from .closure import (
    closure,
    closure_power,
    closure_via_colon_powers,
)
from .errors import ParseError, RRClosureError
from .hilbert import hilbert_samuel, poincare_series
from .ideals import Ideal
from .parsing import parse_problem
from .reductions import certify_sequence, find_superficial_sequence


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrclosure",
        description="Exact Ratliff-Rush closures of m-primary ideals, with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, mode=True, seed=True, k=False, n=False, reduction=False):
        sp.add_argument("problem", help="path to a problem file")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--cache", metavar="DIR", default=None,
                        help="result cache directory (or set RRCLOSURE_CACHE_DIR)")
        if mode:
            sp.add_argument("--mode", choices=("heuristic", "certified"), default=None)
        if seed:
            sp.add_argument("--seed", type=int, default=None)
        if k:
            sp.add_argument("--k", type=int, default=None)
        if n:
            sp.add_argument("--n", type=int, required=True)
        if reduction:
            sp.add_argument("--reduction-from-file", action="store_true",
                            help="use the problem file's reduction: entry instead of searching")

    common(sub.add_parser("closure", help="Ratliff-Rush closure with certificates"),
           k=True, reduction=True)
    common(sub.add_parser("closure-power", help="closure of I^n"), k=True, n=True, reduction=True)
    common(sub.add_parser("poincare", help="Poincare series numerator, e0 and pn"), seed=False)
    common(sub.add_parser("hilbert", help="Hilbert-Samuel value at n"),
           mode=False, seed=False, n=True)
    common(sub.add_parser("reduction", help="find or certify a superficial sequence"),
           mode=False, reduction=True)
    common(sub.add_parser("check-closed", help="is the ideal Ratliff-Rush closed?"),
           reduction=True)
    common(sub.add_parser("colon-powers", help="closure via (I^{k+1}:I^k)"),
           mode=False, seed=False, k=True)
    return parser


def _load_problem(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read problem file: {exc}") from None
    return parse_problem(text)


def _effective(args, problem, name, default):
    value = getattr(args, name, None)
    if value is not None:
        return value
    file_value = getattr(problem, name, None)
    if file_value is not None:
        return file_value
    return default


def _run(args) -> dict:
    problem = _load_problem(args.problem)
    ring = problem.ring
    ideal = Ideal(ring, problem.generators)

    mode = _effective(args, problem, "mode", "heuristic")
    seed = _effective(args, problem, "seed", 0)
    k = _effective(args, problem, "k", None)

    reduction = None
    if getattr(args, "reduction_from_file", False):
        if problem.reduction is None:
            raise ParseError("--reduction-from-file given but the file has no 'reduction:' entry")
        reduction = problem.reduction

    options = {"mode": mode, "seed": seed, "format": args.format}
    params = {"mode": mode, "seed": seed}
    if reduction is not None:
        params["reduction"] = [str(x) for x in reduction]
    if k is not None:
        params["k"] = k
        options["k"] = k

    command = args.command
    if command in ("hilbert", "closure-power"):
        params["n"] = args.n
        options["n"] = args.n

    cache_dir = args.cache or cache_mod.default_cache_dir()
    key = None
    if cache_dir is not None:
        basis_strings = [str(p) for p in ideal.reduced_basis().polys]
        key = cache_mod.cache_key(ring.field.name, ring.variables, basis_strings,
                                  command, params)
        hit = cache_mod.lookup(cache_dir, key)
        if hit is not None:
            return hit

    if command == "closure":
        report = closure(ideal, reduction=reduction, mode=mode, seed=seed, k_override=k)
        doc = reports.closure_document(report, options)
    elif command == "closure-power":
        report = closure_power(ideal, args.n, reduction=reduction, mode=mode, seed=seed,
                               k_override=k)
        doc = reports.closure_document(report, options, operation="closure-power")
    elif command == "check-closed":
        report = closure(ideal, reduction=reduction, mode=mode, seed=seed, k_override=k)
        doc = reports.check_closed_document(report, options)
    elif command == "poincare":
        data = poincare_series(ideal, mode=mode)
        doc = reports.series_document(ideal, data, options)
    elif command == "hilbert":
        value = hilbert_samuel(ideal, args.n)
        doc = reports.hilbert_document(ideal, args.n, value, options)
    elif command == "reduction":
        e0 = poincare_series(ideal).multiplicity
        if reduction is not None:
            cert = certify_sequence(ideal, reduction, e0, seed=seed)
        else:
            cert = find_superficial_sequence(ideal, e0, seed=seed)
        doc = reports.reduction_document(ideal, cert, options)
    elif command == "colon-powers":
        result, bounds, certified = closure_via_colon_powers(ideal, k=k)
        used_k = k if k is not None else bounds.colon_powers_k
        doc = reports.colon_powers_document(ideal, result, bounds, used_k, certified, options)
    else:  # pragma: no cover - argparse enforces the choices
        raise RRClosureError(f"unknown command {command!r}")

    if cache_dir is not None and key is not None:
        cache_mod.store(cache_dir, key, doc)
    return doc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _run(args)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except RRClosureError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(reports.dumps(doc))
    else:
        sys.stdout.write(reports.render_text(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
