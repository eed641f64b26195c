"""Command line front end.

Usage::

    qnk series goettsche --euler 24 --order 10
    qnk series theta --rank 2 --d inf --order 8 --format json
    qnk coeff --method sod --rank 2 --d 1 --j 1
    qnk coeff --all --rank 3 --d 4 --j 9
    qnk verify lemma53 --rmax 3 --dmax 5 --jmax 12
    qnk verify dims --surface k3 --w 1,0,-5 --dmax 3
    qnk sod-trace --w0 1 --ch2 -4 --d 1 --jmax 4 --out trace.json

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import partitions as pc
from . import series as sc
from .chern import PRESETS, AssumptionError, BaseClass, surface_preset, validate_assumption
from .sod import DEFAULT_MAX_NODES, ResourceGuardError, run, terminal_multiplicities
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
ORDER_ENV = "QNK_ORDER"
DEFAULT_MAX_ORDER = 2000


class UsageError(Exception):
    pass


class GuardError(Exception):
    pass


def _default_order() -> int:
    raw = os.environ.get(ORDER_ENV, "10")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV}={raw!r} is not an integer") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational 'p/q': {text!r}") from None


def _class_triple(text: str) -> BaseClass:
    """``w0,w1,w2`` for classes with ``w1`` as a multiple of ``H``-degree zero."""
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected w0,w1,w2, got {text!r}")
    try:
        w0, w1 = int(parts[0]), int(parts[1])
        w2 = Fraction(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad class {text!r}") from None
    if w1 != 0:
        raise argparse.ArgumentTypeError(
            "--w only takes w1 = 0; use sod-trace flags for general classes"
        )
    return BaseClass(w0, 0, 0, w2)


def _fmt(x) -> str:
    return str(x)


def emit(rows: list[dict[str, Any]], fmt: str, out, meta: dict[str, Any] | None = None, line=None):
    """Write ``rows`` (dicts with 'quantity', 'params', 'value') in ``fmt``."""
    if fmt == "json":
        doc = dict(meta or {})
        doc["rows"] = [
            {"quantity": r["quantity"], "params": dict(sorted(r["params"].items())), "value": _fmt(r["value"])}
            for r in rows
        ]
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        keys = sorted({k for r in rows for k in r["params"]})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["quantity", *keys, "value"])
        for r in rows:
            writer.writerow([r["quantity"], *(r["params"].get(k, "") for k in keys), _fmt(r["value"])])
        out.write(buf.getvalue())
    else:
        if line is not None:
            out.write(line + "\n")
            return
        for r in rows:
            params = " ".join(f"{k}={v}" for k, v in sorted(r["params"].items()))
            out.write(f"{r['quantity']} {params} = {_fmt(r['value'])}\n")


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, False
    try:
        return open(path, "w", encoding="utf-8"), True
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def cmd_series(args) -> int:
    order = args.order if args.order is not None else _default_order()
    if order < 0:
        raise UsageError("--order must be non-negative")
    if order > args.max_order:
        raise GuardError(f"--order {order} exceeds --max-order {args.max_order}")
    kind = args.kind
    euler = args.euler
    if args.surface is not None:
        if euler is not None:
            raise UsageError("give either --euler or --surface, not both")
        euler = surface_preset(args.surface).euler
    params: dict[str, Any] = {}
    if kind in ("goettsche", "blowup", "nk"):
        if euler is None:
            raise UsageError(f"series {kind} needs --euler (or --surface)")
        params["euler"] = euler
    if kind == "goettsche":
        s = sc.goettsche_series(euler, order)
        quantity = "Z_coeff"
    elif kind == "blowup":
        s = sc.blowup_series(euler, order)
        quantity = "Z_hat_coeff"
    elif kind == "nk":
        if args.k is None or args.k < 0:
            raise UsageError("series nk needs --k >= 0")
        params["k"] = args.k
        s = sc.nk_series(args.k, euler, order)
        quantity = "Mk_coeff"
    else:
        if args.rank is None or args.rank < 1:
            raise UsageError("series theta needs --rank >= 1")
        if args.d is None:
            raise UsageError("series theta needs --d (non-negative integer or 'inf')")
        params["rank"] = args.rank
        if args.d == "inf":
            s = sc.lattice_theta_sum(args.rank, sc.NEG_INFINITY, 0, order)
            params["d"] = "inf"
            quantity = "A_inf"
        else:
            try:
                d = int(args.d)
            except ValueError:
                raise UsageError(f"--d must be an integer or 'inf', got {args.d!r}") from None
            if d < 0:
                raise UsageError("--d must be non-negative")
            params["d"] = d
            s = sc.lattice_theta_sum(args.rank, -d, d, order)
            quantity = "A"
    rows = [{"quantity": quantity, "params": {**params, "n": n}, "value": c} for n, c in enumerate(s)]
    out, close = _open_out(args.out)
    try:
        emit(rows, args.format, out, {"series": kind, "order": order, "params": params},
             line=", ".join(str(c) for c in s))
    finally:
        if close:
            out.close()
    return EXIT_OK


METHODS = {
    "enum": ("A_tilde", pc.a_tilde),
    "young": ("A", pc.a_count),
    "genfun": ("A_genfun", lambda r, d, j: sc.lattice_theta_sum(r, -d, d, j)[j]),
    "sod": ("A_sod", None),
}


def _coeff_by(method: str, r: int, d: int, j: int, max_nodes: int) -> int:
    if method == "sod":
        return terminal_multiplicities(r, d, j, max_nodes=max_nodes)[j]
    return METHODS[method][1](r, d, j)


def cmd_coeff(args) -> int:
    r, d, j = args.rank, args.d, args.j
    if r < 1 or d < 0 or j < 0:
        raise UsageError("need --rank >= 1, --d >= 0, --j >= 0")
    methods = list(METHODS) if args.all else [args.method]
    if not args.all and args.method == "sod" and d < 1:
        raise UsageError("method sod needs --d >= 1 (the level d+1 of M^{d+1})")
    rows, values = [], {}
    for m in methods:
        if m == "sod" and d < 1:
            continue
        values[m] = _coeff_by(m, r, d, j, args.max_nodes)
        rows.append({"quantity": METHODS[m][0], "params": {"r": r, "d": d, "j": j, "method": m}, "value": values[m]})
    agree = len(set(values.values())) == 1
    out, close = _open_out(args.out)
    try:
        meta = {"agree": agree} if args.all else {}
        line = None
        if not args.all:
            line = str(values[args.method])
        emit(rows, args.format, out, meta, line=line)
        if args.all and args.format == "text":
            out.write("agree\n" if agree else "DISAGREE\n")
    finally:
        if close:
            out.close()
    if not agree:
        bundle = {"r": r, "d": d, "j": j, "values": {k: str(v) for k, v in values.items()}}
        if r > 1 or d > 0 or j > 0:
            bundle["theta_vectors"] = [list(v.entries) for v in pc.enumerate_theta(r, d, j)]
        sys.stderr.write("counterexample: " + json.dumps(bundle, sort_keys=True) + "\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.order > args.max_order:
        raise GuardError(f"--order {args.order} exceeds --max-order {args.max_order}")
    if args.surface not in (None, "all") and args.surface.lower() not in PRESETS:
        raise UsageError(f"unknown surface {args.surface!r}; choose from {', '.join(sorted(PRESETS))}")
    if args.w is not None and args.suite in ("dims", "all"):
        surf = PRESETS[(args.surface or "k3").lower()] if args.surface != "all" else PRESETS["k3"]
        v = validate_assumption(args.w, surf)
        if not v:
            raise UsageError(v.reason)
    checks = run_suite(
        args.suite, rmax=args.rmax, dmax=args.dmax, jmax=args.jmax, order=args.order,
        surface=args.surface, w=args.w, samples=args.samples, seed=args.seed,
    )
    failed = [c for c in checks if not c.ok]
    out, close = _open_out(args.out)
    try:
        if args.format == "json":
            doc = {"suite": args.suite, "passed": not failed, "checked": len(checks),
                   "failed": len(failed), "checks": [c.to_dict() for c in checks]}
            out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["suite", "identity", "params", "expected", "actual", "ok"])
            for c in checks:
                d = c.to_dict()
                writer.writerow([d["suite"], d["identity"], json.dumps(d["params"], sort_keys=True),
                                 d["expected"], d["actual"], d["ok"]])
        else:
            if args.suite == "dims":
                dims = {}
                for c in checks:
                    dims[c.params["d"]] = c.params["dim"]
                for dd, dim in sorted(dims.items()):
                    out.write(f"dim d={dd} = {dim}\n")
            for c in failed:
                out.write(f"FAIL {c.suite} {c.identity} {json.dumps(c.params, sort_keys=True)}: "
                          f"expected {c.expected}, got {c.actual}\n")
            out.write(f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} identities hold "
                      f"-> {'pass' if not failed else 'FAIL'}\n")
    finally:
        if close:
            out.close()
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sod_trace(args) -> int:
    w = BaseClass(args.w0, args.h_dot_c1, args.c1_sq, args.ch2)
    surface = surface_preset(args.surface) if args.surface else None
    v = validate_assumption(w, surface)
    if not v:
        raise UsageError(v.reason)
    if args.d < 0 or args.jmax < 0:
        raise UsageError("--d and --jmax must be non-negative")
    result = run(w, args.d, args.jmax, surface=surface, max_nodes=args.max_nodes)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(result.to_json(sort_keys=True) + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    rows = [{"quantity": "sod_multiplicity", "params": {"j": j}, "value": m}
            for j, m in enumerate(result.multiplicities())]
    emit(rows, args.format, sys.stdout, {"seed": result.to_dict()["seed"]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qnk", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="print series coefficients")
    p.add_argument("kind", choices=("goettsche", "blowup", "nk", "theta"))
    p.add_argument("--euler", type=int, help="Euler characteristic e(S)")
    p.add_argument("--surface", help=f"preset surface: {', '.join(sorted(PRESETS))}")
    p.add_argument("--k", type=int, help="stability level k for 'nk'")
    p.add_argument("--rank", type=int)
    p.add_argument("--d", help="non-negative integer or 'inf' for 'theta'")
    p.add_argument("--order", type=int, default=None, help=f"truncation order (default ${ORDER_ENV} or 10)")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("coeff", parents=[common], help="one blow-up multiplicity",
                       description="Multiplicity A_{r,d}(j). For --method sod, d is the "
                       "level of M^d(f^*w), i.e. the engine is seeded with d-1, so d >= 1.")
    p.add_argument("--method", choices=tuple(METHODS), default="enum")
    p.add_argument("--all", action="store_true", help="run all methods and compare")
    p.add_argument("--rank", "-r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--dmax", type=int, default=5)
    p.add_argument("--jmax", type=int, default=10)
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--surface", default=None, help="preset surface or 'all'")
    p.add_argument("--w", type=_class_triple, default=None, help="class w0,w1,w2 for 'dims'")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sod-trace", parents=[common], help="expand M^{d+1}(f^*w) and export the trace")
    p.add_argument("--w0", type=int, required=True)
    p.add_argument("--h-dot-c1", type=int, default=0)
    p.add_argument("--c1-sq", type=int, default=0)
    p.add_argument("--ch2", type=_rational, default=Fraction(0), help="rational 'p/q'")
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--jmax", type=int, default=5)
    p.add_argument("--surface", default=None, help="preset surface for the assumption check")
    p.set_defaults(func=cmd_sod_trace)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, AssumptionError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        sys.stderr.write(f"qnk: error: {msg}\n")
        return EXIT_USAGE
    except (GuardError, ResourceGuardError) as exc:
        sys.stderr.write(f"qnk: resource guard: {exc}\n")
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
