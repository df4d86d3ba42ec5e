"""Command-line front end.

Subcommands: chars, qexp, kernel, matrix, bounds, verify, scan, maeda.
Each invocation writes exactly one JSON document (or CSV table) to stdout.
Exit codes: 0 = success/verified, 1 = counterexample found, 2 = usage error.
"""

import argparse
import csv
import io
import json
import sys

from . import bounds as bounds_mod
from . import verify as verify_mod
from .cache import CoefficientCache, default_cache_path
from .chars import (
    DirichletCharacter,
    all_characters,
    primitive_characters,
    trivial_character,
)
from .cycmat import build_conjecture_matrix, build_matrix, determinant
from .exact import Cyclotomic
from .kernels import coeff_table, normalize, raw_coeff
from .qforms import eisenstein_double, eisenstein_level1, eisenstein_twisted


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            out.update(_flatten(v, f"{prefix}{k}." if prefix else f"{k}."))
        return {(k[:-1] if k.endswith(".") else k): v for k, v in out.items()} \
            if not value else out
    if isinstance(value, list):
        out = {}
        for i, v in enumerate(value):
            out.update(_flatten(v, f"{prefix}{i}."))
        return out
    return {prefix[:-1] if prefix.endswith(".") else prefix: value}


def emit(doc, fmt):
    if fmt == "json":
        print(json.dumps(doc, indent=2))
        return
    # CSV: one row per record for lists of records, else key/value pairs
    buf = io.StringIO()
    if isinstance(doc, list) and doc and all(isinstance(r, dict) for r in doc):
        rows = [_flatten(r) for r in doc]
        headers = []
        for r in rows:
            for k in r:
                if k not in headers:
                    headers.append(k)
        w = csv.DictWriter(buf, fieldnames=headers)
        w.writeheader()
        for r in rows:
            w.writerow(r)
    else:
        flat = _flatten(doc)
        w = csv.writer(buf)
        w.writerow(["key", "value"])
        for k, v in flat.items():
            w.writerow([k, v])
    sys.stdout.write(buf.getvalue())


def _char_from_args(modulus, label):
    if modulus == 1:
        return trivial_character()
    return DirichletCharacter.from_label(modulus, label)


def cmd_chars(args):
    chis = (primitive_characters(args.modulus) if args.primitive
            else all_characters(args.modulus))
    doc = [{
        "label": c.label(),
        "order": c.order,
        "parity": c.parity(),
        "conductor": c.conductor(),
    } for c in chis]
    emit(doc, args.format)
    return 0


def cmd_qexp(args):
    if args.kind == "level1":
        series = eisenstein_level1(args.weight, args.terms)
    elif args.kind == "twisted":
        chi = _char_from_args(args.modulus, args.char)
        series = eisenstein_twisted(args.weight, chi, args.terms)
    else:
        chi1 = _char_from_args(args.modulus, args.char)
        chi2 = _char_from_args(args.modulus2, args.char2)
        series = eisenstein_double(args.weight, chi1, chi2, args.terms)
    emit({"kind": args.kind, "weight": args.weight,
          "coeffs": [c.to_json() for c in series.coeffs]}, args.format)
    return 0


def cmd_kernel(args):
    chi = _char_from_args(args.modulus, args.char)
    if args.cache:
        cache = CoefficientCache(args.cache)
        values = [
            cache.get_or_compute(
                (args.kind, args.weight, args.ell, args.modulus, args.char, n),
                lambda n=n: raw_coeff(args.weight, args.ell, chi, n, args.kind),
            )
            for n in range(1, args.terms + 1)
        ]
        table = {"kind": args.kind, "weight": args.weight, "ell": args.ell,
                 "modulus": args.modulus, "char": args.char, "values": values}
    else:
        table = coeff_table(args.weight, args.ell, chi, args.kind, args.terms)
    table = normalize(table)
    doc = {k: table[k] for k in
           ("kind", "weight", "ell", "modulus", "char", "degenerate")}
    doc["values"] = [v.to_json() for v in table["values"]]
    if args.normalized:
        if table["degenerate"]:
            print("error: first coefficient is 0, cannot normalize",
                  file=sys.stderr)
            return 1
        doc["values"] = [v.to_json() for v in table["normalized"]]
    emit(doc, args.format)
    return 0


def cmd_matrix(args):
    if args.which in ("M", "N", "C1", "C2"):
        chi = _char_from_args(args.modulus, args.char)
        ells = [int(x) for x in args.ells.split(",")]
        if args.which in ("M", "N"):
            m = build_matrix(args.which, args.weight, chi, ells)
        else:
            m = build_conjecture_matrix(args.which, args.weight, chi, ells)
    else:
        labels = [int(x) for x in args.chars.split(",")]
        chis = [_char_from_args(args.modulus, lab) for lab in labels]
        if args.which in ("P", "Q"):
            m = build_matrix(args.which, args.weight, chis, args.ell)
        else:
            m = build_conjecture_matrix(args.which, args.weight, chis, args.ell)
    det = determinant(m)
    emit({
        "which": args.which,
        "weight": args.weight,
        "modulus": args.modulus,
        "entries": [[e.to_json() for e in row] for row in m],
        "det": det.to_json(),
        "nonsingular": not det.is_zero(),
    }, args.format)
    return 0


def cmd_bounds(args):
    params = {}
    if args.weight is not None:
        params["K"] = args.weight
    if args.ell is not None:
        params["l"] = args.ell
    if args.k is not None:
        params["k"] = args.k
    if args.n is not None:
        params["n"] = args.n
    if args.modulus is not None:
        params["D"] = args.modulus
    if args.ells:
        params["ells"] = [int(x) for x in args.ells.split(",")]
    if args.M is not None:
        params["M"] = args.M
    if args.name == "epsilon_maeda":
        value = bounds_mod.epsilon_maeda(args.weight, args.modulus)
    else:
        value = bounds_mod.bound_eval(args.name, **params)
    emit({"name": args.name, "params": {k: v for k, v in params.items()},
          "value": value, "certified": value < 1}, args.format)
    return 0


def _report_exit(report, fmt):
    emit(report, fmt)
    if report["status"] == "verified":
        return 0
    if report["status"] == "counterexample":
        return 1
    return 2


def cmd_verify(args):
    if args.task == "identities":
        fn = (verify_mod.verify_identities_product if args.set == "product"
              else verify_mod.verify_identities_bracket)
        return _report_exit(fn(args.modulus), args.format)
    if args.task == "zero":
        return _report_exit(
            verify_mod.verify_zero_space(args.weight, args.modulus, args.n_max),
            args.format)
    print("error: unknown verify task", file=sys.stderr)
    return 2


def cmd_scan(args):
    K_max = 40 if args.full else args.max_weight
    D_max = 40 if args.full else args.max_modulus
    report = verify_mod.scan_conjectures(args.matrix, K_max, D_max,
                                         jobs=args.jobs)
    return _report_exit(report, args.format)


def cmd_maeda(args):
    report = verify_mod.maeda_scan(args.max_modulus, args.max_weight)
    return _report_exit(report, args.format)


def build_parser():
    p = argparse.ArgumentParser(
        prog="eistrace",
        description="Exact kernel coefficients, convolution identities and "
                    "linear-independence certificates for twisted Eisenstein "
                    "trace forms",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cache", default=default_cache_path(),
                        help="JSON-lines coefficient cache path")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add_parser("chars", help="enumerate Dirichlet characters")
    sp.add_argument("--modulus", type=int, required=True)
    sp.add_argument("--primitive", action="store_true")
    sp.set_defaults(fn=cmd_chars)

    sp = add_parser("qexp", help="Eisenstein series q-expansions")
    sp.add_argument("--kind", choices=("level1", "twisted", "double"),
                    required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--modulus", type=int, default=1)
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--modulus2", type=int, default=1)
    sp.add_argument("--char2", type=int, default=0)
    sp.add_argument("--terms", type=int, default=10)
    sp.set_defaults(fn=cmd_qexp)

    sp = add_parser("kernel", help="kernel Fourier coefficients")
    sp.add_argument("--kind", choices=("product", "bracket"), required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--modulus", type=int, default=1)
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--terms", type=int, default=10)
    sp.add_argument("--normalized", action="store_true")
    sp.set_defaults(fn=cmd_kernel)

    sp = add_parser("matrix", help="coefficient matrices and determinants")
    sp.add_argument("--which", choices=("M", "N", "P", "Q",
                                        "C1", "C2", "C3", "C4"),
                    required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--modulus", type=int, default=1)
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--ells")
    sp.add_argument("--chars")
    sp.set_defaults(fn=cmd_matrix)

    sp = add_parser("bounds", help="evaluate explicit bounds")
    sp.add_argument("--name", required=True)
    sp.add_argument("--weight", type=int)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--modulus", type=int)
    sp.add_argument("--ells")
    sp.add_argument("--M", type=float)
    sp.set_defaults(fn=cmd_bounds)

    sp = add_parser("verify", help="identity and zero-space verification")
    sp.add_argument("task", choices=("identities", "zero"))
    sp.add_argument("--modulus", type=int, required=True)
    sp.add_argument("--set", choices=("product", "bracket"), default="product")
    sp.add_argument("--weight", type=int)
    sp.add_argument("--n-max", type=int, default=20)
    sp.set_defaults(fn=cmd_verify)

    sp = add_parser("scan", help="conjecture matrix scans")
    sp.add_argument("--matrix", choices=("C1", "C2", "C3", "C4"),
                    required=True)
    sp.add_argument("--max-weight", type=int, default=24)
    sp.add_argument("--max-modulus", type=int, default=15)
    sp.add_argument("--full", action="store_true",
                    help="extend the scan to weight and modulus 40")
    sp.set_defaults(fn=cmd_scan)

    sp = add_parser("maeda", help="central-coefficient non-vanishing scan")
    sp.add_argument("--max-modulus", type=int, default=7)
    sp.add_argument("--max-weight", type=int, default=40)
    sp.set_defaults(fn=cmd_maeda)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
