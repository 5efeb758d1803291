"""Command-line surface: enumerate, classify, resolvent, invariants, family,
features, stats, lmfdb, selftest.

Exit codes: 0 success, 1 computation error, 2 usage error. Data goes to
stdout or --out; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    InconsistentClassificationError,
    classify_35,
    classify_foulkes,
    classify_staged,
    modp_census,
)
from .intpoly import DomainError, IntPoly, discriminant7, format_coeffs, parse_coeffs
from .perm import GaloisLabel, catalog, orbit_partition_on_3sets
from .resolvent import ResolventKind, dump_line, resolvent35_symbolic, resolvent_numeric


def _poly_from_args(args):
    f = parse_coeffs(args.coeffs, ascending=args.ascending)
    if f.degree != 7:
        raise DomainError(f"expected 8 coefficients of a septic, got degree {f.degree}")
    return f


def _out_stream(args):
    if getattr(args, "out", None):
        return open(args.out, "w")
    return sys.stdout


def cmd_enumerate(args):
    from .dataset import build_database, enumerate_septics

    if args.height < 1:
        raise DomainError("--height must be >= 1")
    if args.count_only:
        n = sum(
            1
            for _ in enumerate_septics(
                args.height,
                args.exact_height,
                irreducible_only=args.irreducible,
                monic_only=args.monic,
            )
        )
        print(n, file=_out_stream(args))
        return 0
    if args.annotate:
        import os

        jobs = args.jobs or os.cpu_count() or 1
        counts = build_database(
            args.height,
            args.out or "septics.jsonl",
            exact_height=args.exact_height,
            classify=not args.no_classify,
            progress=1000 if args.deep else None,
            checkpoint=args.deep,
            jobs=jobs,
        )
        print(json.dumps(counts, sort_keys=True), file=sys.stderr)
        return 0
    stream = _out_stream(args)
    for tup in enumerate_septics(
        args.height,
        args.exact_height,
        irreducible_only=args.irreducible,
        monic_only=args.monic,
    ):
        print(",".join(str(c) for c in tup), file=stream)
    return 0


def cmd_classify(args):
    f = _poly_from_args(args)
    method = {
        "foulkes": classify_foulkes,
        "resolvent35": classify_35,
        "staged": classify_staged,
    }
    if args.method == "modp":
        result = modp_census(f, args.primes)
    else:
        result = method[args.method](f)
    print(result.to_json(), file=_out_stream(args))
    return 0


def cmd_resolvent(args):
    f = _poly_from_args(args)
    kind = {
        "quadratic": ResolventKind.QUADRATIC,
        "30": ResolventKind.THIRTY,
        "120": ResolventKind.HUNDRED_TWENTY,
        "35": ResolventKind.THREE_SET_35,
    }[args.kind]
    if kind is ResolventKind.THREE_SET_35 and not args.numeric:
        poly = resolvent35_symbolic(f)
    else:
        poly = resolvent_numeric(f, kind, precision=args.precision)
    print(dump_line(kind, poly), file=_out_stream(args))
    return 0


def cmd_invariants(args):
    from .forms import BinaryForm, invariants_xi, signature

    f = _poly_from_args(args)
    vec = invariants_xi(BinaryForm.from_int_poly(f))
    payload = {"xi": list(vec.as_strings())}
    payload["disc"] = str(discriminant7(f))
    if args.signature:
        payload["sig"] = signature(f)
    print(json.dumps(payload, sort_keys=True), file=_out_stream(args))
    return 0


def cmd_family(args):
    from .families import chebyshev_g7, chebyshev_g7_monic, cyclotomic_c7

    if args.family == "c7":
        f = cyclotomic_c7(args.prime, verify=not args.no_verify)
    else:
        f = chebyshev_g7_monic(args.u, args.v) if args.monic else chebyshev_g7(args.u, args.v)
    print(format_coeffs(f, ascending=args.ascending), file=_out_stream(args))
    return 0


def cmd_features(args):
    from .dataset import read_database
    from .features import write_features_csv

    n = write_features_csv(read_database(args.db), args.out)
    print(f"wrote {n} rows to {args.out}", file=sys.stderr)
    return 0


def cmd_stats(args):
    from .dataset import read_database, write_stats

    files = write_stats(read_database(args.db), args.out)
    print(f"wrote {', '.join(files)} to {args.out}", file=sys.stderr)
    return 0


def cmd_lmfdb(args):
    from .lmfdb import LmfdbClient, cross_check

    client = LmfdbClient(offline=args.offline)
    records = client.fetch_page(args.offset, args.limit)
    if args.cross_check:
        n = cross_check(records, args.cross_check)
        print(f"cross-checked {n} records, all labels agree", file=sys.stderr)
    stream = _out_stream(args)
    for rec in records:
        print(
            json.dumps(
                {
                    "coeffs": [str(c) for c in rec.coeffs],
                    "disc": str(rec.discriminant),
                    "galois": rec.galois_label_raw,
                    "label": rec.label.value,
                }
            ),
            file=stream,
        )
    return 0


def cmd_selftest(args):
    from .families import CYCLOTOMIC_C7_TABLE, F21_MIN
    from .resolvent import symbolic_e1_e2

    failures = []

    def check(name, ok):
        print(f"{'ok' if ok else 'FAIL'}  {name}")
        if not ok:
            failures.append(name)

    f = IntPoly.from_descending((3, 1, -4, 2, 0, 5, -1, 2))
    e1, e2 = symbolic_e1_e2(_monic_stub(f))
    check("35-ic e1 identity", e1 == -15 * _monic_stub(f)[6])
    check("35-ic e2 identity", e2 == 105 * _monic_stub(f)[6] ** 2 + 10 * _monic_stub(f)[5])

    row, height, p = CYCLOTOMIC_C7_TABLE[0]
    f29 = IntPoly.from_descending(row)
    check("table row p=29 height", max(abs(c) for c in row) == height == 28)
    check("p=29 classifies C7", classify_35(f29).label is GaloisLabel.C7)
    check("f_min classifies C7:C3", classify_35(F21_MIN).label is GaloisLabel.F21)

    cat = catalog()
    expected_3sets = {
        GaloisLabel.C7: (7, 7, 7, 7, 7),
        GaloisLabel.D7: (7, 7, 7, 14),
        GaloisLabel.F21: (7, 7, 21),
        GaloisLabel.F42: (14, 21),
        GaloisLabel.PSL32: (7, 28),
        GaloisLabel.A7: (35,),
        GaloisLabel.S7: (35,),
    }
    for label, expect in expected_3sets.items():
        check(
            f"3-set orbit partition {label.value}",
            orbit_partition_on_3sets(cat[label]) == expect,
        )
    if failures:
        print(f"{len(failures)} failure(s)", file=sys.stderr)
        return 1
    print("selftest passed")
    return 0


def _monic_stub(f):
    return IntPoly(list(f.coeffs[:-1]) + [1])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="galois7",
        description="Exact Galois-group classification and databases for septics",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized paths")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="height-bounded tuple enumeration")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--exact-height", action="store_true")
    p.add_argument("--monic", action="store_true", help="restrict to a7 = 1")
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--annotate", action="store_true", help="build a JSONL database")
    p.add_argument("--no-classify", action="store_true")
    p.add_argument("--deep", action="store_true", help="checkpointed long run")
    p.add_argument("--jobs", type=int, default=0, help="worker count (annotate mode)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classify one septic")
    p.add_argument("--coeffs", required=True, help="a7,...,a0 (see --ascending)")
    p.add_argument("--ascending", action="store_true")
    p.add_argument(
        "--method", choices=["foulkes", "resolvent35", "modp", "staged"], default="staged"
    )
    p.add_argument("--primes", type=int, default=100)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("resolvent", help="dump a resolvent polynomial")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--ascending", action="store_true")
    p.add_argument("--kind", choices=["quadratic", "30", "120", "35"], required=True)
    p.add_argument("--numeric", action="store_true", help="numeric route for the 35-ic")
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_resolvent)

    p = sub.add_parser("invariants", help="exact invariants of a septic")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--ascending", action="store_true")
    p.add_argument("--signature", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("family", help="generate family members")
    fam = p.add_subparsers(dest="family", required=True)
    c7 = fam.add_parser("c7", help="cyclotomic C7 septic")
    c7.add_argument("--prime", type=int, required=True)
    c7.add_argument("--no-verify", action="store_true")
    c7.add_argument("--ascending", action="store_true")
    c7.add_argument("--out")
    f21 = fam.add_parser("f21", help="Chebyshev C7:C3 septic")
    f21.add_argument("--u", type=int, required=True)
    f21.add_argument("--v", type=int, required=True)
    f21.add_argument("--monic", action="store_true")
    f21.add_argument("--ascending", action="store_true")
    f21.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("features", help="export features.csv from a database")
    p.add_argument("--db", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("stats", help="aggregate statistics CSVs from a database")
    p.add_argument("--db", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("lmfdb", help="fetch remote degree-7 records")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--limit", type=int, default=100)
    p.add_argument("--offline", action="store_true")
    p.add_argument("--cross-check", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lmfdb)

    p = sub.add_parser("selftest", help="golden-vector self test")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, InconsistentClassificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # computation failures keep exit code 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
