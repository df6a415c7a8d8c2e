"""Command-line interface.

Subcommands: eval, verify, identities, bench.  Exit codes: 0 pass, 1
verification mismatch, 2 usage error, 3 internal integrity error.  Big
integers cross this boundary as decimal strings in JSON and CSV.
"""

import argparse
import csv
import io
import json
import sys

from . import bench as bench_mod
from . import identities, verify
from .arith import decimal_str
from .closed_forms import SumFamily, SumSpec, evaluate
from .errors import IndexCapError, IntegrityError

FAMILIES = [f.value for f in SumFamily]
METHODS = [m.value for m in bench_mod.BenchMethod]

# Default sweep grids; chosen to match the documented verification envelope.
FAMILY_R_RANGE = (-6, 6)
FAMILY_N_RANGE = (0, 120)
RATIO_R_RANGE = (-5, 5)
RATIO_N_RANGE = (1, 50)
AUX_RANGE = (-30, 30)


def _parse_range(text, allow_negative=True):
    """Inclusive 'a:b' range."""
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an inclusive range 'a:b', got {text!r}"
        ) from None
    if not allow_negative and lo < 0:
        raise argparse.ArgumentTypeError(f"range {text!r} must be nonnegative")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r} (a > b)")
    return lo, hi


def _parse_signed_range(text):
    return _parse_range(text, allow_negative=True)


def _parse_nonneg_range(text):
    return _parse_range(text, allow_negative=False)


def _parse_int_list(text):
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fibcubes",
        description=(
            "Evaluate, verify and benchmark factored closed forms for cube "
            "and first-power sums of even-indexed Fibonacci and Lucas numbers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one sum via its closed form")
    p_eval.add_argument("--family", required=True, choices=FAMILIES)
    p_eval.add_argument("--r", required=True, type=int)
    p_eval.add_argument("--n", required=True, type=int)
    p_eval.add_argument("--plain", action="store_true",
                        help="print only the decimal value")
    p_eval.add_argument("--json", action="store_true",
                        help="JSON output (the default)")
    p_eval.add_argument("--out", metavar="FILE")

    p_verify = sub.add_parser(
        "verify", help="sweep closed forms against the oracle, or identities"
    )
    p_verify.add_argument("--families", metavar="LIST",
                          help="'all' or comma-separated family names")
    p_verify.add_argument("--identities", metavar="LIST",
                          help="'all' or comma-separated identity keys")
    p_verify.add_argument("--r", type=_parse_signed_range, metavar="A:B")
    p_verify.add_argument("--n", type=_parse_nonneg_range, metavar="A:B")
    p_verify.add_argument("--u", type=_parse_signed_range, metavar="A:B")
    p_verify.add_argument("--v", type=_parse_signed_range, metavar="A:B")
    p_verify.add_argument("--fail-fast", action="store_true")
    p_verify.add_argument("--json", action="store_true",
                          help="JSON output (the default)")
    p_verify.add_argument("--out", metavar="FILE")

    p_ident = sub.add_parser("identities", help="export the identity catalog")
    p_ident.add_argument("--list", action="store_true",
                         help="list the catalog as JSON (the default action)")
    p_ident.add_argument("--out", metavar="FILE")

    p_bench = sub.add_parser(
        "bench", help="time closed form vs oracle routes, CSV output"
    )
    p_bench.add_argument("--family", required=True, choices=FAMILIES)
    p_bench.add_argument("--r", required=True, type=int)
    p_bench.add_argument("--n", required=True, type=_parse_int_list,
                         metavar="N1,N2,...")
    p_bench.add_argument("--methods", default="all", metavar="LIST",
                         help=f"'all' or comma-separated from {METHODS}")
    p_bench.add_argument("--repeat", type=int, default=1, metavar="N",
                         help="timed passes per point, median reported")
    p_bench.add_argument("--no-warmup", action="store_true",
                         help="skip the warm-up pass (cross-check still runs)")
    p_bench.add_argument("--out", metavar="FILE")

    return parser


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_eval(args):
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    form = evaluate(SumSpec(SumFamily(args.family), args.r, args.n))
    if args.plain:
        _emit(decimal_str(form.value) + "\n", args.out)
    else:
        _emit(json.dumps(form.to_json_dict(), indent=2) + "\n", args.out)
    return 0


def _selected_families(spec_text):
    if spec_text == "all":
        return [SumFamily(name) for name in FAMILIES]
    chosen = []
    for name in spec_text.split(","):
        name = name.strip()
        if name not in FAMILIES:
            raise UsageError(f"unknown family {name!r}")
        chosen.append(SumFamily(name))
    return chosen


def _selected_identities(spec_text):
    catalog = identities.list_identities()
    if spec_text == "all":
        return [entry.key for entry in catalog]
    known = {entry.key for entry in catalog}
    chosen = []
    for key in spec_text.split(","):
        key = key.strip()
        if key not in known:
            raise UsageError(f"unknown identity key {key!r}")
        chosen.append(key)
    return chosen


def _cmd_verify(args):
    if args.families is None and args.identities is None:
        args.families = "all"
    reports = []
    if args.families:
        r_range = args.r or FAMILY_R_RANGE
        n_range = args.n or FAMILY_N_RANGE
        for family in _selected_families(args.families):
            reports.append(
                verify.sweep_family(family, r_range, n_range, args.fail_fast)
            )
            if args.fail_fast and reports[-1].mismatches:
                break
    if args.identities and not (args.fail_fast and any(r.mismatches for r in reports)):
        u_range = args.u or AUX_RANGE
        v_range = args.v or AUX_RANGE
        for key in _selected_identities(args.identities):
            identity = identities.get_identity(key)
            if identity.is_ratio:
                ranges = [args.r or RATIO_R_RANGE, args.n or RATIO_N_RANGE]
            elif identity.arity == 1:
                ranges = [u_range]
            else:
                ranges = [u_range, v_range]
            reports.append(identities.sweep_identity(key, ranges, args.fail_fast))
            if args.fail_fast and reports[-1].mismatches:
                break
    payload = [report.to_json_dict() for report in reports]
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    mismatch_total = sum(len(report.mismatches) for report in reports)
    return 0 if mismatch_total == 0 else 1


def _cmd_identities(args):
    _emit(json.dumps(identities.catalog_json(), indent=2) + "\n", args.out)
    return 0


def _cmd_bench(args):
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    for n in args.n:
        if n < 1:
            raise UsageError("bench --n values must be >= 1")
    if args.methods == "all":
        methods = list(bench_mod.BenchMethod)
    else:
        methods = []
        for name in args.methods.split(","):
            name = name.strip()
            if name not in METHODS:
                raise UsageError(f"unknown method {name!r}")
            methods.append(bench_mod.BenchMethod(name))
    records = bench_mod.run_bench(
        SumFamily(args.family), args.r, args.n,
        methods=methods, repeat=args.repeat, warmup=not args.no_warmup,
    )
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(bench_mod.CSV_HEADER)
    for record in records:
        writer.writerow(record.csv_row())
    _emit(buffer.getvalue(), args.out)
    return 0


class UsageError(Exception):
    pass


_COMMANDS = {
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "identities": _cmd_identities,
    "bench": _cmd_bench,
}


_VALUE_FLAGS = {"--r", "--n", "--u", "--v"}


def _merge_negative_values(argv):
    """Join flags with values that start with a minus ('--r -6:6' style).

    argparse would otherwise read '-6:6' as an option string; the inclusive
    range syntax allows negative bounds, so merge them into '--r=-6:6'.
    """
    merged = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            token in _VALUE_FLAGS
            and nxt is not None
            and len(nxt) > 1
            and nxt[0] == "-"
            and nxt[1].isdigit()
        ):
            merged.append(f"{token}={nxt}")
            skip = True
        else:
            merged.append(token)
    return merged


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_negative_values(list(argv)))
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IndexCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
