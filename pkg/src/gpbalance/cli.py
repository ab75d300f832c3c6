"""Command-line front end.

    gpbalance table   --n 50 --k 9 --from 20 --to 25 --format csv
    gpbalance diam    --n 50 --k 9 --strategy theorem-only
    gpbalance balance --n 7 --k 3 --all
    gpbalance scan    --k 2..7 --n-max 40 --workers 4

Exit codes: 0 ok, 2 invalid input, 3 strategy not applicable,
4 ell out of range.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .balance import (
    conjecture_scan,
    is_diam_distance_balanced,
    is_highly_distance_balanced,
    is_l_distance_balanced,
)
from .core import GPParams
from .diameter import Strategy, diameter
from .errors import EllOutOfRange, GPError, InvalidParams, NotGuaranteed, OutOfRange
from .pathform import distance_table, j_one

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_APPLICABLE = 3
EXIT_ELL = 4

TABLE_HALF_WIDTH = 3


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _records_csv(records: list[dict]) -> str:
    if not records:
        return ""
    header = list(records[0])
    rows = [header] + [["" if r[h] is None else r[h] for h in header] for r in records]
    return _csv(rows)


def render_table(profiles, fmt: str) -> str:
    if fmt == "json":
        return _json([pr.as_dict() for pr in profiles])
    js = [pr.j for pr in profiles]
    d12 = [pr.d12 for pr in profiles]
    d34 = [pr.d34 for pr in profiles]
    if fmt == "csv":
        return _csv([["j", *js], ["d12", *d12], ["d34", *d34]])
    cells = [["v_j", *(f"v_{j}" for j in js)], ["d12", *d12], ["d34", *d34]]
    width = max(len(str(c)) for row in cells for c in row)
    return "".join(" ".join(str(c).rjust(width) for c in row) + "\n" for row in cells)


def _cmd_table(args) -> str:
    p = GPParams(args.n, args.k)
    lo, hi = args.lo, args.hi
    if lo is None or hi is None:
        centre = j_one(p)
        if lo is None:
            lo = max(0, centre - TABLE_HALF_WIDTH)
        if hi is None:
            hi = min(p.n, centre + TABLE_HALF_WIDTH)
    return render_table(distance_table(p, lo, hi), args.format)


def _cmd_diam(args) -> str:
    p = GPParams(args.n, args.k)
    res = diameter(p, Strategy(args.strategy))
    if args.format == "json":
        return _json(res.as_dict())
    if args.format == "csv":
        return _records_csv([res.as_dict()])
    return f"diam({p}) = {res.value}  [{res.method.value}: {res.case_detail}]\n"


def _cmd_balance(args) -> str:
    p = GPParams(args.n, args.k)
    reduce = not args.full
    if args.all:
        verdicts = is_highly_distance_balanced(p, reduce)
    elif args.ell is not None:
        verdicts = [is_l_distance_balanced(p, args.ell, reduce)]
    else:
        verdicts = [is_diam_distance_balanced(p, reduce)]
    records = [v.as_dict() for v in verdicts]
    if args.format == "json":
        return _json(records)
    if args.format == "csv":
        return _records_csv(records)
    lines = []
    for v in verdicts:
        status = "holds" if v.holds else "FAILS"
        line = f"{p} ell={v.ell}: {status} ({v.pairs_checked} pairs checked)"
        if v.witness:
            w = v.witness
            line += f"; witness {w.x},{w.y} with |W_xy|={w.w_xy_size}, |W_yx|={w.w_yx_size}"
        lines.append(line + "\n")
    return "".join(lines)


def parse_k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InvalidParams(f"bad k range {text!r}; expected a..b") from None
    return a, b


def _cmd_scan(args) -> str:
    k_lo, k_hi = parse_k_range(args.k)
    if k_lo < 2 or k_lo > k_hi:
        raise InvalidParams(f"k range {args.k!r} must satisfy 2 <= a <= b")
    if args.n_max < 3:
        raise InvalidParams("--n-max must be at least 3")
    workers = args.workers if args.workers else None
    records = [r.as_dict() for r in conjecture_scan(range(k_lo, k_hi + 1), args.n_max, workers)]
    if args.format == "json":
        return _json(records)
    if args.format == "csv":
        header = ["n", "k", "diameter", "attaining_j", "predicate"]
        return _csv([header] + [[r[h] for h in header] for r in records])
    if not records:
        return "no (n,k) in range has d(u_0,v_j) = diam\n"
    return "".join(
        f"GP({r['n']},{r['k']}): diam={r['diameter']} attained at v_{r['attaining_j']}\n"
        for r in records
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpbalance",
        description="Distances, diameters and distance-balancedness of generalized Petersen graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_nk=True):
        if with_nk:
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
        sp.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    sp = sub.add_parser("table", help="d12/d34 rows for a window of j")
    common(sp)
    sp.add_argument("--from", dest="lo", type=int)
    sp.add_argument("--to", dest="hi", type=int)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("diam", help="diameter of GP(n,k)")
    common(sp)
    sp.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
    sp.set_defaults(func=_cmd_diam)

    sp = sub.add_parser("balance", help="l-distance-balance verdicts")
    common(sp)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--ell", type=int)
    group.add_argument("--all", action="store_true", help="every ell from 1 to the diameter")
    sp.add_argument("--full", action="store_true", help="check all pairs, no rotation reduction")
    sp.set_defaults(func=_cmd_balance)

    sp = sub.add_parser("scan", help="find (n,k) where some v_j realises the diameter")
    common(sp, with_nk=False)
    sp.add_argument("--k", required=True, metavar="A..B")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--workers", type=int, default=0, help="0 = all CPUs; 1 = serial")
    sp.set_defaults(func=_cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except EllOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ELL
    except NotGuaranteed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (InvalidParams, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GPError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
