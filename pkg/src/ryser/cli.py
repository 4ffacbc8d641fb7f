"""Command-line front end.

Exit codes: 0 success (``verify``: row is Hadamard), 1 ``verify`` on a valid
non-Hadamard row or a failing ``lemmas`` suite, 2 bad input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import coding, decomposition as dec, f2, lemmas, search
from .circulant import SignRow, eigen_report, is_circulant_hadamard, paf
from .errors import InvalidArgument, PreconditionViolation, ResourceLimit

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def read_row(source: str) -> SignRow:
    """``-`` reads stdin, an existing file path is read, anything else is the row itself."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        text = Path(source).read_text()
    else:
        text = source
    return SignRow.parse(text)


def cmd_verify(args) -> int:
    row = read_row(args.row)
    ok = is_circulant_hadamard(row)
    report = {
        "schema_version": SCHEMA_VERSION,
        "row": list(row.entries),
        "order": row.length,
        "is_circulant_hadamard": ok,
        "paf": list(paf(row).values),
        "row_sum": row.row_sum,
        "eigen": eigen_report(row).to_dict(),
    }
    if args.format == "json":
        print(dumps(report))
    else:
        print(f"row        {row.to_text()}")
        print(f"order      {row.length}")
        print(f"hadamard   {'yes' if ok else 'no'}")
        print(f"paf        {' '.join(str(v) for v in report['paf'])}")
        print(f"row sum    {row.row_sum}")
        print(f"|R(w^t)|   {' '.join(f'{m:.6f}' for m in report['eigen']['magnitudes'])}")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_decompose(args) -> int:
    row = read_row(args.row)
    out = {"schema_version": SCHEMA_VERSION, "row": list(row.entries)}
    out.update(dec.decompose(row).to_dict())
    print(dumps(out))
    return EXIT_OK


def cmd_conditions(args) -> int:
    row = read_row(args.row)
    d = dec.decompose(row)
    out = {
        "schema_version": SCHEMA_VERSION,
        "row": list(row.entries),
        "profile": dec.classify_conditions(row).to_dict(),
        "decomposition": {
            "e1": list(d.e1.first_row),
            "e2": list(d.e2.first_row),
            "lambda1": d.lambda1,
            "lambda2": d.lambda2,
        },
    }
    print(dumps(out))
    return EXIT_OK


def _parse_orders(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            step = 2 if int(lo) % 2 == 0 and int(hi) % 2 == 0 else 1
            out.extend(range(int(lo), int(hi) + 1, step))
        else:
            out.append(int(part))
    if not out:
        raise InvalidArgument(f"no orders in {text!r}")
    return out


def write_reports(reports, out_dir: Path, mode: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for rep in reports:
        (out_dir / f"{mode}_{rep.order}.json").write_text(dumps(rep.to_dict()) + "\n")
    with open(out_dir / f"{mode}_summary.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["order", "mode", "examined", "hits", "elapsed_ms"])
        for rep in reports:
            w.writerow(rep.csv_row())


def cmd_search(args) -> int:
    try:
        orders = _parse_orders(args.orders)
    except ValueError as exc:
        raise InvalidArgument(f"bad --orders value {args.orders!r}: {exc}") from None
    cfg = search.SearchConfig(
        orders=tuple(orders),
        mode=args.mode,
        symmetry_reduction=not args.no_symmetry,
        prune_rowsum=not args.no_prune_rowsum,
        prune_paf_prefix=not args.no_prune_paf,
        worker_count=args.workers,
        fixed_block=args.fixed_block,
    )
    # limits are checked before any work so no partial output is ever written
    cfg.validate_limits()
    reports = search.run(cfg)
    if args.out:
        write_reports(reports, Path(args.out), args.mode)
    for rep in reports:
        print(f"order {rep.order:>3}  mode {rep.mode}  examined {rep.candidates_examined}  "
              f"hits {len(rep.hits)}  canonical {len(rep.canonical_hits)}  {rep.elapsed_ms} ms")
        for h in rep.canonical_hits:
            print(f"    {h.to_text()}")
    return EXIT_OK


def cmd_lemmas(args) -> int:
    if args.suite != "all" and args.suite not in lemmas.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; available: all, " + ", ".join(lemmas.SUITES))
    results = lemmas.run_suites(args.suite, seed=args.seed)
    if args.format == "json":
        print(dumps({"schema_version": SCHEMA_VERSION, "seed": args.seed,
                     "suites": [r.to_dict() for r in results]}))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{r.name:<{width}}  {status}  {r.instances:>7}  {r.anchor}"
            if r.detail:
                line += f"  [{r.detail}]"
            print(line)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


def cmd_plotkin(args) -> int:
    if args.sweep:
        pairs = lemmas.plotkin_pairs(args.m)
    else:
        if args.d is None:
            raise UsageError("plotkin needs --d unless --sweep is given")
        pairs = [(args.m, args.d)]
    records = []
    for m, d in pairs:
        q = coding.max_code_bruteforce(m, d) if args.oracle or args.sweep else \
            coding.PlotkinQuery(m, d, coding.plotkin_bound(m, d))
        records.append(q.to_dict())
    print(dumps(records if args.sweep else records[0]))
    return EXIT_OK


def cmd_macwilliams(args) -> int:
    orders = _parse_orders(args.orders)
    if any(n < 1 or n > f2.MAX_ORDER for n in orders):
        raise ResourceLimit(f"orders must lie in 1..{f2.MAX_ORDER}")
    print(dumps([f2.macwilliams_survey(n).to_dict() for n in orders]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ryser", description="Circulant Hadamard verification toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def row_arg(sp):
        sp.add_argument("row", help="row as '1,-1,-1,-1' or bitstring '0111'; a file path; or '-' for stdin")

    sp = sub.add_parser("verify", help="test one row for the circulant Hadamard property")
    row_arg(sp)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="odd/even block decomposition as JSON")
    row_arg(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("conditions", help="evaluate the four block conditions")
    row_arg(sp)
    sp.set_defaults(func=cmd_conditions)

    sp = sub.add_parser("search", help="exhaustive search or constrained campaigns")
    sp.add_argument("--orders", required=True, help="comma list and ranges, e.g. 4,8 or 6-28")
    sp.add_argument("--mode", choices=search.MODES, default="full")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", help="directory for JSON reports and the CSV summary")
    sp.add_argument("--no-symmetry", action="store_true")
    sp.add_argument("--no-prune-rowsum", action="store_true")
    sp.add_argument("--no-prune-paf", action="store_true")
    sp.add_argument("--fixed-block", choices=("e1", "e2", "both"), default="both")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("lemmas", help="run verification suites")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("plotkin", help="Plotkin bound and the exhaustive code oracle")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--oracle", action="store_true", help="also compute A_2(m,d) exhaustively")
    sp.add_argument("--sweep", action="store_true", help="all (m', d) with m' <= m, d even, 2d > m'")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_plotkin)

    sp = sub.add_parser("macwilliams", help="survey symmetric orthogonal circulants over F2")
    sp.add_argument("--orders", default="3-20")
    sp.set_defaults(func=cmd_macwilliams)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvalidArgument, PreconditionViolation, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
