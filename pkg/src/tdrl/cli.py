"""Command-line entry point: ``tdrl <subcommand> ...``.

Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from tdrl import codes, formulas, neighborhood as nb, recon, verify
from tdrl.perm import (
    OpKind,
    ParseError,
    Pattern,
    Permutation,
    TDRLError,
    WindowedOp,
    apply,
    apply_windowed,
)

FORMATS = ("table", "csv", "json")
TABLES = {"tdrl5": (OpKind.TDRL, 5), "mtdrl4": (OpKind.MTDRL, 4)}


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pattern(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _kind(text: str) -> OpKind:
    try:
        return OpKind.parse(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_apply(args) -> int:
    if (args.window_start is None) != (args.window_len is None):
        raise UsageError("--window-start and --window-len must be given together")
    if args.window_start is None:
        result = apply(args.perm, args.pattern, args.kind)
    else:
        if len(args.pattern) != args.window_len:
            raise TDRLError(f"pattern length {len(args.pattern)} does not match --window-len {args.window_len}")
        result = apply_windowed(args.perm, WindowedOp(args.kind, args.window_start, args.pattern))
    print(result)
    return 0


def table_rows(which: str) -> list[tuple[Permutation, Pattern]]:
    """All 2^n patterns on the identity, all-ones first."""
    kind, n = TABLES[which]
    ident = Permutation.identity(n)
    return [(apply(ident, b, kind), b) for b in Pattern.all_patterns(n)]


def render_table(which: str, fmt: str = "table") -> str:
    rows = table_rows(which)
    if fmt == "csv":
        return _csv_text(["permutation", "pattern"], [(str(p), str(b)) for p, b in rows])
    if fmt == "json":
        return _json([{"permutation": str(p), "pattern": str(b)} for p, b in rows])
    return "".join(f"{p}  ({' '.join(map(str, b))})\n" for p, b in rows)


def cmd_table(args) -> int:
    sys.stdout.write(render_table(args.which, args.format))
    return 0


def cmd_count(args) -> int:
    report = verify.count(args.quantity, args.kind, args.n, args.k, args.mode, args.max_n_override)
    sys.stdout.write(verify.render([report], args.format, single=True))
    return 1 if report.match is False else 0


def cmd_verify(args) -> int:
    reports = verify.verification_matrix(args.n_max, args.kinds, args.quantities, args.max_n_override)
    sys.stdout.write(verify.render(reports, args.format))
    failed = sum(r.match is False for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} PASS", file=sys.stderr)
    return 1 if failed else 0


def _find_op(source, target, kind, k):
    witnesses = nb.ball_out_witnessed(source, kind, k, max_n=len(source))
    return witnesses.get(tuple(target))


def cmd_neighbors(args) -> int:
    p, kind, k, limit = args.perm, args.kind, args.k, args.max_n_override
    direction = nb.Direction(args.direction)
    if direction is nb.Direction.OUT:
        result = nb.ball_out(p, kind, k, limit)
    elif direction is nb.Direction.IN:
        result = nb.ball_in(p, kind, k, limit)
    else:
        result = nb.reversible_set(p, kind, k, limit)
    if args.format == "json":
        sys.stdout.write(_json({
            "n": len(p), "kind": kind.value, "k": k, "direction": direction.value,
            "size": str(len(result)), "perms": [str(q) for q in result],
        }))
    elif args.format == "csv":
        out_ops = nb.ball_out_witnessed(p, kind, k, limit) if direction is not nb.Direction.IN else {}
        rows = []
        for q in result:
            op = out_ops.get(q) if direction is not nb.Direction.IN else _find_op(q, p, kind, k)
            rows.append((str(q), op.start, str(op.pattern)))
        sys.stdout.write(_csv_text(["permutation", "window_start", "pattern"], rows))
    else:
        sys.stdout.write(result.to_text())
    return 0


def cmd_intersect(args) -> int:
    result = nb.intersect_out(args.perm, args.other, args.kind, args.k, args.max_n_override)
    if args.format == "json":
        sys.stdout.write(_json({"size": str(len(result)), "perms": [str(q) for q in result]}))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(["permutation"], [(str(q),) for q in result]))
    else:
        sys.stdout.write(result.to_text())
        print(f"# size {len(result)}")
    return 0


def cmd_reconstruct(args) -> int:
    obs = recon.ObservationSet.read(args.obs_file)
    result = recon.reconstruct(obs, args.kind, args.k, args.max_n_override)
    if args.format == "json":
        sys.stdout.write(result.to_json())
    elif args.format == "csv":
        sys.stdout.write(_csv_text(["candidate"], [(str(q),) for q in result.candidates]))
    else:
        sys.stdout.write(result.candidates.to_text())
        print(f"# unique {str(result.unique).lower()}; guaranteed threshold {result.guaranteed_threshold}")
    return 0


def cmd_bound(args) -> int:
    bound = formulas.sphere_packing_bound(args.n, args.k, args.kind)
    ball = formulas.closed_form(formulas.Quantity.S_OUT, args.kind, args.n, args.k)
    row = {"n": args.n, "k": args.k, "kind": args.kind.value, "ball_size": str(ball), "bound": str(bound)}
    _emit_record(row, args.format)
    return 0


def cmd_code_search(args) -> int:
    code = codes.greedy_code(args.n, args.k, args.kind, args.max_n_override)
    ok = codes.verify_code(code, args.max_n_override)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(code.to_text())
    row = codes.code_report(code).to_dict()
    row["verified"] = ok
    _emit_record(row, args.format)
    return 0 if ok else 1


def cmd_witness(args) -> int:
    family = nb.Family(args.family)
    p, q = nb.witness_pair(args.n, family)
    size = len(nb.intersect_out(p, q, args.kind, max_n=args.max_n_override))
    fits = nb.family_fits(family, args.kind)
    row = {
        "n": args.n, "kind": args.kind.value, "family": family.value,
        "first": str(p), "second": str(q), "intersection": str(size),
        "reconstruction_number": str(formulas.closed_form("nmax", args.kind, args.n)),
        "family_matches_kind": fits,
    }
    if not fits:
        print(f"warning: {family.value} is not the construction used for {args.kind.value}", file=sys.stderr)
    _emit_record(row, args.format)
    return 0


def _emit_record(row: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(_json(row))
    elif fmt == "csv":
        sys.stdout.write(_csv_text(list(row), [[_cell(v) for v in row.values()]]))
    else:
        sys.stdout.write(verify.format_table([list(row), [_cell(v) for v in row.values()]]))


def _cell(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return "-" if v is None else str(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdrl", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n-override", type=int, default=None, metavar="N",
                        help="raise (or lower) every enumeration guard to N")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="table")
    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--kind", type=_kind, default=OpKind.TDRL, help="tdrl or mtdrl")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", parents=[common, kind], help="apply one operation")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--window-start", type=int)
    p.add_argument("--window-len", type=int)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("table", parents=[common, fmt], help="all patterns on a small identity")
    p.add_argument("which", type=str.lower, choices=sorted(TABLES))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count", parents=[common, fmt, kind], help="closed form and/or enumeration")
    p.add_argument("--quantity", type=str.lower, choices=[q.value for q in formulas.Quantity], required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--mode", type=str.lower, choices=("formula", "enumerate", "both"), default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common, fmt], help="formula-vs-enumeration matrix")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--kinds", type=_kind, nargs="+")
    p.add_argument("--quantities", type=str.lower, nargs="+", choices=[q.value for q in formulas.Quantity])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("neighbors", parents=[common, fmt, kind], help="out-ball, in-ball or reversible set")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--direction", choices=[d.value for d in nb.Direction], default="out")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("intersect", parents=[common, fmt, kind], help="intersection of two out-balls")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--other", type=_perm, required=True)
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("reconstruct", parents=[common, fmt, kind], help="candidate sources of observations")
    p.add_argument("--obs-file", required=True)
    p.add_argument("-k", type=int, help="rejected: reconstruction is unbounded-only")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("bound", parents=[common, fmt, kind], help="sphere-packing bound")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("code-search", parents=[common, fmt, kind], help="greedy single-error-correcting code")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--out", help="write the code file here")
    p.set_defaults(func=cmd_code_search)

    p = sub.add_parser("witness", parents=[common, fmt, kind], help="named maximum-intersection pair")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--family", choices=[f.value for f in nb.Family], required=True)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n_override is not None:
        print(f"warning: enumeration guards overridden to n <= {args.max_n_override}", file=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ParseError, FileNotFoundError) as exc:
        print(f"tdrl {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except TDRLError as exc:
        print(f"tdrl {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
