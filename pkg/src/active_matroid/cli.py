"""Command-line interface.

Exit codes: 0 on success, 1 when ``verify`` finds a failing invariant, 2 on
bad input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from . import checks
from .closure import active_partition
from .decomposition import decompose_basis
from .errors import MatroidError
from .filtration import (
    beta_product,
    compact_set,
    enumerate_filtrations,
    enumeration_bound,
    format_set,
    is_connected_filtration,
)
from .fundamental import fundamental_graph, render_tableau
from .io import (
    FORMATS,
    TABLE_HEADER,
    decomposition_to_json,
    filtration_to_json,
    parse_input,
    parse_order,
    parse_set,
    render_table,
    table_rows,
)
from .tutte import tutte

METHODS = ("activities", "ranknullity", "filtrations", "convolution")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="input file, or - for stdin")
    common.add_argument("--format", choices=FORMATS, default="auto",
                        help="input format (default: detect from the first line)")
    common.add_argument("--order", help="comma-separated elements from smallest to largest")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--unicode", action="store_true", help="use the ∅ and ⊂ glyphs")
    common.add_argument("--max-n", type=int, help="bound on |E| for exhaustive enumeration")

    with_basis = argparse.ArgumentParser(add_help=False)
    with_basis.add_argument("--basis", required=True, help="basis, e.g. 1,4,6")

    p = _Parser(prog="active-matroid",
                description="Active filtrations and basis decompositions of ordered matroids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("activities", parents=[common, with_basis],
                   help="internal/external activities and the tableau of a basis")
    sub.add_parser("decompose", parents=[common, with_basis],
                   help="active filtration and uniactive pieces of a basis")
    sub.add_parser("partition", parents=[common, with_basis],
                   help="active partition of a basis")
    sub.add_parser("table", parents=[common], help="decomposition table of all bases")
    t = sub.add_parser("tutte", parents=[common], help="Tutte polynomial")
    t.add_argument("--method", choices=METHODS, default="activities")
    f = sub.add_parser("filtrations", parents=[common], help="list filtrations of the ground set")
    f.add_argument("--connected", action="store_true", help="only connected filtrations")
    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    return p


def _set_json(s):
    return sorted(s)


def _cmd_activities(M, args, out):
    B = parse_set(args.basis)
    F = fundamental_graph(M, B)
    ints, exts = F.internally_active, F.externally_active
    if args.json:
        return {"basis": _set_json(B), "internal_active": _set_json(ints),
                "external_active": _set_json(exts), "iota": len(ints), "epsilon": len(exts),
                "edges": [list(e) for e in F.edges()]}
    u = args.unicode
    out.append(f"Int: {compact_set(ints, M.ground, u)}")
    out.append(f"Ext: {compact_set(exts, M.ground, u)}")
    out.append(f"activities: ({len(ints)}, {len(exts)})")
    out.append(render_tableau(F))


def _cmd_decompose(M, args, out):
    dec = decompose_basis(M, parse_set(args.basis))
    if args.json:
        return decomposition_to_json(dec)
    out.append(f"filtration: {dec.filtration.text(unicode=args.unicode)}")
    out.append(f"parts: {dec.text(unicode=args.unicode, joiner=' + ')}")


def _cmd_partition(M, args, out):
    B = parse_set(args.basis)
    part = active_partition(fundamental_graph(M, B))
    if args.json:
        return {"basis": _set_json(B),
                "parts": [{"key": k, "elements": _set_json(p),
                           "side": "internal" if k in part.internal_keys else "external"}
                          for k, p in part.parts],
                "internal_part": _set_json(part.internal_part),
                "external_part": _set_json(part.external_part)}
    out.append(part.text(joiner=" + ", ground=M.ground))
    u = args.unicode
    out.append(f"external part (cyclic flat): {format_set(part.external_part, unicode=u)}")
    out.append(f"internal part: {format_set(part.internal_part, unicode=u)}")


def _cmd_table(M, args, out):
    if args.json:
        keys = ("filtration", "partition", "pieces", "ext", "int", "basis")
        return {"columns": list(TABLE_HEADER),
                "rows": [dict(zip(keys, r)) for r in table_rows(M, args.unicode)]}
    out.append(render_table(M, args.unicode).rstrip("\n"))


def _cmd_tutte(M, args, out):
    t = tutte(M, args.method)
    if args.json:
        return t.to_json()
    out.append(str(t))


def _cmd_filtrations(M, args, out):
    rows = []
    for f in enumerate_filtrations(M.ground):
        connected = is_connected_filtration(M, f)
        if args.connected and not connected:
            continue
        rows.append((f, connected))
    if args.json:
        return [dict(filtration_to_json(f), connected=c, beta_product=beta_product(M, f))
                for f, c in rows]
    for f, c in rows:
        out.append(f.text(unicode=args.unicode))


def _cmd_verify(M, args, out):
    results = checks.run_checks(M, checks.ALL_CHECKS)
    args.failed = any(r.status == "fail" for r in results)
    if args.json:
        return [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]
    out.extend(r.line() for r in results)


COMMANDS = {
    "activities": _cmd_activities,
    "decompose": _cmd_decompose,
    "partition": _cmd_partition,
    "table": _cmd_table,
    "tutte": _cmd_tutte,
    "filtrations": _cmd_filtrations,
    "verify": _cmd_verify,
}


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.failed = False
    bound = enumeration_bound(args.max_n) if args.max_n is not None else nullcontext()
    try:
        order = parse_order(args.order) if args.order else None
        M = parse_input(args.input, args.format, order)
        out = []
        with bound:
            payload = COMMANDS[args.command](M, args, out)
    except (MatroidError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(out))
    return 1 if args.failed else 0


def main() -> None:
    sys.exit(cli_main())
