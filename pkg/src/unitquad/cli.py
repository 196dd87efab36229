"""Command line interface: build, analyze, verify, report.

Exit codes: 0 all claims confirmed or informational, 1 some claim refuted
(and not acknowledged via ``--expect``), 2 usage error, 3 internal error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="a single odd prime power")
    common.add_argument("--q-range", help="inclusive range A..B of odd prime powers")
    common.add_argument("--claims", help="comma-separated claim ids, e.g. C1,C3")
    common.add_argument("--budget-nodes", type=int, default=2_000_000, help="node cap per exact search")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="fmt", default=None)
    common.add_argument("--cache-dir", default=".qcache")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--workers", type=int, default=1, help="parallel worker processes (one q per job)")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = argparse.ArgumentParser(prog="unitquad", description="Unit-quadrance graph verification lab")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="export D_q (DIMACS, EDGELIST or JSON)")
    sub.add_parser("analyze", parents=[common], help="invariants of D_q for one q")
    v = sub.add_parser("verify", parents=[common], help="run claim checkers and print a report")
    v.add_argument("--expect", help="file of acknowledged refutations, lines like 'C3 *' or 'C9 7'")
    sub.add_parser("report", parents=[common], help="aggregate report over a q range")
    return p


def _q_values(args) -> list[int]:
    from .claims import parse_q_range
    from .ffield import FieldError, PrimePower
    from .qgraph import MAX_GRAPH_Q

    if args.q is not None and args.q_range:
        raise UsageError("use either --q or --q-range")
    if args.q is not None:
        values = [args.q]
    elif args.q_range:
        try:
            values = parse_q_range(args.q_range)
        except ValueError as exc:
            raise UsageError(f"bad --q-range {args.q_range!r}") from exc
    else:
        raise UsageError("one of --q or --q-range is required")
    for q in values:
        try:
            PrimePower.from_q(q)
        except FieldError as exc:
            raise UsageError(str(exc)) from exc
        if q > MAX_GRAPH_Q:
            raise UsageError(f"q = {q} exceeds the supported maximum {MAX_GRAPH_Q}")
    return values


def _claims(args) -> list[str] | None:
    from .claims import CLAIMS

    if not args.claims:
        return None
    ids = [c.strip().upper() for c in args.claims.split(",") if c.strip()]
    unknown = [c for c in ids if c not in CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim ids: {', '.join(unknown)}")
    return ids


def _emit(data: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _load_expect(path: str) -> set[tuple[str, str]]:
    acknowledged = set()
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        acknowledged.add((parts[0].upper(), parts[1] if len(parts) > 1 else "*"))
    return acknowledged


def _run(args) -> int:
    from .claims import Budgets, QContext, dumps_fixed, report, run_suite
    from .qgraph import build_graph, export

    values = _q_values(args)
    budgets = Budgets(nodes=args.budget_nodes)
    cache_dir = None if args.no_cache else args.cache_dir

    if args.command == "build":
        if len(values) != 1:
            raise UsageError("build takes a single --q")
        fmt = (args.fmt or "DIMACS").upper()
        if fmt not in ("DIMACS", "EDGELIST", "JSON"):
            raise UsageError(f"unknown graph format {fmt}")
        _emit(export(build_graph(values[0]), fmt), args.output)
        return EXIT_OK

    if args.command == "analyze":
        if len(values) != 1:
            raise UsageError("analyze takes a single --q")
        fmt = (args.fmt or "JSON").upper()
        if fmt == "JSON":
            ctx = QContext(values[0], budgets, args.seed)
            _emit((dumps_fixed(ctx.profile()) + "\n").encode(), args.output)
        else:
            res = run_suite(values, [], budgets, args.seed, cache_dir)
            _emit(report([], res.profiles, fmt), args.output)
        return EXIT_OK

    fmt = (args.fmt or "MARKDOWN").upper()
    if fmt not in ("MARKDOWN", "JSON", "CSV"):
        raise UsageError(f"unknown report format {fmt}")
    res = run_suite(values, _claims(args), budgets, args.seed, cache_dir, args.workers)
    _emit(report(res.verdicts, res.profiles, fmt), args.output)
    if args.command == "report":
        return EXIT_OK

    if any(v.reason.startswith("internal error") for v in res.verdicts):
        return EXIT_INTERNAL
    acknowledged = _load_expect(args.expect) if args.expect else set()
    unexpected = [
        v for v in res.verdicts
        if v.status.value == "REFUTED"
        and (v.claim_id, "*") not in acknowledged
        and (v.claim_id, str(v.q)) not in acknowledged
    ]
    for v in unexpected:
        print(f"REFUTED {v.claim_id} q={v.q}: {v.reason}", file=sys.stderr)
    return EXIT_REFUTED if unexpected else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _run(args)
    except UsageError as exc:
        print(f"unitquad: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"unitquad: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
