"""Command-line front end: generate supertiles, count blocks, evaluate
formulas, cross-verify, render, and inspect caches.

Exit codes are a stable contract: 0 success, 1 verification mismatch or
non-stabilization, 2 flag errors.  Standard out carries parseable
values (a single integer or CSV); diagnostics go to standard error as
single ``error: ...`` / ``note: ...`` lines.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import complexity, enumerator
from .complexity import (
    RecurrenceTable,
    VERIFY_CSV_HEADER,
    closed_form_A,
    coeff_a,
    coeff_b,
    paperfolding_P,
    verify_row,
)
from .enumerator import (
    CountReport,
    PatternSet,
    count_report_csv,
    distinct_patterns,
    load_pattern_set,
    save_pattern_set,
)
from .render import RenderStyle, render_ascii, render_svg
from .supertile import (
    FACING_ROTATIONS,
    Pose,
    SupertileSpec,
    TileGrid,
    build_supertile,
)
from .tileset import IDENTITY, Prototile

CACHE_ENV = "ROBINSONBLOCKS_CACHE"
DEFAULT_MAX_RANK = 11


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _note(msg: str) -> None:
    print(f"note: {msg}", file=sys.stderr)


def _parse_restrict(text: str):
    try:
        r, c = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("--restrict wants ROW,COL (e.g. 1,2)")
    if not (1 <= r <= 2 and 1 <= c <= 2):
        raise argparse.ArgumentTypeError("--restrict coordinates must be 1 or 2")
    return r, c


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robinsonblocks",
        description="Exact n-by-n block counts of Robinson tilings, two ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("supertile", help="generate a supertile grid")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--facing", choices=sorted(FACING_ROTATIONS), default="NE")
    p.add_argument("--out", choices=("svg", "json", "ascii"), default="ascii")
    p.add_argument("--output", type=Path, default=None, help="file path (default stdout)")

    p = sub.add_parser("count", help="stabilized distinct-block count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--restrict", type=_parse_restrict, default=None, metavar="R,C")
    p.add_argument("--csv", type=Path, default=None)
    p.add_argument("--cache", type=Path, default=None)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("formula", help="evaluate a closed form exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("A", "a", "b", "P"), default="A")

    p = sub.add_parser("verify", help="closed form vs recurrence vs oracle")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--csv", type=Path, default=None)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("render", help="render a grid JSON dump to SVG")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--overlay", action="store_true")

    p = sub.add_parser("cache", help="inspect a pattern-set cache file")
    p.add_argument("--inspect", type=Path, required=True)

    return parser


def _cache_dir(args) -> Path | None:
    if args.cache is not None:
        return args.cache
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _pattern_set_at(n: int, rank: int, cache: Path | None, threads: int) -> PatternSet:
    if cache is not None:
        cache.mkdir(parents=True, exist_ok=True)
        path = cache / f"patterns_n{n}_rank{rank}.rbps"
        if path.exists():
            return load_pattern_set(path)
        ps = distinct_patterns(n, rank, IDENTITY, workers=threads)
        save_pattern_set(ps, path)
        return ps
    return distinct_patterns(n, rank, IDENTITY, workers=threads)


def _pattern_restricted_count(ps: PatternSet, n: int, corner_pos) -> int:
    r0 = (corner_pos[0] - 1) % 2
    c0 = (corner_pos[1] - 1) % 2
    bumpy_proto = int(Prototile.BUMPY_CORNER)
    hits = 0
    for data in ps.members():
        ok = True
        for i in range(n * n):
            bumpy = data[3 * i] == bumpy_proto
            want = (i // n) % 2 == r0 and (i % n) % 2 == c0
            if bumpy != want:
                ok = False
                break
        hits += ok
    return hits


def _cmd_supertile(args) -> int:
    grid = build_supertile(SupertileSpec(args.rank, Pose(FACING_ROTATIONS[args.facing], False)))
    if args.out == "ascii":
        text = render_ascii(grid)
    elif args.out == "json":
        text = grid.to_json() + "\n"
    else:
        text = render_svg(grid, RenderStyle())
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text)
        _note(f"wrote {args.output}")
    return 0


def _count_stabilized_sets(n, max_rank, cache, threads, corner_pos):
    """Rank scan over pattern sets so both plain and restricted counts can
    stabilize; mirrors enumerator.count_stabilized's plateau rule."""
    k_min = 1
    while (1 << k_min) - 1 < n:
        k_min += 1
    counts = []
    prev = None
    for rank in range(k_min, max_rank + 1):
        ps = _pattern_set_at(n, rank, cache, threads)
        value = (
            ps.count
            if corner_pos is None
            else _pattern_restricted_count(ps, n, corner_pos)
        )
        counts.append((rank, value))
        if prev is not None and value == prev:
            return CountReport(n, rank, value, True, tuple(counts))
        prev = value
    return CountReport(n, max_rank, prev, False, tuple(counts))


def _cmd_count(args) -> int:
    cache = _cache_dir(args)
    if cache is not None:
        report = _count_stabilized_sets(
            args.n, args.max_rank, cache, args.threads, args.restrict
        )
    elif args.restrict is not None:
        report = enumerator.restricted_count_stabilized(
            args.n, args.restrict, args.max_rank, workers=args.threads
        )
    else:
        report = enumerator.count_stabilized(
            args.n, args.max_rank, workers=args.threads
        )
    if args.csv is not None:
        args.csv.write_text(count_report_csv(report))
        _note(f"wrote {args.csv}")
    if not report.stabilized:
        _err(
            f"count for n={args.n} did not stabilize by rank {args.max_rank} "
            f"(last count {report.count})"
        )
        return 1
    print(report.count)
    _note(f"stabilized at rank {report.rank_used}")
    return 0


def _cmd_formula(args) -> int:
    try:
        if args.which == "A":
            value = closed_form_A(args.n)
        elif args.which == "a":
            value = coeff_a(args.n)
        elif args.which == "b":
            value = coeff_b(args.n)
        else:
            value = paperfolding_P(args.n)
            _note("paper-folding value is the Gahler-Nilsson conjecture, evaluated not asserted")
    except complexity.DomainError as exc:
        _err(str(exc))
        return 2
    print(value)
    return 0


def _cmd_verify(args) -> int:
    if args.n_min < 2:
        _err("verify needs --n-min >= 2 (the closed form excludes n=1)")
        return 2
    table = RecurrenceTable()
    rows = [VERIFY_CSV_HEADER]
    all_ok = True
    for n in range(args.n_min, args.n_max + 1):
        closed = closed_form_A(n)
        recur = table.A(n)
        report = enumerator.count_stabilized(n, args.max_rank, workers=args.threads)
        oracle = report.count
        ok = report.stabilized and closed == recur == oracle
        all_ok &= ok
        rows.append(verify_row(n, closed, recur, oracle, ok))
    text = "\n".join(rows) + "\n"
    sys.stdout.write(text)
    if args.csv is not None:
        args.csv.write_text(text)
        _note(f"wrote {args.csv}")
    if not all_ok:
        _err("verification mismatch or non-stabilization (see match column)")
        return 1
    return 0


def _cmd_render(args) -> int:
    grid = TileGrid.from_json(args.input.read_text())
    style = RenderStyle(rank_overlay=args.overlay)
    args.out.write_text(render_svg(grid, style))
    _note(f"wrote {args.out}")
    return 0


def _cmd_cache(args) -> int:
    ps = load_pattern_set(args.inspect)
    print("n,count,version")
    print(f"{ps.n},{ps.count},{enumerator.FORMAT_VERSION}")
    return 0


_COMMANDS = {
    "supertile": _cmd_supertile,
    "count": _cmd_count,
    "formula": _cmd_formula,
    "verify": _cmd_verify,
    "render": _cmd_render,
    "cache": _cmd_cache,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (
        enumerator.BlockTooLarge,
        enumerator.CorruptPatternFile,
        enumerator.PatternVersionMismatch,
        complexity.DomainError,
        ValueError,
        OSError,
    ) as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
