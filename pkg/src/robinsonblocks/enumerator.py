"""The brute-force oracle: slide an n-by-n window over generated
supertiles, deduplicate the blocks exactly, and detect when the count
stops growing with rank.

Windows are deduplicated at the tile-id level (one byte per cell, ids
already canonical); the externally visible Pattern bytes spell each
cell out as its canonical (prototile, rotation, mirror) triple.  Both
encodings sort identically, so member order is lexicographic either
way.
"""

from __future__ import annotations

import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .supertile import SupertileSpec, TileGrid, build_supertile
from .tileset import ALL_TILES, BUMPY_IDS, IDENTITY, Pose, tile_id

MAGIC = b"RBLOCKPS"
FORMAT_VERSION = 1

# Per-tile-id canonical (prototile, rotation, mirror) triple, flattened.
_TRIPLE_LUT = np.array(
    [
        [t.prototile, t.pose.rotation, int(t.pose.mirror)]
        for t in ALL_TILES
    ],
    dtype=np.uint8,
)

# Rows of windows processed per dedup band; bounds peak memory while
# keeping numpy batches large.
_BAND_ROWS = 256


class BlockTooLarge(ValueError):
    """Requested block side exceeds the supertile side 2^rank - 1."""


class CorruptPatternFile(ValueError):
    def __init__(self, offset: int, msg: str):
        self.offset = offset
        super().__init__(f"corrupt pattern-set file at byte {offset}: {msg}")


class PatternVersionMismatch(ValueError):
    def __init__(self, found: int):
        self.found = found
        super().__init__(
            f"pattern-set file has format version {found}, "
            f"this build reads version {FORMAT_VERSION}"
        )


@dataclass(frozen=True)
class Pattern:
    """One deduplicated n-by-n block in canonical byte form."""

    n: int
    data: bytes  # row-major, 3 bytes per cell

    def __post_init__(self):
        if len(self.data) != 3 * self.n * self.n:
            raise ValueError("pattern data length must be 3*n*n")


class PatternSet:
    """Dedup store of same-sized Patterns with an exact count."""

    def __init__(self, n: int, members=()):
        self.n = n
        self._members = set()
        for m in members:
            self.add(m)

    def add(self, pattern) -> None:
        data = pattern.data if isinstance(pattern, Pattern) else bytes(pattern)
        if len(data) != 3 * self.n * self.n:
            raise ValueError("pattern size mismatch")
        self._members.add(data)

    @property
    def count(self) -> int:
        return len(self._members)

    def members(self):
        """Member byte strings in lexicographic order."""
        return sorted(self._members)

    def patterns(self):
        return [Pattern(self.n, m) for m in self.members()]

    def __contains__(self, pattern) -> bool:
        data = pattern.data if isinstance(pattern, Pattern) else bytes(pattern)
        return data in self._members

    def __eq__(self, other):
        return (
            isinstance(other, PatternSet)
            and self.n == other.n
            and self._members == other._members
        )

    def __len__(self):
        return self.count


@dataclass(frozen=True)
class CountReport:
    n: int
    rank_used: int
    count: int
    stabilized: bool
    counts_by_rank: tuple  # ((rank, count), ...)


COUNT_CSV_HEADER = "n,rank,count,stabilized"


def count_report_csv(report: CountReport) -> str:
    """CSV rows for a stabilization probe, one per rank."""
    lines = [COUNT_CSV_HEADER]
    for rank, count in report.counts_by_rank:
        stab = report.stabilized and rank == report.rank_used
        lines.append(f"{report.n},{rank},{count},{str(stab).lower()}")
    return "\n".join(lines) + "\n"


def canonical_encode(window: TileGrid) -> Pattern:
    """Deterministic byte encoding of a square window; injective on
    semantic tile equivalence classes."""
    if window.width != window.height:
        raise ValueError("canonical_encode needs a square window")
    ids = window.ids
    if (ids == 255).any():
        raise ValueError("cannot encode a window with empty cells")
    return Pattern(window.width, _TRIPLE_LUT[ids.reshape(-1)].tobytes())


def _check_block_size(n: int, rank: int) -> None:
    if n < 1:
        raise ValueError(f"block side must be >= 1, got {n}")
    side = (1 << rank) - 1
    if n > side:
        raise BlockTooLarge(
            f"block side {n} exceeds rank-{rank} supertile side {side}"
        )


def _unique_windows(ids: np.ndarray, n: int, workers: int = 1) -> np.ndarray:
    """Distinct n-by-n windows of a tile-id array, as sorted unique rows.

    Extraction is partitioned into row bands; each band is deduplicated
    privately and the band results are merged, so the outcome is
    bit-identical for any worker count.
    """
    h = ids.shape[0]
    starts = list(range(0, h - n + 1, _BAND_ROWS))

    def band(start):
        stop = min(start + _BAND_ROWS + n - 1, h)
        win = sliding_window_view(ids[start:stop], (n, n)).reshape(-1, n * n)
        return np.unique(win, axis=0)

    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(band, starts))
    else:
        parts = [band(s) for s in starts]
    if len(parts) == 1:
        return parts[0]
    return np.unique(np.concatenate(parts), axis=0)


def _window_array(n: int, rank: int, facing: Pose, workers: int) -> np.ndarray:
    _check_block_size(n, rank)
    grid = build_supertile(SupertileSpec(rank, facing))
    return _unique_windows(grid.ids, n, workers)


def distinct_patterns(
    n: int, rank: int, facing: Pose = IDENTITY, workers: int = 1
) -> PatternSet:
    """All distinct n-by-n windows of the rank-``rank`` supertile."""
    rows = _window_array(n, rank, facing, workers)
    ps = PatternSet(n)
    for row in rows:
        ps.add(_TRIPLE_LUT[row].tobytes())
    return ps


def count_distinct(n: int, rank: int, facing: Pose = IDENTITY, workers: int = 1) -> int:
    """Exact distinct-window count without materialising Patterns."""
    return int(_window_array(n, rank, facing, workers).shape[0])


def _cross_band_unique(ids: np.ndarray, n: int, workers: int) -> np.ndarray:
    """Distinct windows that touch the central row or central column."""
    s = ids.shape[0]
    c = (s - 1) // 2
    lo = max(0, c - n + 1)
    hi = min(c, s - n)
    horiz = _unique_windows(ids[lo : hi + n, :], n, workers)
    vert = _unique_windows(ids[:, lo : hi + n].copy(), n, workers)
    return np.unique(np.concatenate([horiz, vert]), axis=0)


_FACINGS = tuple(Pose(r, False) for r in range(4))


def count_stabilized(
    n: int, k_max: int, facing: Pose = IDENTITY, workers: int = 1
) -> CountReport:
    """Increase the rank until two consecutive ranks agree on the
    distinct-window count of the fixed-facing supertile.

    Counts are computed incrementally: a rank-(k+1) window either
    touches the central cross or lies inside a quadrant, and the four
    quadrants are exactly the four facings of rank k.  Accumulating the
    union over facings therefore reproduces the plain per-rank counts
    while only ever extracting cross-touching windows.

    Non-stabilization within k_max is reported, not raised.
    """
    k_min = 1
    while (1 << k_min) - 1 < n:
        k_min += 1
    if k_max < k_min:
        raise BlockTooLarge(
            f"k_max={k_max} cannot host an n={n} block (needs rank >= {k_min})"
        )

    union: set = set()
    counts = []
    prev = None
    for k in range(k_min, k_max + 1):
        if k == k_min:
            per_facing = [
                _unique_windows(
                    build_supertile(SupertileSpec(k, f)).ids, n, workers
                )
                for f in _FACINGS
            ]
            got = int(per_facing[_FACINGS.index(facing)].shape[0])
            for rows in per_facing:
                union.update(r.tobytes() for r in rows)
        else:
            bands = {
                f: _cross_band_unique(
                    build_supertile(SupertileSpec(k, f)).ids, n, workers
                )
                for f in _FACINGS
            }
            # Fixed-facing count: all quadrant windows (the rank-(k-1)
            # union) plus this facing's own cross-touching windows.
            facing_band = {row.tobytes() for row in bands[facing]}
            got = len(union | facing_band)
            for rows in bands.values():
                union.update(r.tobytes() for r in rows)
        counts.append((k, got))
        if prev is not None and got == prev:
            return CountReport(n, k, got, True, tuple(counts))
        prev = got
    return CountReport(n, k_max, prev, False, tuple(counts))


def restricted_count_stabilized(
    m: int, corner_pos, k_max: int, facing: Pose = IDENTITY, workers: int = 1
) -> CountReport:
    """Stabilization scan for a position-restricted count."""
    k_min = 1
    while (1 << k_min) - 1 < m:
        k_min += 1
    if k_max < k_min:
        raise BlockTooLarge(
            f"k_max={k_max} cannot host an m={m} block (needs rank >= {k_min})"
        )
    counts = []
    prev = None
    for k in range(k_min, k_max + 1):
        got = restricted_count(m, corner_pos, k, facing, workers)
        counts.append((k, got))
        if prev is not None and got == prev:
            return CountReport(m, k, got, True, tuple(counts))
        prev = got
    return CountReport(m, k_max, prev, False, tuple(counts))


def _restricted_mask(rows: np.ndarray, m: int, corner_pos) -> np.ndarray:
    r0 = (corner_pos[0] - 1) % 2
    c0 = (corner_pos[1] - 1) % 2
    bumpy = BUMPY_IDS[rows.reshape(-1, m, m)]
    rr = np.arange(m) % 2 == r0
    cc = np.arange(m) % 2 == c0
    want = rr[:, None] & cc[None, :]
    return (bumpy == want[None, :, :]).all(axis=(1, 2))


def restricted_count(
    m: int,
    corner_pos,
    rank: int,
    facing: Pose = IDENTITY,
    workers: int = 1,
) -> int:
    """Distinct m-by-m patterns whose bumpy-corner lattice starts exactly
    at ``corner_pos`` ([row, col], 1-based, both in 1..2)."""
    r, c = corner_pos
    if not (1 <= r <= min(2, m) and 1 <= c <= min(2, m)):
        raise ValueError(f"corner_pos must lie in the leading 2x2, got {corner_pos}")
    rows = _window_array(m, rank, facing, workers)
    return int(_restricted_mask(rows, m, corner_pos).sum())


def save_pattern_set(ps: PatternSet, path) -> None:
    """Write the bit-exact cache format: magic, version, n, count, then
    length-prefixed members in lexicographic order."""
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack(">HIQ", FORMAT_VERSION, ps.n, ps.count))
        for member in ps.members():
            fh.write(struct.pack(">I", len(member)))
            fh.write(member)


def load_pattern_set(path) -> PatternSet:
    """Inverse of save_pattern_set; load(save(ps)) == ps."""
    with open(path, "rb") as fh:
        blob = fh.read()
    header = struct.calcsize(">HIQ")
    if len(blob) < len(MAGIC) + header:
        raise CorruptPatternFile(len(blob), "truncated header")
    if blob[: len(MAGIC)] != MAGIC:
        raise CorruptPatternFile(0, "bad magic")
    version, n, count = struct.unpack_from(">HIQ", blob, len(MAGIC))
    if version != FORMAT_VERSION:
        raise PatternVersionMismatch(version)
    offset = len(MAGIC) + header
    members = []
    for _ in range(count):
        if offset + 4 > len(blob):
            raise CorruptPatternFile(offset, "truncated record length")
        (length,) = struct.unpack_from(">I", blob, offset)
        offset += 4
        if offset + length > len(blob):
            raise CorruptPatternFile(offset, "truncated record")
        members.append(blob[offset : offset + length])
        offset += length
    if offset != len(blob):
        raise CorruptPatternFile(offset, "trailing bytes")
    ps = PatternSet(n)
    for m in members:
        ps.add(m)
    if ps.count != count:
        raise CorruptPatternFile(offset, "duplicate records")
    return ps
