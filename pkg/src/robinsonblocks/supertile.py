"""Recursive supertile construction and whole-grid validation.

A rank-k supertile is a (2^k - 1)-square grid: four rank-(k-1)
supertiles facing a central corner tile, with the central row and
column (the cross) filled by arm tiles.  The quadrants are fixed; only
the center tile and the cross decorations depend on the requested
facing.  Cross cells are not hard-coded: each one is solved from the
matching rules and must admit exactly one tile, so every build doubles
as a consistency check of the tile transcription.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .tileset import (
    ALL_TILES,
    EAST_OK,
    SOUTH_OK,
    BUMPY_IDS,
    IDENTITY,
    OrientedTile,
    Pose,
    Prototile,
    tile_from_id,
    tile_id,
)

EMPTY = 255

# Facing = the diagonal the corner decoration points at, as a rotation of
# the identity (north-east) orientation, counter-clockwise.
FACING_ROTATIONS = {"NE": 0, "NW": 1, "SW": 2, "SE": 3}
FACING_NAMES = {v: k for k, v in FACING_ROTATIONS.items()}


class CrossUnsolvable(Exception):
    """No tile fits a cross cell; signals a faulty tile transcription."""

    def __init__(self, pos, msg=""):
        self.pos = pos
        super().__init__(f"no tile fits cross cell {list(pos)}{': ' + msg if msg else ''}")


class CrossAmbiguous(Exception):
    """More than one tile fits a cross cell; signals a faulty transcription."""

    def __init__(self, pos, candidates):
        self.pos = pos
        self.candidates = candidates
        names = ", ".join(str(tile_from_id(i)) for i in candidates)
        super().__init__(f"{len(candidates)} tiles fit cross cell {list(pos)}: {names}")


@dataclass(frozen=True)
class SupertileSpec:
    """Rank plus facing pose (rotations only; supertiles are never mirrored)."""

    rank: int
    pose: Pose = IDENTITY

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.pose.mirror:
            raise ValueError("supertile facing is restricted to the 4 rotations")

    @property
    def side(self) -> int:
        return (1 << self.rank) - 1


class TileGrid:
    """A rectangular, row-major array of oriented tiles.

    Coordinates are [row, col], 1-based, row 1 at top.  Cells may be
    empty (None) in partially built grids.  Grids are immutable after
    construction.
    """

    def __init__(self, ids: np.ndarray):
        ids = np.asarray(ids, dtype=np.uint8)
        if ids.ndim != 2:
            raise ValueError("grid ids must be 2-dimensional")
        self._ids = ids.copy()
        self._ids.setflags(write=False)

    @classmethod
    def from_tiles(cls, rows) -> "TileGrid":
        """Build from nested lists of OrientedTile (or None for empty)."""
        height = len(rows)
        width = len(rows[0]) if height else 0
        ids = np.full((height, width), EMPTY, dtype=np.uint8)
        for r, row in enumerate(rows):
            if len(row) != width:
                raise ValueError("ragged rows")
            for c, tile in enumerate(row):
                if tile is not None:
                    ids[r, c] = tile_id(tile)
        return cls(ids)

    @property
    def width(self) -> int:
        return self._ids.shape[1]

    @property
    def height(self) -> int:
        return self._ids.shape[0]

    @property
    def ids(self) -> np.ndarray:
        """The canonical tile-id array (read-only view)."""
        return self._ids

    def tile_at(self, row: int, col: int) -> Optional[OrientedTile]:
        """The tile at 1-based [row, col], or None if the cell is empty."""
        idx = self._ids[row - 1, col - 1]
        return None if idx == EMPTY else tile_from_id(int(idx))

    def cells(self):
        """All cells in row-major order (None for empty)."""
        flat = self._ids.reshape(-1)
        return [None if i == EMPTY else tile_from_id(int(i)) for i in flat]

    def __eq__(self, other):
        return isinstance(other, TileGrid) and np.array_equal(self._ids, other._ids)

    def __hash__(self):
        return hash((self._ids.shape, self._ids.tobytes()))

    def __repr__(self):
        return f"TileGrid({self.height}x{self.width})"

    def to_json(self) -> str:
        """Normative JSON dump: {width, height, cells} with row-major
        [tile, rotation, mirror] triples."""
        cells = []
        for tile in self.cells():
            if tile is None:
                cells.append(None)
            else:
                cells.append(
                    [tile.prototile.key, tile.pose.rotation, tile.pose.mirror]
                )
        return json.dumps(
            {"width": self.width, "height": self.height, "cells": cells},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "TileGrid":
        doc = json.loads(text)
        width, height = doc["width"], doc["height"]
        cells = doc["cells"]
        if len(cells) != width * height:
            raise ValueError("cell count does not match width*height")
        key_to_proto = {p.key: p for p in Prototile}
        rows = []
        for r in range(height):
            row = []
            for c in range(width):
                entry = cells[r * width + c]
                if entry is None:
                    row.append(None)
                else:
                    name, rot, mirror = entry
                    row.append(OrientedTile(key_to_proto[name], Pose(int(rot), bool(mirror))))
            rows.append(row)
        return cls.from_tiles(rows)


def _candidates(ids: np.ndarray, r: int, c: int) -> list:
    """Tile ids compatible with every placed neighbour of cell (r, c), 0-based.

    Applies both local rules: arrow matching against the four neighbours
    and the exactly-one-bumpy-corner parity over every fully placed 2x2
    window through the cell (the rule that separates bumpy corners from
    plain ones, whose arrows agree).
    """
    h, w = ids.shape
    ok = np.ones(len(ALL_TILES), dtype=bool)
    if r > 0 and ids[r - 1, c] != EMPTY:
        ok &= SOUTH_OK[ids[r - 1, c], :]
    if r < h - 1 and ids[r + 1, c] != EMPTY:
        ok &= SOUTH_OK[:, ids[r + 1, c]]
    if c > 0 and ids[r, c - 1] != EMPTY:
        ok &= EAST_OK[ids[r, c - 1], :]
    if c < w - 1 and ids[r, c + 1] != EMPTY:
        ok &= EAST_OK[:, ids[r, c + 1]]
    for r0 in (r - 1, r):
        for c0 in (c - 1, c):
            if not (0 <= r0 and r0 + 1 < h and 0 <= c0 and c0 + 1 < w):
                continue
            others = [
                (rr, cc)
                for rr in (r0, r0 + 1)
                for cc in (c0, c0 + 1)
                if (rr, cc) != (r, c)
            ]
            if any(ids[rr, cc] == EMPTY for rr, cc in others):
                continue
            placed_bumpy = sum(bool(BUMPY_IDS[ids[rr, cc]]) for rr, cc in others)
            if placed_bumpy == 0:
                ok &= BUMPY_IDS
            elif placed_bumpy == 1:
                ok &= ~BUMPY_IDS
            else:
                ok &= False
    return [int(i) for i in np.nonzero(ok)[0]]


def solve_cross_cell(partial: TileGrid, pos) -> OrientedTile:
    """The unique tile fitting ``pos`` (1-based [row, col]) given the
    already-placed neighbours.  Raises CrossUnsolvable / CrossAmbiguous."""
    r, c = pos[0] - 1, pos[1] - 1
    cands = _candidates(partial.ids, r, c)
    if not cands:
        raise CrossUnsolvable((pos[0], pos[1]))
    if len(cands) > 1:
        raise CrossAmbiguous((pos[0], pos[1]), cands)
    return tile_from_id(cands[0])


_BUILD_MEMO: dict = {}


def _solve_into(ids: np.ndarray, r: int, c: int, offset) -> None:
    cands = _candidates(ids, r, c)
    if not cands:
        raise CrossUnsolvable((offset[0] + r + 1, offset[1] + c + 1))
    if len(cands) > 1:
        raise CrossAmbiguous((offset[0] + r + 1, offset[1] + c + 1), cands)
    ids[r, c] = cands[0]


def _build_ids(rank: int, facing: int) -> np.ndarray:
    key = (rank, facing)
    memo = _BUILD_MEMO.get(key)
    if memo is not None:
        return memo

    if rank == 1:
        ids = np.array(
            [[tile_id(OrientedTile(Prototile.BUMPY_CORNER, Pose(facing, False)))]],
            dtype=np.uint8,
        )
    else:
        side = (1 << rank) - 1
        m = 1 << (rank - 1)  # 1-based center index; 0-based is m-1
        ids = np.full((side, side), EMPTY, dtype=np.uint8)
        # Quadrants always face the center, regardless of the outer facing.
        ids[: m - 1, : m - 1] = _build_ids(rank - 1, FACING_ROTATIONS["SE"])
        ids[: m - 1, m:] = _build_ids(rank - 1, FACING_ROTATIONS["SW"])
        ids[m:, : m - 1] = _build_ids(rank - 1, FACING_ROTATIONS["NE"])
        ids[m:, m:] = _build_ids(rank - 1, FACING_ROTATIONS["NW"])
        cc = m - 1
        ids[cc, cc] = tile_id(OrientedTile(Prototile.CORNER, Pose(facing, False)))
        # Center first, then outward along each half-row/half-column, so
        # every cross cell sees at least two placed neighbours.
        for d in range(1, m):
            for r, c in ((cc - d, cc), (cc + d, cc), (cc, cc - d), (cc, cc + d)):
                _solve_into(ids, r, c, (0, 0))

    ids.setflags(write=False)
    _BUILD_MEMO[key] = ids
    return ids


def build_supertile(spec: SupertileSpec) -> TileGrid:
    """The validated rank-``spec.rank`` supertile facing ``spec.pose``."""
    return TileGrid(_build_ids(spec.rank, spec.pose.rotation))


def build(rank: int, facing: str = "NE") -> TileGrid:
    """Convenience wrapper taking a facing name (NE, NW, SW, SE)."""
    return build_supertile(SupertileSpec(rank, Pose(FACING_ROTATIONS[facing], False)))


@dataclass(frozen=True)
class Violation:
    kind: str  # "adjacency" or "parity"
    row: int  # 1-based position: the west/north cell, or the 2x2 top-left
    col: int
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple

    def __bool__(self):
        return self.ok


def validate(grid: TileGrid) -> ValidationReport:
    """Check every adjacency and the exactly-one-bumpy-corner parity rule.

    Violations are reported as data; empty cells are skipped (pairs and
    2x2 windows touching an empty cell are vacuously fine).
    """
    ids = grid.ids
    h, w = ids.shape
    violations = []

    if w > 1:
        a, b = ids[:, :-1], ids[:, 1:]
        placed = (a != EMPTY) & (b != EMPTY)
        bad = placed & ~EAST_OK[np.minimum(a, 31), np.minimum(b, 31)]
        for r, c in zip(*np.nonzero(bad)):
            violations.append(Violation("adjacency", int(r) + 1, int(c) + 1, "east"))
    if h > 1:
        a, b = ids[:-1, :], ids[1:, :]
        placed = (a != EMPTY) & (b != EMPTY)
        bad = placed & ~SOUTH_OK[np.minimum(a, 31), np.minimum(b, 31)]
        for r, c in zip(*np.nonzero(bad)):
            violations.append(Violation("adjacency", int(r) + 1, int(c) + 1, "south"))
    if h > 1 and w > 1:
        bumpy = BUMPY_IDS[np.minimum(ids, 31)] & (ids != EMPTY)
        placed = ids != EMPTY
        window_placed = (
            placed[:-1, :-1] & placed[:-1, 1:] & placed[1:, :-1] & placed[1:, 1:]
        )
        counts = (
            bumpy[:-1, :-1].astype(np.int8)
            + bumpy[:-1, 1:]
            + bumpy[1:, :-1]
            + bumpy[1:, 1:]
        )
        bad = window_placed & (counts != 1)
        for r, c in zip(*np.nonzero(bad)):
            violations.append(
                Violation("parity", int(r) + 1, int(c) + 1, f"{int(counts[r, c])} bumpy corners")
            )

    violations.sort(key=lambda v: (v.row, v.col, v.kind, v.detail))
    return ValidationReport(not violations, tuple(violations))
