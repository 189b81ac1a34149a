"""Exact block counting for Robinson tilings made of one infinite-order
supertile: a tile-level brute-force oracle cross-checked against the
closed-form/recurrence machinery."""

from .complexity import (
    DecompositionTrace,
    DomainError,
    RecurrenceTable,
    VacantShape,
    closed_form_A,
    coeff_a,
    coeff_b,
    decomposition_trace,
    floor_log2,
    paperfolding_P,
    recurrence_A,
    recurrence_B,
    vacant_places,
)
from .enumerator import (
    BlockTooLarge,
    CountReport,
    Pattern,
    PatternSet,
    canonical_encode,
    count_stabilized,
    distinct_patterns,
    load_pattern_set,
    restricted_count,
    save_pattern_set,
)
from .render import RenderStyle, parse_ascii, render_ascii, render_svg
from .supertile import (
    CrossAmbiguous,
    CrossUnsolvable,
    SupertileSpec,
    TileGrid,
    ValidationReport,
    build,
    build_supertile,
    solve_cross_cell,
    validate,
)
from .tileset import (
    Adjacency,
    Arrow,
    OrientedTile,
    Pose,
    Prototile,
    Side,
    all_oriented_tiles,
    compatible,
    edge_label,
    is_bumpy_corner,
)

__all__ = [
    "Adjacency",
    "Arrow",
    "BlockTooLarge",
    "CountReport",
    "CrossAmbiguous",
    "CrossUnsolvable",
    "DecompositionTrace",
    "DomainError",
    "OrientedTile",
    "Pattern",
    "PatternSet",
    "Pose",
    "Prototile",
    "RecurrenceTable",
    "RenderStyle",
    "Side",
    "SupertileSpec",
    "TileGrid",
    "VacantShape",
    "ValidationReport",
    "all_oriented_tiles",
    "build",
    "build_supertile",
    "canonical_encode",
    "closed_form_A",
    "coeff_a",
    "coeff_b",
    "compatible",
    "count_stabilized",
    "decomposition_trace",
    "distinct_patterns",
    "edge_label",
    "floor_log2",
    "is_bumpy_corner",
    "load_pattern_set",
    "paperfolding_P",
    "parse_ascii",
    "recurrence_A",
    "recurrence_B",
    "render_ascii",
    "render_svg",
    "restricted_count",
    "save_pattern_set",
    "solve_cross_cell",
    "vacant_places",
    "validate",
]

__version__ = "0.1.0"
