"""Minimum saturated queen placements with no three in a line.

A placement of queens on the n x n board is *good* when no three queens
share a row, column, diagonal, or antidiagonal, and no further queen can
be added without creating such a triple.  This package finds minimum good
placements by exhaustive search, verifies or refutes candidate placements,
and builds two kinds of independent evidence: polynomial certificates via
the Combinatorial Nullstellensatz for sizes below the proven lower bound,
and an elementary counting audit over the lines a placement defines.
"""

from .audit import AuditReport, audit
from .documents import (
    DocumentError,
    line_document,
    line_from_document,
    load_placement_file,
    parse_placement,
    parse_placement_document,
    placement_document,
    placement_to_text,
)
from .geometry import (
    SLOPES,
    SYMMETRIES,
    BoardRangeError,
    EmptyIntersectionError,
    InvalidPlacementError,
    Line,
    Placement,
    Square,
    all_lines,
    board_squares,
    canonical_form,
    count_attacked,
    in_board,
    line_on_board,
    line_squares,
    lines_through,
    transform_placement,
    transform_square,
)
from .nullstellensatz import (
    BoundNotApplicableError,
    CnCertificate,
    LinePlan,
    PlannerError,
    defined_lines,
    isolated_queens,
    line_factor,
    line_polynomial,
    line_value,
    per_slope_line_bound,
    plan_line_set,
    refute_goodness,
)
from .polynomial import SparseBivariatePoly
from .render import render_ascii, render_board, render_svg
from .search import (
    InconclusiveSearchError,
    SearchConfig,
    SearchResult,
    SearchStats,
    exists_good_of_size,
    greedy_good_placement,
    lower_bound,
    naive_lower_bound,
    resolve_worker_count,
    solve_min_good,
)
from .verify import (
    LineCounts,
    VerifyReport,
    addable_squares,
    find_three_in_line,
    has_three_in_line,
    is_good,
    verify_placement,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BoardRangeError",
    "BoundNotApplicableError",
    "CnCertificate",
    "DocumentError",
    "EmptyIntersectionError",
    "InconclusiveSearchError",
    "InvalidPlacementError",
    "Line",
    "LineCounts",
    "LinePlan",
    "Placement",
    "PlannerError",
    "SLOPES",
    "SYMMETRIES",
    "SearchConfig",
    "SearchResult",
    "SearchStats",
    "SparseBivariatePoly",
    "Square",
    "VerifyReport",
    "addable_squares",
    "all_lines",
    "audit",
    "board_squares",
    "canonical_form",
    "count_attacked",
    "defined_lines",
    "exists_good_of_size",
    "find_three_in_line",
    "greedy_good_placement",
    "has_three_in_line",
    "in_board",
    "is_good",
    "isolated_queens",
    "line_document",
    "line_factor",
    "line_from_document",
    "line_on_board",
    "line_polynomial",
    "line_squares",
    "line_value",
    "lines_through",
    "load_placement_file",
    "lower_bound",
    "naive_lower_bound",
    "parse_placement",
    "parse_placement_document",
    "per_slope_line_bound",
    "placement_document",
    "placement_to_text",
    "plan_line_set",
    "refute_goodness",
    "render_ascii",
    "render_board",
    "render_svg",
    "resolve_worker_count",
    "solve_min_good",
    "transform_placement",
    "transform_square",
    "verify_placement",
]
