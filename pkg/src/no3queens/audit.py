"""Row-and-column coverage audit behind the elementary counting bound.

For a no-3 placement, let U be the squares lying on no horizontal or
vertical line with two queens.  Slicing U by column gives sets C_i with
extreme nonempty columns a < b and count c; rows give a' < b' and r.  Every
square of the two extreme columns must be occupied or attacked through a
slope +1 or -1 line with two queens, and at most one line per diagonal
slope can attack two of those squares.  Counting attackers yields

    2r - 2 - min(q'', 2)  >=  2n - q - 2

for any good placement with c >= 2 and r >= 2, where q'' is the number of
queens on no defined horizontal or vertical line.  When c <= 1 or r <= 1
the placement needs q >= 2(n - 1) instead.  The audit reports every
quantity in that chain; frames are rotated a quarter turn when needed so
that the column span b - a is at least the row span b' - a'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import InvalidPlacementError, Line, Placement
from .verify import LineCounts, find_three_in_line, is_good


@dataclass(frozen=True)
class AuditReport:
    n: int
    q: int
    q_dd: int
    u_size: int
    col_indices: tuple[int, ...]
    col_min: int | None
    col_max: int | None
    col_count: int
    row_indices: tuple[int, ...]
    row_min: int | None
    row_max: int | None
    row_count: int
    rotated: bool
    slope_pm1_lines_defined: int
    good: bool
    inequality_lhs: int
    inequality_rhs_chain: int
    bound_holds: bool | None
    degenerate: bool
    degenerate_bound_holds: bool | None
    even_branch: str | None


def _rotate_quarter(placement: Placement) -> Placement:
    n = placement.n
    return Placement(n, frozenset((y, n + 1 - x) for x, y in placement.queens))


def _frame_data(placement: Placement) -> dict:
    n = placement.n
    counts = LineCounts(placement)
    defined_cols = {x for x in range(1, n + 1) if counts[Line("V", x)] >= 2}
    defined_rows = {y for y in range(1, n + 1) if counts[Line("H", y)] >= 2}
    u_squares = [
        (x, y)
        for x in range(1, n + 1)
        for y in range(1, n + 1)
        if x not in defined_cols and y not in defined_rows
    ]
    u_set = set(u_squares)
    q_dd = sum(1 for sq in placement.queens if sq in u_set)
    col_indices = tuple(sorted({x for x, _ in u_squares}))
    row_indices = tuple(sorted({y for _, y in u_squares}))
    pm1 = sum(1 for line, c in counts.items()
              if c >= 2 and line.slope in ("D", "A"))
    return {
        "u_squares": u_squares,
        "q_dd": q_dd,
        "col_indices": col_indices,
        "row_indices": row_indices,
        "pm1": pm1,
    }


def audit(placement: Placement) -> AuditReport:
    """Compute the counting-argument quantities for a no-3 placement.

    Inequality verdicts are only populated (non-None) when the placement is
    actually good; on other placements the audit stays descriptive.  All
    square-level fields refer to the rotated frame whenever ``rotated`` is
    set.
    """
    if find_three_in_line(placement) is not None:
        raise InvalidPlacementError("audit requires a placement with no three in a line")

    frame = placement
    data = _frame_data(frame)
    rotated = False
    cols, rows = data["col_indices"], data["row_indices"]
    if cols and rows:
        col_span = cols[-1] - cols[0]
        row_span = rows[-1] - rows[0]
        if col_span < row_span:
            frame = _rotate_quarter(placement)
            data = _frame_data(frame)
            rotated = True
            cols, rows = data["col_indices"], data["row_indices"]

    n, q = placement.n, placement.q
    q_dd = data["q_dd"]
    c = len(cols)
    r = len(rows)
    good = is_good(placement)
    lhs = 2 * r - 2 - min(q_dd, 2)
    rhs = 2 * n - q - 2
    degenerate = c <= 1 or r <= 1

    return AuditReport(
        n=n,
        q=q,
        q_dd=q_dd,
        u_size=len(data["u_squares"]),
        col_indices=cols,
        col_min=cols[0] if cols else None,
        col_max=cols[-1] if cols else None,
        col_count=c,
        row_indices=rows,
        row_min=rows[0] if rows else None,
        row_max=rows[-1] if rows else None,
        row_count=r,
        rotated=rotated,
        slope_pm1_lines_defined=data["pm1"],
        good=good,
        inequality_lhs=lhs,
        inequality_rhs_chain=rhs,
        bound_holds=(lhs >= rhs) if (good and c >= 2 and r >= 2) else None,
        degenerate=degenerate,
        degenerate_bound_holds=(q >= 2 * (n - 1)) if (good and degenerate) else None,
        even_branch=None if n % 2 else ("q_dd=0" if q_dd == 0 else "q_dd>0"),
    )
