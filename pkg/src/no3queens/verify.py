"""Deciding the no-3-in-line property, addable squares, and goodness.

A placement is *good* when no line carries three queens and no queen can be
added without putting three on a line.  Equivalently, every empty square
lies on some line already holding exactly two queens.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    SLOPES,
    InvalidPlacementError,
    Line,
    Placement,
    Square,
    board_squares,
    lines_through,
)


class LineCounts:
    """Per-line queen counts for a placement, keyed by (slope, offset).

    Reads, increments, and decrements are O(1) dictionary operations.
    Lines with count zero are not stored.
    """

    def __init__(self, placement: Placement):
        self.n = placement.n
        self._counts: dict[Line, int] = {}
        for square in placement.queens:
            for line in lines_through(square, placement.n):
                self._counts[line] = self._counts.get(line, 0) + 1

    def __getitem__(self, line: Line) -> int:
        return self._counts.get(line, 0)

    def increment(self, line: Line) -> int:
        value = self._counts.get(line, 0) + 1
        self._counts[line] = value
        return value

    def decrement(self, line: Line) -> int:
        value = self._counts.get(line, 0) - 1
        if value < 0:
            raise ValueError(f"count for {line} would go negative")
        if value:
            self._counts[line] = value
        else:
            self._counts.pop(line, None)
        return value

    def items(self):
        return self._counts.items()

    def slope_total(self, slope: str) -> int:
        return sum(c for line, c in self._counts.items() if line.slope == slope)

    def lines_with_at_least(self, minimum: int) -> list[Line]:
        found = [line for line, c in self._counts.items() if c >= minimum]
        found.sort(key=lambda line: (SLOPES.index(line.slope), line.offset))
        return found


def find_three_in_line(placement: Placement) -> Line | None:
    """Some line holding three or more queens, or None.

    When several lines violate, the one first in slope order H, V, D, A and
    then by offset is reported, so the answer is deterministic.
    """
    violating = LineCounts(placement).lines_with_at_least(3)
    return violating[0] if violating else None


def has_three_in_line(placement: Placement) -> bool:
    return find_three_in_line(placement) is not None


def addable_squares(placement: Placement) -> frozenset[Square]:
    """Empty squares whose four lines all hold at most one queen.

    Adding a queen on any other empty square would make three in a line.
    Requires the placement itself to satisfy the no-3 property.
    """
    if has_three_in_line(placement):
        raise InvalidPlacementError("placement already has three queens in a line")
    counts = LineCounts(placement)
    addable = []
    for square in board_squares(placement.n):
        if square in placement.queens:
            continue
        if all(counts[line] <= 1 for line in lines_through(square, placement.n)):
            addable.append(square)
    return frozenset(addable)


def is_good(placement: Placement) -> bool:
    """No three in a line, and every addition would create three in a line."""
    if has_three_in_line(placement):
        return False
    return not addable_squares(placement)


@dataclass(frozen=True)
class VerifyReport:
    """Full verdict on one placement."""

    n: int
    q: int
    no_three: bool
    violating_line: Line | None
    addable: frozenset[Square]
    good: bool


def verify_placement(placement: Placement) -> VerifyReport:
    violating = find_three_in_line(placement)
    if violating is not None:
        return VerifyReport(
            n=placement.n,
            q=placement.q,
            no_three=False,
            violating_line=violating,
            addable=frozenset(),
            good=False,
        )
    addable = addable_squares(placement)
    return VerifyReport(
        n=placement.n,
        q=placement.q,
        no_three=True,
        violating_line=None,
        addable=addable,
        good=not addable,
    )
