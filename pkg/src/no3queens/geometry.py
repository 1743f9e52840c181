"""Board squares, lines, attack geometry, and dihedral symmetry of B_n.

The board B_n is the set of lattice squares [1, n] x [1, n], addressed by
1-based pairs (x, y) with x the column and y the row.  Queens see four line
slopes: horizontal (H, slope 0), vertical (V, slope infinity), diagonal
(D, slope +1), and antidiagonal (A, slope -1).  A line is identified by its
slope class and an integer offset:

    H: y = offset          offset in [1, n]
    V: x = offset          offset in [1, n]
    D: x - y = offset      offset in [1 - n, n - 1]
    A: x + y = offset      offset in [2, 2n]

A board of side n meets exactly 6n - 2 distinct lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

Square = tuple[int, int]

SLOPES = ("H", "V", "D", "A")


class BoardRangeError(ValueError):
    """A square, offset, or board side is outside its valid range."""


class EmptyIntersectionError(ValueError):
    """The given (slope, offset) pair denotes a line that misses the board."""


class InvalidPlacementError(ValueError):
    """A placement violates a structural precondition (duplicates, 3-in-line)."""


class Line(NamedTuple):
    """A board line, named by slope class plus integer offset."""

    slope: str
    offset: int


def _require_board_side(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise BoardRangeError(f"board side must be an integer >= 1, got {n!r}")


def in_board(square: Square, n: int) -> bool:
    x, y = square
    return 1 <= x <= n and 1 <= y <= n


def require_in_board(square: Square, n: int) -> None:
    _require_board_side(n)
    if not in_board(square, n):
        raise BoardRangeError(f"square {square} is not on B_{n}")


def board_squares(n: int) -> list[Square]:
    """All squares of B_n in (x, y)-lexicographic order."""
    _require_board_side(n)
    return [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]


def lines_through(square: Square, n: int) -> list[Line]:
    """The four board lines through a square, in slope order H, V, D, A."""
    require_in_board(square, n)
    x, y = square
    return [Line("H", y), Line("V", x), Line("D", x - y), Line("A", x + y)]


def line_on_board(line: Line, n: int) -> bool:
    _require_board_side(n)
    slope, offset = line
    if slope in ("H", "V"):
        return 1 <= offset <= n
    if slope == "D":
        return 1 - n <= offset <= n - 1
    if slope == "A":
        return 2 <= offset <= 2 * n
    return False


def line_squares(line: Line, n: int) -> list[Square]:
    """Squares of B_n on the line, ascending in x and then y."""
    _require_board_side(n)
    slope, offset = line
    if slope not in SLOPES:
        raise EmptyIntersectionError(f"unknown slope {slope!r}")
    if not line_on_board(line, n):
        raise EmptyIntersectionError(f"line {slope} {offset} misses B_{n}")
    if slope == "H":
        return [(x, offset) for x in range(1, n + 1)]
    if slope == "V":
        return [(offset, y) for y in range(1, n + 1)]
    if slope == "D":
        lo = max(1, 1 + offset)
        hi = min(n, n + offset)
        return [(x, x - offset) for x in range(lo, hi + 1)]
    lo = max(1, offset - n)
    hi = min(n, offset - 1)
    return [(x, offset - x) for x in range(lo, hi + 1)]


def all_lines(n: int) -> list[Line]:
    """Every line meeting B_n; there are 6n - 2 of them."""
    _require_board_side(n)
    lines = [Line("H", off) for off in range(1, n + 1)]
    lines += [Line("V", off) for off in range(1, n + 1)]
    lines += [Line("D", off) for off in range(1 - n, n)]
    lines += [Line("A", off) for off in range(2, 2 * n + 1)]
    return lines


def count_attacked(n: int, square: Square) -> int:
    """How many other squares of B_n share a line with the given square.

    Ranges from 3n - 3 at a corner to 4n - 4 on a full diagonal.
    """
    require_in_board(square, n)
    total = 0
    for line in lines_through(square, n):
        total += len(line_squares(line, n)) - 1
    return total


@dataclass(frozen=True)
class Placement:
    """A set of queens on B_n.  Immutable and hashable."""

    n: int
    queens: frozenset[Square] = frozenset()

    def __post_init__(self) -> None:
        _require_board_side(self.n)
        listed = [(int(x), int(y)) for x, y in self.queens]
        if len(listed) != len(set(listed)):
            raise InvalidPlacementError("placement lists a square twice")
        for sq in listed:
            if not in_board(sq, self.n):
                raise BoardRangeError(f"square {sq} is not on B_{self.n}")
        object.__setattr__(self, "queens", frozenset(listed))

    @property
    def q(self) -> int:
        return len(self.queens)

    def sorted_squares(self) -> list[Square]:
        return sorted(self.queens)

    def occupied(self, square: Square) -> bool:
        return tuple(square) in self.queens

    def with_queen(self, square: Square) -> "Placement":
        if self.occupied(square):
            raise InvalidPlacementError(f"square {tuple(square)} already occupied")
        return Placement(self.n, self.queens | {tuple(square)})


_SYMMETRY_FUNCS: dict[str, Callable[[int, int, int], Square]] = {
    "identity": lambda x, y, n: (x, y),
    "rot90": lambda x, y, n: (y, n + 1 - x),
    "rot180": lambda x, y, n: (n + 1 - x, n + 1 - y),
    "rot270": lambda x, y, n: (n + 1 - y, x),
    "mirror_x": lambda x, y, n: (n + 1 - x, y),
    "mirror_y": lambda x, y, n: (x, n + 1 - y),
    "transpose": lambda x, y, n: (y, x),
    "anti_transpose": lambda x, y, n: (n + 1 - y, n + 1 - x),
}

SYMMETRIES = tuple(_SYMMETRY_FUNCS)


def transform_square(square: Square, name: str, n: int) -> Square:
    require_in_board(square, n)
    x, y = square
    return _SYMMETRY_FUNCS[name](x, y, n)


def transform_placement(placement: Placement, name: str) -> Placement:
    n = placement.n
    fn = _SYMMETRY_FUNCS[name]
    return Placement(n, frozenset(fn(x, y, n) for x, y in placement.queens))


def canonical_form(placement: Placement) -> Placement:
    """The lexicographically least of the eight dihedral images.

    Images are compared as sorted square tuples, so equal placements up to
    symmetry canonicalize identically.
    """
    best = None
    for name in SYMMETRIES:
        image = transform_placement(placement, name)
        key = tuple(image.sorted_squares())
        if best is None or key < best[0]:
            best = (key, image)
    assert best is not None
    return best[1]
