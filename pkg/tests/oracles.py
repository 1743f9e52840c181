"""Slow reference implementations the real modules are checked against.

Everything here favors obviousness over speed.  Collinearity is tested on
explicit coordinate equalities over all 3-subsets, addability by direct
re-checks, and exhaustive questions by enumerating every subset of the
board.
"""

import itertools

from no3queens import Placement


def three_share_a_line(a, b, c):
    """True when one row, column, diagonal, or antidiagonal holds all three."""
    return (a[0] == b[0] == c[0]
            or a[1] == b[1] == c[1]
            or a[0] - a[1] == b[0] - b[1] == c[0] - c[1]
            or a[0] + a[1] == b[0] + b[1] == c[0] + c[1])


def brute_has_three(squares):
    return any(three_share_a_line(*trip)
               for trip in itertools.combinations(sorted(squares), 3))


def brute_addable(n, squares):
    occupied = set(squares)
    out = set()
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if (x, y) in occupied:
                continue
            if not brute_has_three(occupied | {(x, y)}):
                out.add((x, y))
    return frozenset(out)


def brute_is_good(n, squares):
    return not brute_has_three(squares) and not brute_addable(n, squares)


def brute_attacked_count(n, square):
    """Squares sharing a row, column, diagonal, or antidiagonal with square."""
    x0, y0 = square
    total = 0
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if (x, y) == (x0, y0):
                continue
            if x == x0 or y == y0 or x - y == x0 - y0 or x + y == x0 + y0:
                total += 1
    return total


def all_subsets(n, max_size=None):
    board = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    top = len(board) if max_size is None else min(max_size, len(board))
    for size in range(top + 1):
        for combo in itertools.combinations(board, size):
            yield frozenset(combo)


def brute_min_good(n):
    """Smallest good size on B_n by trying every subset, smallest first."""
    for squares in all_subsets(n):
        if brute_is_good(n, squares):
            return len(squares), squares
    raise AssertionError(f"no good placement found on B_{n}")


def no_three_placements(n, max_size):
    """Every placement of at most max_size queens with no three in a line."""
    for squares in all_subsets(n, max_size):
        if not brute_has_three(squares):
            yield Placement(n, squares)


# Dihedral maps written out longhand, independent of the geometry module.
def dihedral_images(n, squares):
    points = sorted(squares)
    yield [(x, y) for x, y in points]
    yield [(n + 1 - x, y) for x, y in points]
    yield [(x, n + 1 - y) for x, y in points]
    yield [(n + 1 - x, n + 1 - y) for x, y in points]
    yield [(y, x) for x, y in points]
    yield [(n + 1 - y, x) for x, y in points]
    yield [(y, n + 1 - x) for x, y in points]
    yield [(n + 1 - y, n + 1 - x) for x, y in points]


def random_placement(rng, n, max_queens):
    board = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    q = rng.randint(0, min(max_queens, len(board)))
    return Placement(n, frozenset(rng.sample(board, q)))


def random_no_three_placement(rng, n, max_queens):
    """Greedy: shuffle the board, keep squares that do not form a triple."""
    board = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    rng.shuffle(board)
    kept = []
    want = rng.randint(0, min(max_queens, len(board)))
    for square in board:
        if len(kept) == want:
            break
        if not any(three_share_a_line(a, b, square)
                   for a, b in itertools.combinations(kept, 2)):
            kept.append(square)
    return Placement(n, frozenset(kept))
