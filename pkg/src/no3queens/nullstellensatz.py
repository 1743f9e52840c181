"""Line-product certificates refuting saturation of undersized placements.

For a no-3 placement with fewer queens than the proven minimum size bound,
this module assembles a multiset of board lines in three groups:

  type 1: every line already holding two queens (the defined lines),
  type 2: one helper line through each isolated queen (a queen on no
          defined line), slopes rotating through 0, +1, -1, infinity,
  type 3: padding lines with off-board offsets, pairwise distinct, used to
          reach a fixed per-slope target count.

If the placement were good, the product f of the corresponding linear forms
would vanish on the whole board: occupied squares lie on a type 1 or type 2
line, and empty squares lie on some defined line.  The targets are chosen
so that a specific monomial of total degree deg f has nonzero coefficient,
and the Combinatorial Nullstellensatz then yields a grid point where f does
not vanish.  Such a point is an empty square on no defined line, hence an
addable square, refuting saturation.

Targets per slope and the certified monomial (t1, t2), writing n = 4k + r
and q' for the number of isolated queens:

    r = 1:            (2k, 2k, 2k, 2k)            x^(4k)   y^(4k)
    r = 0, q' != 1:   (2k-1, ...)                 x^(4k-1) y^(4k-3)
    r = 0, q' == 1:   slope-inf 2k, others 2k-1   x^(4k-2) y^(4k-1)
    r in {2, 3}, q' != 1: (2k, 2k, 2k, 2k)        x^(4k)   y^(4k)
    r in {2, 3}, q' == 1: slope-inf 2k+1, else 2k x^(4k+1) y^(4k)

In the q' == 1 subcases the single type 2 line takes slope infinity, which
is what keeps the per-slope counts within target.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .geometry import (
    SLOPES,
    InvalidPlacementError,
    Line,
    Placement,
    Square,
    lines_through,
)
from .polynomial import SparseBivariatePoly
from .search import lower_bound
from .verify import LineCounts, find_three_in_line


class BoundNotApplicableError(ValueError):
    """The placement does not meet the certificate's size precondition."""


class PlannerError(RuntimeError):
    """The line plan violated one of its own guarantees; a defect, not an input error."""


ROUND_ROBIN_SLOPES = ("H", "D", "A", "V")  # slopes 0, +1, -1, infinity


def defined_lines(placement: Placement) -> frozenset[Line]:
    """Lines holding at least two queens."""
    return frozenset(LineCounts(placement).lines_with_at_least(2))


def isolated_queens(placement: Placement) -> frozenset[Square]:
    """Queens lying on no defined line."""
    defined = defined_lines(placement)
    return frozenset(
        sq for sq in placement.queens
        if not any(line in defined for line in lines_through(sq, placement.n))
    )


def per_slope_line_bound(max_queens: int, isolated_count: int) -> int:
    """Most type 1 plus type 2 lines any single slope can receive.

    Defined lines of one slope are disjoint and hold two queens each, none
    of them isolated; helper lines rotate across the four slopes.
    """
    return (max_queens - isolated_count) // 2 + ceil(isolated_count / 4)


def line_factor(line: Line) -> SparseBivariatePoly:
    """The linear form vanishing exactly on the line."""
    slope, off = line
    if slope == "H":
        return SparseBivariatePoly({(0, 1): 1, (0, 0): -off})
    if slope == "V":
        return SparseBivariatePoly({(1, 0): 1, (0, 0): -off})
    if slope == "D":
        return SparseBivariatePoly({(1, 0): 1, (0, 1): -1, (0, 0): -off})
    if slope == "A":
        return SparseBivariatePoly({(1, 0): 1, (0, 1): 1, (0, 0): -off})
    raise ValueError(f"unknown slope {slope!r}")


def line_value(line: Line, x: int, y: int) -> int:
    slope, off = line
    if slope == "H":
        return y - off
    if slope == "V":
        return x - off
    if slope == "D":
        return x - y - off
    if slope == "A":
        return x + y - off
    raise ValueError(f"unknown slope {slope!r}")


def line_polynomial(lines) -> SparseBivariatePoly:
    """Exact product of the linear forms of the given lines (1 if empty)."""
    poly = SparseBivariatePoly.one()
    for line in lines:
        poly = poly * line_factor(line)
    return poly


@dataclass(frozen=True)
class LinePlan:
    n: int
    q: int
    q_prime: int
    type1: tuple[Line, ...]
    type2: tuple[tuple[Line, Square], ...]
    type3: tuple[Line, ...]
    targets: dict
    monomial: tuple[int, int]

    def lines(self) -> list[Line]:
        return list(self.type1) + [line for line, _ in self.type2] + list(self.type3)


@dataclass(frozen=True)
class CnCertificate:
    """A refutation of goodness: nonzero coefficient plus non-vanishing point.

    The witness square is unoccupied, lies on no plan line, and in
    particular sits on no line with two queens, so it is addable.
    """

    n: int
    q: int
    q_prime: int
    plan: LinePlan
    coefficient: int
    witness: Square


def _targets_and_monomial(n: int, q_prime: int) -> tuple[dict, tuple[int, int]]:
    k, r = divmod(n, 4)
    if r == 1:
        per = {"H": 2 * k, "V": 2 * k, "D": 2 * k, "A": 2 * k}
        monomial = (4 * k, 4 * k)
    elif r == 0:
        if q_prime == 1:
            per = {"H": 2 * k - 1, "V": 2 * k, "D": 2 * k - 1, "A": 2 * k - 1}
            monomial = (4 * k - 2, 4 * k - 1)
        else:
            per = {"H": 2 * k - 1, "V": 2 * k - 1, "D": 2 * k - 1, "A": 2 * k - 1}
            monomial = (4 * k - 1, 4 * k - 3)
    else:  # r in (2, 3)
        if q_prime == 1:
            per = {"H": 2 * k, "V": 2 * k + 1, "D": 2 * k, "A": 2 * k}
            monomial = (4 * k + 1, 4 * k)
        else:
            per = {"H": 2 * k, "V": 2 * k, "D": 2 * k, "A": 2 * k}
            monomial = (4 * k, 4 * k)
    return per, monomial


def _padding_offsets(slope: str, n: int, count: int) -> list[int]:
    # offsets past the on-board range never collide with type 1 or type 2
    if slope in ("H", "V"):
        start = n + 1
    elif slope == "D":
        start = n
    else:
        start = 2 * n + 1
    return list(range(start, start + count))


def _build_plan(placement: Placement) -> tuple[LinePlan, SparseBivariatePoly]:
    n = placement.n
    if find_three_in_line(placement) is not None:
        raise InvalidPlacementError("placement has three queens in a line")
    if n < 2:
        raise BoundNotApplicableError(f"certificates require board side >= 2, got {n}")
    bound = lower_bound(n)
    if placement.q > bound - 1:
        raise BoundNotApplicableError(
            f"certificates cover at most {bound - 1} queens on B_{n}, "
            f"got {placement.q}")

    type1 = sorted(defined_lines(placement),
                   key=lambda line: (SLOPES.index(line.slope), line.offset))
    isolated = sorted(isolated_queens(placement))
    q_prime = len(isolated)
    targets, monomial = _targets_and_monomial(n, q_prime)

    type2: list[tuple[Line, Square]] = []
    if q_prime == 1 and n % 4 != 1:
        x, y = isolated[0]
        type2.append((Line("V", x), isolated[0]))
    else:
        for i, (x, y) in enumerate(isolated):
            slope = ROUND_ROBIN_SLOPES[i % 4]
            offset = {"H": y, "V": x, "D": x - y, "A": x + y}[slope]
            type2.append((Line(slope, offset), (x, y)))

    tally = {slope: 0 for slope in SLOPES}
    for line in type1:
        tally[line.slope] += 1
    for line, _ in type2:
        tally[line.slope] += 1
    for slope in SLOPES:
        if tally[slope] > targets[slope]:
            raise PlannerError(
                f"slope {slope} holds {tally[slope]} lines, above its "
                f"target {targets[slope]} (n={n}, q={placement.q}, q'={q_prime})")

    type3: list[Line] = []
    for slope in SLOPES:
        for offset in _padding_offsets(slope, n, targets[slope] - tally[slope]):
            type3.append(Line(slope, offset))

    plan = LinePlan(n=n, q=placement.q, q_prime=q_prime,
                    type1=tuple(type1), type2=tuple(type2), type3=tuple(type3),
                    targets=dict(targets), monomial=monomial)

    lines = plan.lines()
    if len(set(lines)) != len(lines):
        raise PlannerError("plan lines are not pairwise distinct")
    poly = line_polynomial(lines)
    if poly.coefficient(monomial) == 0:
        raise PlannerError(
            f"certified monomial {monomial} has zero coefficient "
            f"(n={n}, q={placement.q}, q'={q_prime})")
    return plan, poly


def plan_line_set(placement: Placement) -> LinePlan:
    """The three-group line plan for a placement below the size bound.

    The returned plan satisfies: every defined line appears in type 1, the
    per-slope counts equal the targets, all lines are distinct, and the
    certified monomial has nonzero coefficient in the product polynomial.
    """
    plan, _ = _build_plan(placement)
    return plan


def refute_goodness(placement: Placement) -> CnCertificate:
    """Certificate that a below-bound no-3 placement is not good.

    Finds the lexicographically least grid point where the plan product
    does not vanish.  The Combinatorial Nullstellensatz guarantees one
    exists because the certified exponents are both below n.
    """
    plan, poly = _build_plan(placement)
    lines = plan.lines()
    n = placement.n

    witness = None
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            value = 1
            for line in lines:
                value *= line_value(line, x, y)
                if value == 0:
                    break
            if value != 0:
                witness = (x, y)
                break
        if witness is not None:
            break
    if witness is None:
        raise PlannerError("product vanishes on the whole board; plan is defective")

    # defensive: the certificate's own guarantees, cheap to confirm
    if witness in placement.queens:
        raise PlannerError(f"witness {witness} is occupied")
    for line in plan.type1:
        if line_value(line, *witness) == 0:
            raise PlannerError(f"witness {witness} lies on defined line {line}")

    return CnCertificate(n=n, q=placement.q, q_prime=plan.q_prime, plan=plan,
                         coefficient=poly.coefficient(plan.monomial),
                         witness=witness)
