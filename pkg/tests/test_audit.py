import random

import pytest

from no3queens import (
    InvalidPlacementError,
    Placement,
    SYMMETRIES,
    audit,
    solve_min_good,
    transform_placement,
)

import oracles


def test_full_b2_report():
    report = audit(Placement(2, [(1, 1), (1, 2), (2, 1), (2, 2)]))
    assert report.good
    assert report.u_size == 0 and report.q_dd == 0
    assert report.col_count == 0 and report.row_count == 0
    assert report.col_min is None and report.row_max is None
    assert not report.rotated
    assert report.degenerate
    assert report.degenerate_bound_holds is True
    assert report.bound_holds is None
    assert report.even_branch == "q_dd=0"


def test_single_queen_b3_report():
    report = audit(Placement(3, [(1, 1)]))
    assert not report.good
    assert report.u_size == 9 and report.q_dd == 1
    assert report.col_indices == (1, 2, 3)
    assert report.row_indices == (1, 2, 3)
    assert report.col_min == 1 and report.col_max == 3
    assert not report.rotated
    assert report.bound_holds is None
    assert report.degenerate_bound_holds is None
    assert report.even_branch is None
    assert report.inequality_lhs == 2 * 3 - 2 - 1
    assert report.inequality_rhs_chain == 2 * 3 - 1 - 2


def test_single_queen_b1_degenerate_good():
    report = audit(Placement(1, [(1, 1)]))
    assert report.good
    assert report.degenerate
    assert report.degenerate_bound_holds is True


def test_frame_rotation_swaps_spans():
    p = Placement(4, [(1, 1), (1, 2), (2, 3), (2, 4), (3, 1), (3, 3)])
    report = audit(p)
    assert report.rotated
    assert report.col_indices == (2, 4)
    assert report.row_indices == (1,)
    assert report.u_size == 2
    assert report.q_dd == 0
    # spans now satisfy the frame convention
    assert report.col_max - report.col_min >= report.row_max - report.row_min


def test_rotation_preserves_frame_free_quantities():
    rng = random.Random(40351)
    for _ in range(150):
        n = rng.randint(1, 6)
        p = oracles.random_no_three_placement(rng, n, 8)
        base = audit(p)
        for name in SYMMETRIES:
            image = audit(transform_placement(p, name))
            assert image.q_dd == base.q_dd
            assert image.u_size == base.u_size
            assert image.good == base.good
            assert {image.col_count, image.row_count} \
                == {base.col_count, base.row_count}


def test_three_in_line_rejected():
    with pytest.raises(InvalidPlacementError):
        audit(Placement(3, [(1, 1), (2, 2), (3, 3)]))


def test_defined_line_slices_partition_the_board():
    rng = random.Random(60601)
    for _ in range(100):
        n = rng.randint(1, 6)
        p = oracles.random_no_three_placement(rng, n, 8)
        report = audit(p)
        # U is a grid: undefined columns x undefined rows
        assert report.u_size == report.col_count * report.row_count


def test_bounds_hold_on_solver_witnesses():
    for n in range(1, 7):
        witness = solve_min_good(n).witness
        report = audit(witness)
        assert report.good
        if report.degenerate:
            assert report.degenerate_bound_holds is True, (n, report)
        else:
            assert report.bound_holds is True, (n, report)


def test_even_branch_label():
    for n, squares in [(2, [(1, 1)]), (4, [(2, 2), (3, 3)])]:
        report = audit(Placement(n, squares))
        assert report.even_branch in ("q_dd=0", "q_dd>0")
    report = audit(Placement(5, [(1, 1)]))
    assert report.even_branch is None


def test_chain_values_follow_definitions():
    rng = random.Random(271828)
    for _ in range(120):
        n = rng.randint(2, 6)
        p = oracles.random_no_three_placement(rng, n, 8)
        report = audit(p)
        assert report.inequality_lhs == 2 * report.row_count - 2 - min(report.q_dd, 2)
        assert report.inequality_rhs_chain == 2 * n - p.q - 2
        assert report.degenerate == (report.col_count <= 1 or report.row_count <= 1)
