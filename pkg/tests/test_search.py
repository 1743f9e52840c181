import os

import pytest

from no3queens import (
    BoardRangeError,
    InconclusiveSearchError,
    Placement,
    SearchConfig,
    exists_good_of_size,
    greedy_good_placement,
    is_good,
    lower_bound,
    naive_lower_bound,
    resolve_worker_count,
    solve_min_good,
)
from no3queens.search import WORKER_COUNT_ENV, _exists_with_stats

import oracles


def test_lower_bound_values():
    expected = {1: 1, 2: 2, 3: 2, 4: 4, 5: 5, 6: 6, 7: 6,
                8: 8, 9: 9, 10: 10, 11: 10, 12: 12}
    for n, value in expected.items():
        assert lower_bound(n) == value
    with pytest.raises(BoardRangeError):
        lower_bound(0)


def test_naive_lower_bound_values():
    assert [naive_lower_bound(n) for n in range(1, 9)] == [1, 1, 2, 2, 3, 3, 4, 4]


def test_bounds_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(k=1)
    with pytest.raises(ValueError):
        SearchConfig(worker_count=0)
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)


def test_exists_matches_enumeration_small_boards():
    # the oracle enumerates every subset; the search must agree for every
    # size and with every prune/symmetry combination
    for n in (1, 2, 3):
        by_size = {}
        for squares in oracles.all_subsets(n):
            if oracles.brute_is_good(n, squares):
                by_size.setdefault(len(squares), squares)
        for q in range(0, n * n + 1):
            expect = q in by_size
            for symmetry in (True, False):
                for prune in (True, False):
                    config = SearchConfig(symmetry_reduction=symmetry,
                                          coverage_prune=prune)
                    witness = exists_good_of_size(n, q, config)
                    assert (witness is not None) == expect, (n, q, symmetry, prune)
                    if witness is not None:
                        assert witness.q == q
                        assert is_good(witness)


def test_exists_matches_enumeration_b4():
    # library verifier as the reference here; it is itself oracle-checked
    good_sizes = set()
    for squares in oracles.all_subsets(4, 6):
        if not squares or len(squares) in good_sizes:
            continue
        if is_good(Placement(4, squares)):
            good_sizes.add(len(squares))
    for q in range(0, 7):
        for symmetry in (True, False):
            config = SearchConfig(symmetry_reduction=symmetry)
            witness = exists_good_of_size(4, q, config)
            assert (witness is not None) == (q in good_sizes), (q, symmetry)


def test_solve_known_minimums():
    for n, expect in [(1, 1), (2, 4), (3, 4), (4, 4), (5, 6), (6, 6)]:
        result = solve_min_good(n)
        assert result.minimum == expect
        assert result.witness.q == expect
        assert is_good(result.witness)
        assert result.n == n and result.k == 3


def test_solve_matches_subset_enumeration():
    for n in (1, 2, 3):
        minimum, _ = oracles.brute_min_good(n)
        assert solve_min_good(n).minimum == minimum


def test_minimality_no_smaller_good_exists():
    for n in (4, 5):
        result = solve_min_good(n)
        for q in range(result.minimum):
            assert exists_good_of_size(n, q) is None


def test_worker_counts_agree():
    for workers in (1, 2, 3):
        result = solve_min_good(5, SearchConfig(worker_count=workers))
        assert result.minimum == 6
        assert is_good(result.witness)


def test_pruning_and_symmetry_do_not_change_answers():
    for n in (4, 5, 6):
        reference = solve_min_good(n).minimum
        for symmetry in (True, False):
            for prune in (True, False):
                config = SearchConfig(symmetry_reduction=symmetry,
                                      coverage_prune=prune)
                assert solve_min_good(n, config).minimum == reference


def test_budget_exhaustion_reports_bracket():
    config = SearchConfig(node_budget=40)
    with pytest.raises(InconclusiveSearchError) as info:
        solve_min_good(6, config)
    exc = info.value
    assert exc.bracket is not None
    lo, hi = exc.bracket
    assert lower_bound(6) <= lo <= hi
    assert hi == greedy_good_placement(6).q
    assert exc.nodes <= 40 + 1


def test_budget_exhaustion_on_exists():
    with pytest.raises(InconclusiveSearchError) as info:
        exists_good_of_size(6, 6, SearchConfig(node_budget=10))
    assert info.value.bracket is None
    assert info.value.q == 6


def test_budget_large_enough_changes_nothing():
    result = solve_min_good(5, SearchConfig(node_budget=10_000_000))
    assert result.minimum == 6


def test_greedy_placements_are_good():
    for n in range(1, 9):
        p = greedy_good_placement(n)
        assert p.n == n
        assert is_good(p), n


def test_greedy_big_board_is_fast_and_good():
    p = greedy_good_placement(20)
    assert is_good(p)


def test_pigeonhole_rejects_oversized_counts():
    # more than 2n queens would force three into one column
    witness, stats = _exists_with_stats(3, 7, SearchConfig())
    assert witness is None
    assert stats.nodes == 0
    with pytest.raises(BoardRangeError):
        exists_good_of_size(2, 5)


def test_empty_size_never_good():
    for n in (1, 2, 3):
        assert exists_good_of_size(n, 0) is None


def test_stats_are_populated():
    result = solve_min_good(4)
    assert result.stats.nodes > 0
    assert result.stats.elapsed >= 0
    assert result.stats.workers == 1
    assert result.stats.tasks > 0


def test_worker_env_cap(monkeypatch):
    monkeypatch.setenv(WORKER_COUNT_ENV, "2")
    assert resolve_worker_count(8) == 2
    assert resolve_worker_count(1) == 1
    monkeypatch.setenv(WORKER_COUNT_ENV, "not-a-number")
    assert resolve_worker_count(8) == 8
    monkeypatch.setenv(WORKER_COUNT_ENV, "0")
    assert resolve_worker_count(8) == 8
    monkeypatch.delenv(WORKER_COUNT_ENV)
    assert resolve_worker_count(3) == 3


def test_solver_witnesses_match_oracle_goodness():
    for n in (2, 3, 4, 5):
        witness = solve_min_good(n).witness
        assert oracles.brute_is_good(n, witness.queens)
