import itertools
from pathlib import Path

import pytest

from magicborders import (
    complement_base,
    magic_constant,
)
from magicborders import (
    BudgetExhausted,
    CanonicalBorder,
    InfeasibleCornersError,
    NoBorderError,
    OmegaKey,
    SearchBudget,
    count_omega,
    enumerate_omega,
    format_counts,
    search_first,
    seed_order4,
    verify_border,
)

FIXTURES = Path(__file__).parent / "fixtures"


def listing(n, v, w, budget=None):
    return list(enumerate_omega(OmegaKey(n, v, w), budget))


def test_same_parity_small_corners_yield_an_empty_complete_search():
    assert listing(4, 1, 3) == []


def test_listing_contains_the_seed_borders():
    found = {(x.b_set, x.c_set) for x in listing(4, 1, 2)}
    assert (tuple(sorted([34, 33, 32, 9])), tuple(sorted([6, 30, 29, 10]))) in found
    found = {(x.b_set, x.c_set) for x in listing(4, 9, 10)}
    assert (tuple(sorted([1, 32, 30, 29])), tuple(sorted([2, 34, 33, 6]))) in found


def test_every_emitted_border_passes_verification():
    for (v, w) in [(1, 2), (2, 5), (9, 10), (3, 8)]:
        for border in listing(4, v, w):
            assert verify_border(border.to_plan()).valid


def test_emission_is_deterministic():
    assert listing(4, 5, 8) == listing(4, 5, 8)


def test_counts_match_the_frozen_fixture():
    frozen = {}
    for line in (FIXTURES / "omega4_counts.txt").read_text().splitlines():
        v, w, count = (int(x) for x in line.split())
        frozen[(v, w)] = count
    counts = count_omega(4)
    assert counts == frozen
    assert format_counts(counts).splitlines()[0] == "1 2 2"


def test_counts_respect_the_corner_swap_symmetry():
    counts = count_omega(4)
    for (v, w), value in counts.items():
        assert counts[(w, v)] == value


def test_counts_respect_the_transpose_symmetry():
    # swapping a corner for its complement mirrors the border across the
    # main diagonal, so the counts agree
    a = len(listing(4, 1, 2))
    b = len(listing(4, 1, 35))  # 35 = complement of 2 at inner order 4
    assert a == b == 2


def test_count_omega_covers_every_distinct_small_pair():
    counts = count_omega(4)
    assert len(counts) == 10 * 9
    assert all((v % 2 != w % 2) == (k > 0) for (v, w), k in counts.items())


def test_search_first_finds_verified_borders():
    for key in (OmegaKey(6, 1, 2), OmegaKey(4, 5, 6)):
        border = search_first(key)
        assert verify_border(border.to_plan()).valid
        assert (border.v, border.w) == (key.v, key.w)


def test_search_first_rejects_infeasible_even_corners():
    with pytest.raises(InfeasibleCornersError):
        search_first(OmegaKey(4, 2, 4))


def test_search_first_reports_odd_order_empty_searches():
    # (1, 2) has opposite parity yet no order-3 border exists: the even-order
    # parity rule does not transfer to odd orders
    with pytest.raises(NoBorderError):
        search_first(OmegaKey(3, 1, 2))


def test_odd_orders_allow_same_parity_corners():
    border = search_first(OmegaKey(3, 1, 3))
    assert verify_border(border.to_plan()).valid


def test_budget_exhaustion_is_distinct_from_empty_completion():
    # an empty complete search returns normally...
    assert listing(4, 1, 3, SearchBudget(max_nodes=10**6)) == []
    # ...while a starved search raises
    with pytest.raises(BudgetExhausted):
        listing(4, 1, 2, SearchBudget(max_nodes=3))


def test_solution_limit_ends_the_stream_normally():
    only_two = listing(4, 2, 5, SearchBudget(max_solutions=2))
    assert len(only_two) == 2


def test_key_validation():
    with pytest.raises(ValueError):
        listing(4, 1, 1)
    with pytest.raises(ValueError):
        listing(4, 1, 36)  # complementary corners share a diagram row
    with pytest.raises(ValueError):
        listing(4, 1, 11)  # pool gap
    with pytest.raises(ValueError):
        count_omega(4, SearchBudget(max_solutions=5))


def test_canonical_border_round_trip():
    border = search_first(OmegaKey(4, 1, 2))
    again = CanonicalBorder.from_plan(border.to_plan())
    assert again == border


def test_ordered_variant_count_is_a_clearly_derived_figure():
    from magicborders import ordered_variant_count

    assert ordered_variant_count(1, 4) == 24 * 24
    assert ordered_variant_count(2, 3) == 2 * 36


def brute_force_borders(n, v, w):
    # independent oracle: try every side assignment and every b/c split
    c = complement_base(n)
    target = magic_constant(n + 2)
    corner_rows = {v if v <= 2 * n + 2 else c - v, w if w <= 2 * n + 2 else c - w}
    rows = [r for r in range(1, 2 * n + 3) if r not in corner_rows]
    found = set()
    for sides in itertools.product((0, 1), repeat=len(rows)):
        values = [r if side == 0 else c - r for r, side in zip(rows, sides)]
        whole = sum(values)
        for picked in itertools.combinations(range(len(rows)), n):
            b_sum = sum(values[i] for i in picked)
            if v + b_sum + w != target:
                continue
            if v + (whole - b_sum) + (c - w) != target:
                continue
            chosen = set(picked)
            found.add(
                (
                    tuple(sorted(values[i] for i in picked)),
                    tuple(sorted(values[i] for i in range(len(rows)) if i not in chosen)),
                )
            )
    return found


@pytest.mark.parametrize(
    "n,v,w",
    [(3, 1, 3), (3, 2, 8), (4, 1, 2), (4, 2, 5), (4, 27, 2), (4, 36, 33)],
)
def test_engine_matches_an_independent_brute_force(n, v, w):
    expected = brute_force_borders(n, v, w)
    got = {(x.b_set, x.c_set) for x in listing(n, v, w)}
    assert got == expected


def test_constructions_appear_in_the_exhaustive_listing():
    plan = seed_order4(1, 2)
    assert CanonicalBorder.from_plan(plan) in set(listing(4, 1, 2))
