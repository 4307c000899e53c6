"""Integer primitives shared by every other module.

A border of inner order n lives in an (n+2) x (n+2) frame and uses the
value pool {1..2n+2} union {n^2+2n+3..(n+2)^2}.  Two values x, y are
complementary when x + y = (n+2)^2 + 1; opposite border cells must hold
complementary values.  Arranging the pool as 2n+2 rows of a two-column
diagram (row i holds i on the left and its complement on the right)
turns border construction into picking one side per row.
"""

from __future__ import annotations

from dataclasses import dataclass

LEFT = "L"
RIGHT = "R"


class InfeasibleCornersError(ValueError):
    """The requested corner pair provably admits no magic border."""


def check_inner_order(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise ValueError(f"inner order must be an integer >= 3, got {n!r}")
    return n


def magic_constant(order: int) -> int:
    """Common line sum of an order-N square holding 1..N^2."""
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    return order * (order * order + 1) // 2


def complement_base(n: int) -> int:
    """Sum of two opposite cells in the frame around an inner order-n square."""
    check_inner_order(n)
    return (n + 2) * (n + 2) + 1


def pool_bounds(n: int) -> tuple[int, int, int, int]:
    """Inclusive bounds (small_lo, small_hi, large_lo, large_hi) of the pool."""
    check_inner_order(n)
    c = complement_base(n)
    return 1, 2 * n + 2, c - (2 * n + 2), c - 1


def in_pool(x: int, n: int) -> bool:
    s_lo, s_hi, l_lo, l_hi = pool_bounds(n)
    return s_lo <= x <= s_hi or l_lo <= x <= l_hi


def border_pool(n: int) -> frozenset[int]:
    """All 4n+4 values available to a border of inner order n."""
    s_lo, s_hi, l_lo, l_hi = pool_bounds(n)
    return frozenset(range(s_lo, s_hi + 1)) | frozenset(range(l_lo, l_hi + 1))


def _check_pool(x: int, n: int) -> None:
    if not in_pool(x, n):
        s_lo, s_hi, l_lo, l_hi = pool_bounds(n)
        raise ValueError(
            f"{x} is outside the border pool "
            f"{{{s_lo}..{s_hi}}} u {{{l_lo}..{l_hi}}} for inner order {n}"
        )


def complement(x: int, n: int) -> int:
    """The pool value opposite x; an involution on the pool."""
    _check_pool(x, n)
    return complement_base(n) - x


def is_small(x: int, n: int) -> bool:
    """True when x sits in the left column of the diagram (x <= 2n+2)."""
    _check_pool(x, n)
    return x <= 2 * n + 2


def row_of(x: int, n: int) -> int:
    """Diagram row of x: small values sit at row x, large at row C - x."""
    _check_pool(x, n)
    return x if x <= 2 * n + 2 else complement_base(n) - x


def side_of(x: int, n: int) -> str:
    return LEFT if is_small(x, n) else RIGHT


def d_value(x: int, y: int, n: int) -> int:
    """Deviation of the pair (x, y) from a complementary pair's sum.

    Equals row(x) - row(y) when x is a left value and y a right value.
    """
    _check_pool(x, n)
    _check_pool(y, n)
    return x + y - complement_base(n)


def d_corner(v: int, n: int) -> int:
    """Half-pair deviation of a lone corner value; defined for odd n only.

    Total on integers: callers enforce pool membership where it matters.
    """
    check_inner_order(n)
    if n % 2 == 0:
        raise ValueError(f"corner deviation requires an odd inner order, got {n}")
    return v - complement_base(n) // 2


@dataclass(frozen=True)
class DiagramRow:
    """One row of the two-column diagram: i on the left, C - i on the right."""

    index: int
    left_value: int
    right_value: int


def diagram_rows(n: int) -> tuple[DiagramRow, ...]:
    c = complement_base(n)
    return tuple(DiagramRow(i, i, c - i) for i in range(1, 2 * n + 3))
