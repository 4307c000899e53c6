"""Build complete bordered magic squares by wrapping borders around a core.

A square of order N wraps the order N-2 square, its entries shifted up by
2(N-2)+2 so they land exactly between the border pool's small and large
halves.  Recursion bottoms out at the classical order-3 and order-4
squares.
"""

from __future__ import annotations

from typing import Sequence

from .construct import build_border
from .core import check_inner_order, complement_base
from .verify import BorderFrame, BorderPlan, verify_border

_BASE_3 = ((2, 7, 6), (9, 5, 1), (4, 3, 8))
_BASE_4 = ((16, 3, 2, 13), (5, 10, 11, 8), (9, 6, 7, 12), (4, 15, 14, 1))


def base_square(order: int) -> list[list[int]]:
    """Fixed classical core squares for the two recursion bases."""
    if order == 3:
        return [list(row) for row in _BASE_3]
    if order == 4:
        return [list(row) for row in _BASE_4]
    raise ValueError(f"base squares exist only for orders 3 and 4, got {order!r}")


def render_frame(plan: BorderPlan) -> BorderFrame:
    """Lay a valid plan out as an (n+2) x (n+2) frame with an empty interior."""
    report = verify_border(plan)
    if not report.valid:
        raise ValueError(
            "cannot render an invalid plan: " + "; ".join(str(v) for v in report.violations)
        )
    n = plan.n
    order = n + 2
    c_base = complement_base(n)
    cells: list[list[int | None]] = [[None] * order for _ in range(order)]
    cells[0][0] = plan.v
    cells[0][order - 1] = plan.w
    cells[order - 1][0] = c_base - plan.w
    cells[order - 1][order - 1] = c_base - plan.v
    for j, value in enumerate(plan.b, start=1):
        cells[0][j] = value
        cells[order - 1][j] = c_base - value
    for i, value in enumerate(plan.c, start=1):
        cells[i][0] = value
        cells[i][order - 1] = c_base - value
    return BorderFrame(n=n, cells=tuple(tuple(row) for row in cells))


def plan_from_frame(frame: BorderFrame) -> BorderPlan:
    """Read the plan back off a frame's top row and left column."""
    order = frame.order
    cells = frame.cells
    return BorderPlan(
        n=frame.n,
        v=cells[0][0],
        w=cells[0][order - 1],
        b=tuple(cells[0][1 : order - 1]),
        c=tuple(cells[i][0] for i in range(1, order - 1)),
    )


def build_square(order: int) -> list[list[int]]:
    """A bordered magic square of the given order; deterministic in the order."""
    if not isinstance(order, int) or isinstance(order, bool) or order < 3:
        raise ValueError(
            f"bordered magic squares are built for orders >= 3, got {order!r}"
        )
    if order <= 4:
        return base_square(order)
    inner_order = order - 2
    check_inner_order(inner_order)
    inner = build_square(inner_order)
    shift = 2 * inner_order + 2
    frame = render_frame(build_border(inner_order))
    cells = [list(row) for row in frame.cells]
    for i, row in enumerate(inner, start=1):
        for j, value in enumerate(row, start=1):
            cells[i][j] = value + shift
    return cells


def layer_plans(cells: Sequence[Sequence[int]]) -> list[BorderPlan]:
    """Plans of every proper ring of a bordered square, outermost first.

    Each ring's values are normalised back into its own border pool by
    subtracting the accumulated shift, so the plans can be verified
    independently.
    """
    order = len(cells)
    base = 3 if order % 2 else 4
    plans = []
    m = order
    while m >= base + 2:
        k = (order - m) // 2
        shift = 2 * k * (order - k)  # values below the pool of the order-m ring
        n = m - 2
        top = [cells[k][j] - shift for j in range(k, k + m)]
        left = [cells[i][k] - shift for i in range(k + 1, k + m - 1)]
        plans.append(
            BorderPlan(n=n, v=top[0], w=top[-1], b=tuple(top[1:-1]), c=tuple(left))
        )
        m -= 2
    return plans
