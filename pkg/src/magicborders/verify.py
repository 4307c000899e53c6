"""Checks for border plans, frames and full squares.

All verifiers return a :class:`CheckReport` instead of raising: an
invalid candidate is an answer, not an error.  Violations are collected
exhaustively so callers can print a complete diagnosis.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from .core import (
    check_inner_order,
    complement_base,
    d_corner,
    d_value,
    in_pool,
    magic_constant,
)

if TYPE_CHECKING:  # pragma: no cover
    from .construct import PairingScheme


@dataclass(frozen=True)
class Violation:
    condition: str
    location: str
    expected: int | None = None
    actual: int | None = None

    def __str__(self) -> str:
        msg = f"{self.condition} at {self.location}"
        if self.expected is not None or self.actual is not None:
            msg += f": expected {self.expected}, got {self.actual}"
        return msg


@dataclass(frozen=True)
class CheckReport:
    valid: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "CheckReport":
        vs = tuple(violations)
        return cls(valid=not vs, violations=vs)


@dataclass(frozen=True)
class BorderPlan:
    """One magic border candidate: corners plus top-row and left-column values.

    ``v`` and ``w`` are the upper-left and upper-right corners, ``b`` the
    top-row interior (left to right) and ``c`` the left-column interior
    (top to bottom).  The opposite half of the frame is implied by
    complementation.  Any shape of candidate may be stored; validity is
    the business of :func:`verify_border`.
    """

    n: int
    v: int
    w: int
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))

    def values(self) -> tuple[int, ...]:
        """All 2n+2 chosen values (corners first, then b's, then c's)."""
        return (self.v, self.w) + self.b + self.c

    def key(self) -> tuple[int, int, int, tuple[int, ...], tuple[int, ...]]:
        """Order-insensitive identity: line order inside b and c is immaterial."""
        return (self.n, self.v, self.w, tuple(sorted(self.b)), tuple(sorted(self.c)))


@dataclass(frozen=True)
class BorderFrame:
    """An (n+2) x (n+2) grid holding only the border; inner cells are None."""

    n: int
    cells: tuple[tuple[int | None, ...], ...] = field(repr=False)

    @property
    def order(self) -> int:
        return self.n + 2


def verify_border(plan: BorderPlan) -> CheckReport:
    """Check the four magic-border conditions for a candidate plan.

    Valid means: b and c have n entries each, every value lies in the
    pool, the 2n+2 values are distinct and complement-free, and both the
    top row (v + sum(b) + w) and the left column (v + sum(c) + comp(w))
    sum to the magic constant of the full frame.
    """
    violations: list[Violation] = []
    n = plan.n
    try:
        check_inner_order(n)
    except ValueError:
        return CheckReport.from_violations(
            [Violation("inner-order", f"n={n!r}")]
        )
    c_base = complement_base(n)
    target = magic_constant(n + 2)

    if len(plan.b) != n:
        violations.append(Violation("shape", "b", expected=n, actual=len(plan.b)))
    if len(plan.c) != n:
        violations.append(Violation("shape", "c", expected=n, actual=len(plan.c)))

    values = plan.values()
    for value in values:
        if not isinstance(value, int) or not in_pool(value, n):
            violations.append(Violation("pool-membership", f"value {value}"))

    counts = Counter(values)
    for value, count in sorted(counts.items(), key=lambda kv: str(kv[0])):
        if count > 1:
            violations.append(
                Violation("duplicate-value", f"value {value}", expected=1, actual=count)
            )

    chosen = set(counts)
    for value in sorted(chosen, key=str):
        partner = c_base - value if isinstance(value, int) else None
        if partner is not None and partner in chosen and value < partner:
            violations.append(
                Violation("complement-clash", f"values {value} and {partner}")
            )

    row_sum = plan.v + sum(plan.b) + plan.w
    if row_sum != target:
        violations.append(
            Violation("row-sum", "top row", expected=target, actual=row_sum)
        )
    col_sum = plan.v + sum(plan.c) + (c_base - plan.w)
    if col_sum != target:
        violations.append(
            Violation("column-sum", "left column", expected=target, actual=col_sum)
        )
    return CheckReport.from_violations(violations)


def _required_cover(plan: BorderPlan) -> tuple[Counter, Counter]:
    """Multisets the beta and gamma pairings must cover, by parity of n."""
    if plan.n % 2 == 0:
        beta = Counter(plan.b) + Counter((plan.v, plan.w))
        gamma = Counter(plan.c)
    else:
        beta = Counter(plan.b) + Counter((plan.w,))
        gamma = Counter(plan.c) + Counter((complement_base(plan.n) - plan.w,))
    return beta, gamma


def verify_balance(plan: BorderPlan, pairing: "PairingScheme") -> CheckReport:
    """Check the pairing's deviation sums against the two balance targets.

    For even n the top-row pairing must cancel exactly (sum 0) and the
    column pairing must cancel the corner pair's deviation -d(v, comp(w)).
    For odd n both sides must cancel the lone-corner deviation -d_corner(v).
    A pairing that does not cover the plan's values is a usage error and
    raises ValueError rather than reporting violations.
    """
    n = check_inner_order(plan.n)
    beta_pairs = [(x, y) for x, y, label in pairing.pairs if label == "b"]
    gamma_pairs = [(x, y) for x, y, label in pairing.pairs if label == "c"]

    got_beta = Counter(x for pair in beta_pairs for x in pair)
    got_gamma = Counter(x for pair in gamma_pairs for x in pair)
    want_beta, want_gamma = _required_cover(plan)
    if got_beta != want_beta:
        raise ValueError(
            "beta pairing does not cover the plan's top-row values: "
            f"missing {sorted((want_beta - got_beta).elements())}, "
            f"extra {sorted((got_beta - want_beta).elements())}"
        )
    if got_gamma != want_gamma:
        raise ValueError(
            "gamma pairing does not cover the plan's left-column values: "
            f"missing {sorted((want_gamma - got_gamma).elements())}, "
            f"extra {sorted((got_gamma - want_gamma).elements())}"
        )

    beta_sum = sum(d_value(x, y, n) for x, y in beta_pairs)
    gamma_sum = sum(d_value(x, y, n) for x, y in gamma_pairs)
    if n % 2 == 0:
        beta_target = 0
        w_bar = complement_base(n) - plan.w
        gamma_target = -d_value(plan.v, w_bar, n)
    else:
        beta_target = -d_corner(plan.v, n)
        gamma_target = -d_corner(plan.v, n)

    violations = []
    if beta_sum != beta_target:
        violations.append(
            Violation("beta-sum", "top-row pairing", expected=beta_target, actual=beta_sum)
        )
    if gamma_sum != gamma_target:
        violations.append(
            Violation("gamma-sum", "column pairing", expected=gamma_target, actual=gamma_sum)
        )
    return CheckReport.from_violations(violations)


def _square_shape_violations(cells: Sequence[Sequence[int]]) -> list[Violation]:
    order = len(cells)
    violations = []
    if order == 0:
        violations.append(Violation("shape", "empty grid"))
        return violations
    for i, row in enumerate(cells):
        if len(row) != order:
            violations.append(
                Violation("shape", f"row {i}", expected=order, actual=len(row))
            )
    return violations


def verify_square(cells: Sequence[Sequence[int]]) -> CheckReport:
    """Check that cells form a magic square: a permutation of 1..N^2 with
    every row, column and both main diagonals summing to the magic constant."""
    violations = _square_shape_violations(cells)
    if violations:
        return CheckReport.from_violations(violations)
    order = len(cells)
    target = magic_constant(order)

    flat = [x for row in cells for x in row]
    if sorted(flat) != list(range(1, order * order + 1)):
        violations.append(
            Violation("not-permutation", f"cells are not 1..{order * order}")
        )
    for i, row in enumerate(cells):
        if sum(row) != target:
            violations.append(
                Violation("line-sum", f"row {i}", expected=target, actual=sum(row))
            )
    for j in range(order):
        col = sum(cells[i][j] for i in range(order))
        if col != target:
            violations.append(
                Violation("line-sum", f"column {j}", expected=target, actual=col)
            )
    diag = sum(cells[i][i] for i in range(order))
    if diag != target:
        violations.append(
            Violation("line-sum", "main diagonal", expected=target, actual=diag)
        )
    anti = sum(cells[i][order - 1 - i] for i in range(order))
    if anti != target:
        violations.append(
            Violation("line-sum", "anti diagonal", expected=target, actual=anti)
        )
    return CheckReport.from_violations(violations)


def verify_bordered(cells: Sequence[Sequence[int]]) -> CheckReport:
    """Check the concentric property on top of the plain magic conditions.

    Every concentric subsquare of order m (stepping down by 2 until order
    3 for odd N, 4 for even N) must have all rows, columns and both
    diagonals summing to m(N^2+1)/2, and within every proper ring the two
    cells opposite through the center must sum to N^2+1.
    """
    violations = _square_shape_violations(cells)
    if violations:
        return CheckReport.from_violations(violations)
    order = len(cells)

    flat = [x for row in cells for x in row]
    if sorted(flat) != list(range(1, order * order + 1)):
        violations.append(
            Violation("not-permutation", f"cells are not 1..{order * order}")
        )

    base = 3 if order % 2 else 4
    pair_sum = order * order + 1
    m = order
    while m >= base:
        k = (order - m) // 2
        line_target = m * pair_sum // 2
        rows = range(k, k + m)
        for i in rows:
            s = sum(cells[i][j] for j in rows)
            if s != line_target:
                violations.append(
                    Violation(
                        "subsquare-line-sum",
                        f"order {m} row {i}",
                        expected=line_target,
                        actual=s,
                    )
                )
        for j in rows:
            s = sum(cells[i][j] for i in rows)
            if s != line_target:
                violations.append(
                    Violation(
                        "subsquare-line-sum",
                        f"order {m} column {j}",
                        expected=line_target,
                        actual=s,
                    )
                )
        diag = sum(cells[k + t][k + t] for t in range(m))
        if diag != line_target:
            violations.append(
                Violation(
                    "subsquare-line-sum",
                    f"order {m} main diagonal",
                    expected=line_target,
                    actual=diag,
                )
            )
        anti = sum(cells[k + t][k + m - 1 - t] for t in range(m))
        if anti != line_target:
            violations.append(
                Violation(
                    "subsquare-line-sum",
                    f"order {m} anti diagonal",
                    expected=line_target,
                    actual=anti,
                )
            )
        if m >= base + 2:
            # each ring cell faces one partner: the far end of its column for
            # top/bottom cells, of its row for left/right cells, and the
            # diagonally opposite corner for corners
            lo, hi = k, k + m - 1
            facing = [((lo, lo), (hi, hi)), ((lo, hi), (hi, lo))]
            facing += [((lo, j), (hi, j)) for j in range(lo + 1, hi)]
            facing += [((i, lo), (i, hi)) for i in range(lo + 1, hi)]
            for (i1, j1), (i2, j2) in facing:
                total = cells[i1][j1] + cells[i2][j2]
                if total != pair_sum:
                    violations.append(
                        Violation(
                            "ring-complement",
                            f"cells ({i1},{j1}) and ({i2},{j2})",
                            expected=pair_sum,
                            actual=total,
                        )
                    )
        m -= 2
    return CheckReport.from_violations(violations)


def verify_frame(frame: BorderFrame) -> CheckReport:
    """Check a rendered frame: placement complementarity plus plan validity."""
    n = frame.n
    order = frame.order
    cells = frame.cells
    violations: list[Violation] = []
    if len(cells) != order or any(len(row) != order for row in cells):
        violations.append(Violation("shape", f"grid is not {order}x{order}"))
        return CheckReport.from_violations(violations)

    pair_sum = complement_base(n)
    for i in range(order):
        for j in range(order):
            on_border = i in (0, order - 1) or j in (0, order - 1)
            value = cells[i][j]
            if on_border:
                if value is None:
                    violations.append(Violation("missing-cell", f"cell ({i},{j})"))
            elif value is not None:
                violations.append(Violation("interior-not-empty", f"cell ({i},{j})"))
    if violations:
        return CheckReport.from_violations(violations)

    hi = order - 1
    facing = [((0, 0), (hi, hi)), ((0, hi), (hi, 0))]
    facing += [((0, j), (hi, j)) for j in range(1, hi)]
    facing += [((i, 0), (i, hi)) for i in range(1, hi)]
    for (i1, j1), (i2, j2) in facing:
        total = cells[i1][j1] + cells[i2][j2]
        if total != pair_sum:
            violations.append(
                Violation(
                    "opposite-complement",
                    f"cells ({i1},{j1}) and ({i2},{j2})",
                    expected=pair_sum,
                    actual=total,
                )
            )

    plan = BorderPlan(
        n=n,
        v=cells[0][0],
        w=cells[0][order - 1],
        b=tuple(cells[0][1 : order - 1]),
        c=tuple(cells[i][0] for i in range(1, order - 1)),
    )
    violations.extend(verify_border(plan).violations)
    return CheckReport.from_violations(violations)
