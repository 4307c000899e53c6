"""Exhaustive backtracking over the two-column diagram.

This is the slow, trustworthy side of the library: it finds every magic
border with given corners by deciding one diagram row at a time, and it
doubles as the oracle the constructive recipes are tested against.
Borders are reported at set level (order inside a line is immaterial).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterator

from .core import (
    InfeasibleCornersError,
    check_inner_order,
    complement_base,
    in_pool,
    magic_constant,
    row_of,
)
from .verify import BorderPlan


@dataclass(frozen=True)
class OmegaKey:
    """Corner assignment naming one set of magic borders: inner order n, upper corners v and w."""

    n: int
    v: int
    w: int


@dataclass(frozen=True)
class SearchBudget:
    """Limits on a search run; None means unlimited.

    Hitting the solution limit ends the stream normally (the caller asked
    for that many); hitting the node or time limit raises
    :class:`BudgetExhausted` because the search is then incomplete.
    """

    max_nodes: int | None = None
    max_solutions: int | None = None
    max_seconds: float | None = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "max_solutions", "max_seconds"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive or None, got {value!r}")


class BudgetExhausted(RuntimeError):
    """Search stopped before exploring the whole space."""


class NoBorderError(LookupError):
    """Search completed and proved that no border matches the request."""


@dataclass(frozen=True)
class CanonicalBorder:
    """A magic border up to reordering within its lines."""

    n: int
    v: int
    w: int
    b_set: tuple[int, ...]
    c_set: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b_set", tuple(sorted(self.b_set)))
        object.__setattr__(self, "c_set", tuple(sorted(self.c_set)))

    @classmethod
    def from_plan(cls, plan: BorderPlan) -> "CanonicalBorder":
        return cls(plan.n, plan.v, plan.w, tuple(sorted(plan.b)), tuple(sorted(plan.c)))

    def to_plan(self) -> BorderPlan:
        return BorderPlan(n=self.n, v=self.v, w=self.w, b=self.b_set, c=self.c_set)


class _BudgetState:
    __slots__ = ("max_nodes", "max_seconds", "nodes", "start")

    def __init__(self, budget: SearchBudget | None):
        self.max_nodes = budget.max_nodes if budget else None
        self.max_seconds = budget.max_seconds if budget else None
        self.nodes = 0
        self.start = time.monotonic()

    def on_node(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted(f"node limit {self.max_nodes} reached")
        if (
            self.max_seconds is not None
            and self.nodes % 1024 == 0
            and time.monotonic() - self.start > self.max_seconds
        ):
            raise BudgetExhausted(f"time limit {self.max_seconds}s reached")


def _check_key(key: OmegaKey) -> None:
    check_inner_order(key.n)
    for name, value in (("v", key.v), ("w", key.w)):
        if not in_pool(value, key.n):
            raise ValueError(f"corner {name}={value} is outside the pool for n={key.n}")
    if key.v == key.w:
        raise ValueError("corners must be distinct")
    if key.v + key.w == complement_base(key.n):
        raise ValueError("corners must not be complementary")


def _solutions(n: int, v: int, w: int, state: _BudgetState) -> Iterator[CanonicalBorder]:
    c_base = complement_base(n)
    target = magic_constant(n + 2)
    rem_b0 = target - v - w
    rem_c0 = target - v - (c_base - w)

    used = {row_of(v, n), row_of(w, n)}
    free = [r for r in range(1, 2 * n + 3) if r not in used]
    prefix = [0]
    for r in free:
        prefix.append(prefix[-1] + r)
    total = len(free)

    even = n % 2 == 0
    if even:
        # a line multiset of n+2 distinct pool values can only reach the
        # magic sum with exactly (n+2)/2 small members, which fixes how many
        # of the b's and c's may come from each diagram column
        half = (n + 2) // 2
        small_limit = 2 * n + 2
        need_bs0 = half - (v <= small_limit) - (w <= small_limit)
        need_cs0 = half - (v <= small_limit) - (c_base - w <= small_limit)
        if not (0 <= need_bs0 <= n and 0 <= need_cs0 <= n):
            return
    else:
        need_bs0 = need_cs0 = -1  # unconstrained

    sel_b: list[int] = []
    sel_c: list[int] = []

    def span_even(idx: int, k_small: int, k_large: int) -> tuple[int, int]:
        # reachable sums picking k_small left and k_large right values from
        # the remaining rows; extremes relax the disjointness of the picks
        lo = (
            prefix[idx + k_small]
            - prefix[idx]
            + k_large * c_base
            - (prefix[total] - prefix[total - k_large])
        )
        hi = (
            prefix[total]
            - prefix[total - k_small]
            + k_large * c_base
            - (prefix[idx + k_large] - prefix[idx])
        )
        return lo, hi

    def rec(
        idx: int, need_b: int, need_c: int, rem_b: int, rem_c: int,
        need_bs: int, need_cs: int,
    ) -> Iterator[CanonicalBorder]:
        state.on_node()
        if idx == total:
            if rem_b == 0 and rem_c == 0:
                yield CanonicalBorder(n, v, w, tuple(sel_b), tuple(sel_c))
            return
        if even:
            if need_bs < 0 or need_cs < 0:
                return
            if need_bs > need_b or need_cs > need_c:
                return
            if need_b:
                lo, hi = span_even(idx, need_bs, need_b - need_bs)
                if not lo <= rem_b <= hi:
                    return
            elif rem_b:
                return
            if need_c:
                lo, hi = span_even(idx, need_cs, need_c - need_cs)
                if not lo <= rem_c <= hi:
                    return
            elif rem_c:
                return
        else:
            # parity leaves the column split loose; bound with the k lowest
            # remaining rows, whose lefts are cheapest and rights dearest
            if need_b:
                lo = prefix[idx + need_b] - prefix[idx]
                if not lo <= rem_b <= need_b * c_base - lo:
                    return
            elif rem_b:
                return
            if need_c:
                lo = prefix[idx + need_c] - prefix[idx]
                if not lo <= rem_c <= need_c * c_base - lo:
                    return
            elif rem_c:
                return

        row = free[idx]
        large = c_base - row
        if need_b and row <= rem_b and need_bs != 0:
            sel_b.append(row)
            yield from rec(idx + 1, need_b - 1, need_c, rem_b - row, rem_c,
                           need_bs - 1, need_cs)
            sel_b.pop()
        if need_c and row <= rem_c and need_cs != 0:
            sel_c.append(row)
            yield from rec(idx + 1, need_b, need_c - 1, rem_b, rem_c - row,
                           need_bs, need_cs - 1)
            sel_c.pop()
        if need_b and large <= rem_b and (not even or need_b - need_bs > 0):
            sel_b.append(large)
            yield from rec(idx + 1, need_b - 1, need_c, rem_b - large, rem_c,
                           need_bs, need_cs)
            sel_b.pop()
        if need_c and large <= rem_c and (not even or need_c - need_cs > 0):
            sel_c.append(large)
            yield from rec(idx + 1, need_b, need_c - 1, rem_b, rem_c - large,
                           need_bs, need_cs)
            sel_c.pop()

    yield from rec(0, n, n, rem_b0, rem_c0, need_bs0, need_cs0)


def enumerate_omega(
    key: OmegaKey, budget: SearchBudget | None = None
) -> Iterator[CanonicalBorder]:
    """Stream every magic border with the key's corners, each exactly once.

    Deterministic order for identical inputs.  Raises
    :class:`BudgetExhausted` mid-stream if a node or time limit cuts the
    search short; a normally finished stream means the listing is complete.
    """
    _check_key(key)
    state = _BudgetState(budget)
    max_solutions = budget.max_solutions if budget else None
    emitted = 0
    for solution in _solutions(key.n, key.v, key.w, state):
        yield solution
        emitted += 1
        if max_solutions is not None and emitted >= max_solutions:
            return


def search_first(key: OmegaKey) -> CanonicalBorder:
    """First border for the key in search order.

    Same-parity small corners at even order are rejected up front; an
    empty but feasible even-order search is a library bug and says so
    loudly.
    """
    _check_key(key)
    n = key.n
    small = 2 * n + 2
    both_small = key.v <= small and key.w <= small
    if n % 2 == 0 and both_small and key.v % 2 == key.w % 2:
        raise InfeasibleCornersError(
            f"no magic border of even inner order {n} has same-parity "
            f"upper corners ({key.v}, {key.w})"
        )
    for solution in enumerate_omega(key, SearchBudget(max_solutions=1)):
        return solution
    if n % 2 == 0 and both_small:
        raise RuntimeError(
            f"invariant failure: opposite-parity corners ({key.v}, {key.w}) at even "
            f"order {n} must admit a border, but exhaustive search found none"
        )
    raise NoBorderError(
        f"search complete: no magic border of inner order {n} "
        f"with corners ({key.v}, {key.w})"
    )


def count_omega(
    n: int, budget: SearchBudget | None = None
) -> dict[tuple[int, int], int]:
    """Exact set-level border counts for every small corner pair (v, w).

    The node/time budget is shared across the whole table; a solution
    limit would bias the counts and is rejected.
    """
    check_inner_order(n)
    if budget and budget.max_solutions is not None:
        raise ValueError(
            "a solution limit would truncate the counts; use node or time limits"
        )
    state = _BudgetState(budget)
    counts: dict[tuple[int, int], int] = {}
    small = 2 * n + 2
    for v in range(1, small + 1):
        for w in range(1, small + 1):
            if v == w:
                continue
            counts[(v, w)] = sum(1 for _ in _solutions(n, v, w, state))
    return counts


def format_counts(counts: dict[tuple[int, int], int]) -> str:
    """Counts as plain structured text, one 'v w count' line per pair."""
    lines = [f"{v} {w} {count}" for (v, w), count in sorted(counts.items())]
    return "\n".join(lines) + "\n"


def ordered_variant_count(set_count: int, n: int) -> int:
    """Line-ordered borders represented by ``set_count`` set-level ones.

    Reordering within the top row and within the left column keeps a
    border magic, so each set-level border stands for (n!)^2 ordered
    arrangements.  This is a derived figure, distinct from the set-level
    counts everything else reports.
    """
    return set_count * math.factorial(n) ** 2
