"""Stable text formats for squares, frames and plans.

Grids travel as whitespace-aligned text, CSV, or JSON with keys "order"
and "cells"; border plans travel as JSON with keys "n", "v", "w", "b",
"c".  Empty cells (the interior of a frame) are "." in text, an empty
field in CSV and null in JSON.  Parsing auto-detects the format and
round-trips every emitted document.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .verify import BorderFrame, BorderPlan

GRID = "grid"
CSV = "csv"
JSON = "json"
FORMATS = (GRID, CSV, JSON)

_HOLE = "."


class DocumentError(ValueError):
    """Input text is not a readable grid or plan document."""


@dataclass(frozen=True)
class GridDocument:
    """A parsed square grid, possibly with empty interior cells."""

    cells: tuple[tuple[int | None, ...], ...]

    @property
    def order(self) -> int:
        return len(self.cells)

    def is_complete(self) -> bool:
        return all(x is not None for row in self.cells for x in row)

    def as_square(self) -> list[list[int]]:
        if not self.is_complete():
            raise DocumentError("grid has empty cells; expected a full square")
        return [list(row) for row in self.cells]

    def as_frame(self) -> BorderFrame:
        order = self.order
        if order < 5:
            raise DocumentError(f"a frame needs order >= 5, got {order}")
        for i, row in enumerate(self.cells):
            for j, value in enumerate(row):
                on_border = i in (0, order - 1) or j in (0, order - 1)
                if on_border and value is None:
                    raise DocumentError(f"frame border cell ({i},{j}) is empty")
                if not on_border and value is not None:
                    raise DocumentError(f"frame interior cell ({i},{j}) is filled")
        return BorderFrame(n=order - 2, cells=self.cells)


def _grid_rows(cells) -> tuple[tuple[int | None, ...], ...]:
    return tuple(tuple(row) for row in cells)


def serialize_grid(cells, fmt: str = GRID) -> str:
    """Write a square grid (ints and None) in the requested format."""
    rows = _grid_rows(cells)
    order = len(rows)
    if any(len(row) != order for row in rows):
        raise DocumentError("grid must be square")
    if fmt == GRID:
        width = max(
            (len(str(x)) for row in rows for x in row if x is not None), default=1
        )
        lines = [
            " ".join((_HOLE if x is None else str(x)).rjust(width) for x in row)
            for row in rows
        ]
        return "\n".join(lines) + "\n"
    if fmt == CSV:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        for row in rows:
            writer.writerow(["" if x is None else x for x in row])
        return out.getvalue()
    if fmt == JSON:
        payload = {"order": order, "cells": [list(row) for row in rows]}
        return json.dumps(payload, indent=None) + "\n"
    raise DocumentError(f"unknown format {fmt!r}; pick one of {FORMATS}")


def serialize_plan(plan: BorderPlan) -> str:
    """Write a border plan as a one-line JSON document."""
    payload = {
        "n": plan.n,
        "v": plan.v,
        "w": plan.w,
        "b": list(plan.b),
        "c": list(plan.c),
    }
    return json.dumps(payload) + "\n"


def _cell_from_token(token: str, where: str) -> int | None:
    token = token.strip()
    if token in ("", _HOLE):
        return None
    try:
        return int(token)
    except ValueError:
        raise DocumentError(f"unreadable cell {token!r} at {where}") from None


def _grid_from_lists(raw, where: str) -> GridDocument:
    cells = []
    for i, row in enumerate(raw):
        parsed = []
        for j, x in enumerate(row):
            if x is None:
                parsed.append(None)
            elif isinstance(x, int) and not isinstance(x, bool):
                parsed.append(x)
            else:
                raise DocumentError(f"unreadable cell {x!r} at {where} ({i},{j})")
        cells.append(tuple(parsed))
    order = len(cells)
    if order == 0 or any(len(row) != order for row in cells):
        raise DocumentError(f"{where}: cells do not form a square grid")
    return GridDocument(cells=tuple(cells))


def _parse_json(text: str) -> BorderPlan | GridDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"unreadable JSON document: {exc}") from None
    if not isinstance(payload, dict):
        raise DocumentError("JSON document must be an object")
    if {"n", "v", "w", "b", "c"} <= payload.keys():
        try:
            return BorderPlan(
                n=int(payload["n"]),
                v=int(payload["v"]),
                w=int(payload["w"]),
                b=tuple(int(x) for x in payload["b"]),
                c=tuple(int(x) for x in payload["c"]),
            )
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"unreadable plan document: {exc}") from None
    if {"order", "cells"} <= payload.keys():
        doc = _grid_from_lists(payload["cells"], "JSON cells")
        if doc.order != payload["order"]:
            raise DocumentError(
                f"JSON order {payload['order']} does not match a "
                f"{doc.order}x{doc.order} cell grid"
            )
        return doc
    raise DocumentError(
        'JSON document needs keys "order"/"cells" (grid) or "n"/"v"/"w"/"b"/"c" (plan)'
    )


def parse_document(text: str) -> BorderPlan | GridDocument:
    """Read any emitted document back: JSON plan, or JSON/CSV/text grid."""
    stripped = text.strip()
    if not stripped:
        raise DocumentError("empty document")
    if stripped.startswith("{"):
        return _parse_json(stripped)
    lines = [line for line in stripped.splitlines() if line.strip()]
    cells = []
    for i, line in enumerate(lines, start=1):
        tokens = next(csv.reader([line])) if "," in line else line.split()
        cells.append(
            tuple(_cell_from_token(tok, f"line {i}") for tok in tokens)
        )
    order = len(cells)
    if any(len(row) != order for row in cells):
        widths = sorted({len(row) for row in cells})
        raise DocumentError(
            f"grid is not square: {order} lines with row widths {widths}"
        )
    return GridDocument(cells=tuple(cells))
