#!/usr/bin/env python3
"""Regenerate the frozen order-4 enumeration counts used as a regression fixture.

Writes tests/fixtures/omega4_counts.txt (one "v w count" line per corner
pair).  The counts are exact and deterministic, so a diff in this file
means the search engine changed behaviour.
"""

from pathlib import Path

from magicborders import count_omega, format_counts

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "omega4_counts.txt"


def main() -> None:
    counts = count_omega(4)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(format_counts(counts), encoding="utf-8")
    total = sum(counts.values())
    print(f"wrote {OUT} ({len(counts)} pairs, {total} borders)")


if __name__ == "__main__":
    main()
