#!/usr/bin/env python3
"""Timing and size report across orders: construction, assembly, enumeration.

Everything here is deterministic; rerun after engine changes to spot
regressions in the growth curves.
"""

import time

from magicborders import (
    build_border,
    build_square,
    count_omega,
    verify_border,
    verify_bordered,
)


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main() -> None:
    print("border construction + verification")
    for n in (10, 50, 100, 500, 1000, 5000):
        plan, t_build = timed(build_border, n)
        report, t_check = timed(verify_border, plan)
        assert report.valid
        print(f"  n={n:>5}: build {t_build * 1e3:8.2f} ms   verify {t_check * 1e3:8.2f} ms")

    print("full bordered squares")
    for order in (10, 20, 40, 80):
        square, t_build = timed(build_square, order)
        report, t_check = timed(verify_bordered, square)
        assert report.valid
        print(f"  N={order:>3}: build {t_build * 1e3:8.2f} ms   verify {t_check * 1e3:8.2f} ms")

    print("exhaustive set-level counts per inner order")
    for n in (3, 4, 5, 6):
        counts, t_count = timed(count_omega, n)
        total = sum(counts.values())
        print(f"  n={n}: {total:>6} borders over {len(counts)} corner pairs "
              f"in {t_count:6.2f} s")


if __name__ == "__main__":
    main()
