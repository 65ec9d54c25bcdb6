#!/usr/bin/env python3
"""Timings for the three counting routes.

Reports wall time for the dense bottom-up table at growing sizes, for the
sparse top-down recurrence at scattered single queries, and for exhaustive
enumeration counts over [1, limit].
"""

import time

from mpart.counting import CountTable, a, build_table
from mpart.enumeration import count_by_enumeration


def timeit(label, fn):
    t0 = time.perf_counter()
    out = fn()
    dt = time.perf_counter() - t0
    print(f"{label:<42} {dt:8.3f}s")
    return out


def main() -> None:
    for exp in (12, 14, 16):
        timeit(f"build_table(2**{exp})", lambda e=exp: build_table(1 << e))

    timeit(
        "sparse a(m) at m in {2^10, 3*2^10, 2^12+1}",
        lambda: [a(m, CountTable()) for m in (1 << 10, 3 << 10, (1 << 12) + 1)],
    )

    for limit in (256, 512):
        total = timeit(
            f"count_by_enumeration over [1, {limit}]",
            lambda lim=limit: sum(count_by_enumeration(m) for m in range(1, lim + 1)),
        )
        print(f"{'':<42} ({total} partitions counted)")


if __name__ == "__main__":
    main()
