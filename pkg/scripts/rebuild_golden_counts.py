#!/usr/bin/env python3
"""Recompute the count table and check it against the packaged golden CSV.

Emits the CSV for 1..M on stdout; with --check it also diffs the first 64
rows against the packaged copy and (optionally) re-counts every row by
exhaustive enumeration.  Exit status 0 iff all requested checks pass.

Usage:
    python scripts/rebuild_golden_counts.py                 # CSV for 1..64
    python scripts/rebuild_golden_counts.py 512 --check --enumerate
"""

import argparse
import sys

from mpart.cli import _golden_table64, _table_csv
from mpart.counting import build_table
from mpart.enumeration import count_by_enumeration


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("M", type=int, nargs="?", default=64)
    ap.add_argument("--check", action="store_true", help="diff rows 1..64 against the packaged golden file")
    ap.add_argument("--enumerate", action="store_true", help="re-count every row by exhaustive search")
    args = ap.parse_args()

    table = build_table(args.M)
    sys.stdout.write(_table_csv(args.M, table))

    ok = True
    if args.check:
        checked = table if args.M >= 64 else build_table(64)
        match = _table_csv(64, checked) == _golden_table64()
        print(f"golden match: {'ok' if match else 'MISMATCH'}", file=sys.stderr)
        ok &= match
    if args.enumerate:
        bad = [m for m in range(1, args.M + 1) if table[m] != count_by_enumeration(m)]
        print(f"enumeration cross-check: {'ok' if not bad else f'MISMATCH at {bad[:5]}'}", file=sys.stderr)
        ok &= not bad
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
