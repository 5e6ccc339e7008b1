#!/usr/bin/env python3
"""Compute exact 3AP-free permutation counts over a range of n.

Results go into a b-file-format cache (with a provenance sidecar) that
every other command can consume. Values already in the cache are not
recomputed.

Usage examples:
  python scripts/compute_theta.py --max 16
  python scripts/compute_theta.py --min 12 --max 18 --jobs 4 --cache out/theta_cache.txt
"""

import argparse
import sys
import time
from pathlib import Path

from apfree import ThetaTable, load_table, save_table, theta
from apfree.counting import POLICY_COMPUTE_IF_MISSING


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min", type=int, default=1)
    parser.add_argument("--max", type=int, default=16)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--split-depth", type=int, default=None)
    parser.add_argument("--cache", default="out/theta_cache.txt")
    args = parser.parse_args()

    cache = Path(args.cache)
    cache.parent.mkdir(parents=True, exist_ok=True)
    tbl = ThetaTable(cache_path=cache)
    if cache.exists():
        load_table(cache, tbl)

    for n in range(args.min, args.max + 1):
        started = time.monotonic()
        known = n in tbl
        value = theta(n, tbl, POLICY_COMPUTE_IF_MISSING,
                      worker_count=args.jobs,
                      split_depth=(None if args.split_depth is None
                                   else min(args.split_depth, n)))
        elapsed = time.monotonic() - started
        tag = tbl.provenance(n) if known else "computed now"
        print(f"n={n}: {value}  [{tag}, {elapsed:.2f}s]")

    save_table(tbl, cache)
    print(f"cache written to {cache}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
