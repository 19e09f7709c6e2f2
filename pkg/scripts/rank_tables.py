#!/usr/bin/env python3
"""Print the exact kernel-rank tables of the two graded maps.

Default range is weight <= 12 (minutes); --extended unlocks <= 16 (hours).
"""

import argparse
import sys
import time

from zetasigma.exact_linalg import kernel_of_alpha, kernel_of_delta


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=12)
    ap.add_argument("--extended", action="store_true", help="allow weights up to 16")
    args = ap.parse_args()
    cap = 16 if args.extended else 12
    if not 0 <= args.max_weight <= cap:
        ap.error(f"--max-weight must be in 0..{cap}")

    print("weight  map    rows  cols  rank  kernel")
    for name, fn, lo in (("alpha", kernel_of_alpha, 1), ("delta", kernel_of_delta, 0)):
        for k in range(lo, args.max_weight + 1):
            t0 = time.monotonic()
            cert = fn(k, need_basis=False)
            dt = time.monotonic() - t0
            print(
                f"{k:>6}  {name:<5} {cert.n_rows:>5} {cert.n_cols:>5} "
                f"{cert.rank:>5} {cert.nullity:>7}   ({dt:.1f}s)",
                flush=True,
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
