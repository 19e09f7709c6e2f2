#!/usr/bin/env python3
"""Run every entry of the identity registry at a chosen precision and
report pass/fail; exit nonzero if anything fails."""

import argparse
import sys
import time

from zetasigma.cli import IDENTITIES, main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=40)
    ap.add_argument("--extended", action="store_true", help="allow digits beyond 64")
    args = ap.parse_args()

    failures = []
    for name in sorted(IDENTITIES):
        t0 = time.monotonic()
        argv = ["verify", "--identity", name, "--digits", str(args.digits)]
        if args.extended:
            argv.append("--extended")
        code = cli_main(argv)
        dt = time.monotonic() - t0
        print(f"--- {name}: exit {code} ({dt:.1f}s)", file=sys.stderr, flush=True)
        if code != 0:
            failures.append(name)
    if failures:
        print(f"FAILED: {', '.join(failures)}", file=sys.stderr)
        return 1
    print(f"all {len(IDENTITIES)} identities passed at {args.digits} digits", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
