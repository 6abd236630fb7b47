#!/usr/bin/env python3
"""Run the whole weight-15 exclusion search and print a summary.

Equivalent to `pg10 search-a15` but prints progress while the 1021 orbit
representatives are processed.
"""

import argparse
import sys
import time

from pg10 import search


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--strict-b-consistency", action="store_true")
    args = parser.parse_args()

    done = 0

    def progress(result: search.RepResult) -> None:
        nonlocal done
        done += 1
        if done % 200 == 0:
            print(f"  {done} representatives processed", flush=True)

    start = time.monotonic()
    report = search.full_search(
        workers=args.workers,
        strict_b_consistency=args.strict_b_consistency,
        on_result=progress,
    )
    elapsed = time.monotonic() - start

    outcome = report.outcome
    uv, uvw, uvwx, uvwxy = outcome.stage_totals()
    print(f"six-sets through point 1 : {report.six_set_count}")
    print(f"K6 bundles               : {report.k6_count}")
    print(f"orbit representatives    : {report.orbit_count}")
    print(f"{{U,V}} pairs              : {uv}")
    print(f"{{U,V,W}} triples          : {uvw} (from {outcome.distinct_u} distinct U)")
    print(f"{{U,V,W,X}} chains         : {uvwx}")
    print(f"{{U,V,W,X,Y}} completions  : {uvwxy}")
    print(f"no weight-15 codeword    : {outcome.a15_verified}")
    print(f"wall time                : {elapsed:.1f}s")
    return 0 if outcome.a15_verified else 1


if __name__ == "__main__":
    sys.exit(main())
