#!/usr/bin/env python3
"""Solve the order-10 weight distribution and print it in paired-row form.

Each output row is "i  111-i  A_i", mirroring how the distribution is
usually tabulated; a CSV copy is written next to it when -o is given.
"""

import argparse

from pg10 import weightenum


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--output", help="also write the full i,A_i CSV here")
    args = parser.parse_args()

    system = weightenum.build_pg10_system()
    print(f"system: {len(system.rows)} rows over {len(system.unknown_weights)} unknowns, "
          f"nullity {weightenum.system_nullity(system)} before pinning")
    enum = weightenum.solve_weight_distribution(system, weightenum.STANDARD_PINS)

    print(f"{'i':>4} {'111-i':>6} {'A_i':>26}")
    for i in range(0, 56):
        if enum[i]:
            print(f"{i:>4} {111 - i:>6} {enum[i]:>26,}")
    total = enum.total()
    print(f"sum of all A_i = {total} (2^56 = {2**56}) match={total == 2**56}")

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(weightenum.weight_table_csv(enum))
        print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
