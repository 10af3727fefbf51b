#!/usr/bin/env python3
"""Print unknotting bounds for the triple-twist chain family.

For each n the spun and turned spun covering knots of cl(s1^3 ... sn^3)
have coloring count 3**(n+1), lower bound n, upper bound n, so their
unknotting number is exactly n.
"""

import argparse

from toruscover import unknotting_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, help="largest chain length")
    parser.add_argument(
        "--brute-limit",
        type=int,
        default=6,
        help="largest n checked by brute-force enumeration (fast path beyond)",
    )
    args = parser.parse_args()

    rows = unknotting_table(args.max_n, brute_limit=args.brute_limit)
    print(f"{'n':>3}  {'chart':<12}{'braid':<28}{'phi':>10}  {'lower':>5}  {'upper':>5}  {'exact':>5}")
    for row in rows:
        print(
            f"{row['n']:>3}  {row['chart']:<12}{row['braid']:<28}"
            f"{row['coloring_count']:>10}  {row['lower']:>5}  {row['upper']:>5}  {row['exact']:>5}"
        )
    bad = [row for row in rows if row["exact"] != row["n"]]
    print()
    if bad:
        print(f"FAIL: {len(bad)} rows did not land on n")
        raise SystemExit(1)
    print("all rows: unknotting number exactly n")


if __name__ == "__main__":
    main()
