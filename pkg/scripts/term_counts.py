#!/usr/bin/env python3
"""Measure how much smaller the compact enumerations are than the plain ones.

For the modified family: sorted tableaux of the conjugate diagram versus all
n^|shape| fillings.  For the integral form: ordered nonattacking fillings of
the increasing diagram versus all nonattacking fillings of the decreasing one.

    python scripts/term_counts.py --max-size 5 --n 3
"""

import argparse

from macpoly.modified import iter_sorted_tableaux
from macpoly.shapes import (
    composition_stats,
    conjugate,
    diagram,
    enumerate_fillings,
    is_nonattacking,
    is_ordered,
)
from macpoly.verify import partitions_up_to


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--n", type=int, default=3)
    args = parser.parse_args()
    n = args.n

    print(f"modified family, n = {n}: sorted tableaux vs all fillings")
    for lam in partitions_up_to(args.max_size):
        sorted_count = sum(1 for _ in iter_sorted_tableaux(diagram(conjugate(lam)), n))
        plain_count = n ** sum(lam)
        print(f"  shape {lam}: {sorted_count:6d} vs {plain_count:6d}"
              f"  ({sorted_count / plain_count:.1%})")

    print(f"\nintegral form, n = {n}: ordered vs all nonattacking fillings")
    for mu in partitions_up_to(args.max_size):
        inc_shape = diagram(composition_stats(mu).inc)
        ordered_count = sum(
            1
            for f in enumerate_fillings(inc_shape, n, predicate=is_nonattacking)
            if is_ordered(f)
        )
        plain_count = sum(
            1 for _ in enumerate_fillings(diagram(mu), n, predicate=is_nonattacking)
        )
        print(f"  shape {mu}: {ordered_count:6d} vs {plain_count:6d}")


if __name__ == "__main__":
    main()
