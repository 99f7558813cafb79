#!/usr/bin/env python
"""Tabulate shuffle orders and predicted group orders over a size range.

Columns: deck size, ord(L), ord(R), the prediction case, and the factored
group order for both generator families.  The closed forms for ord(L) and
ord(R) are cross-checked against the cycle structure on every row.
"""

from __future__ import annotations

import argparse

from unshuffle import predict_group, shuffle_order, shuffle_permutation


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=int, default=2)
    parser.add_argument("--max", type=int, default=52)
    args = parser.parse_args()

    header = f"{'2n':>4} {'ord L':>6} {'ord R':>6} {'case':>12} {'unshuffle':>14} {'perfect':>14}"
    print(header)
    print("-" * len(header))
    for size in range(args.min, args.max + 1):
        if size % 2:
            continue
        orders = {}
        for symbol in "LR":
            formula = shuffle_order(symbol, size)
            cycle = shuffle_permutation(symbol, size).order()
            assert formula == cycle, (symbol, size, formula, cycle)
            orders[symbol] = formula
        unshuffle = predict_group("unshuffle", size)
        perfect = predict_group("perfect", size)
        print(
            f"{size:>4} {orders['L']:>6} {orders['R']:>6} {unshuffle.case:>12} "
            f"{unshuffle.order_factored:>14} {perfect.order_factored:>14}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
