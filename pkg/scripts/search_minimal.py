#!/usr/bin/env python3
"""Run the product-subgroup search and summarize the complete groups.

Usage: python scripts/search_minimal.py [--all]

By default prints only the complete results; --all prints every evaluated
product.  The minimal complete groups are the order-192 rows.
"""

from __future__ import annotations

import sys

from shidoku.search import minimal_order, search_products


def main() -> int:
    show_all = "--all" in sys.argv[1:]
    results = search_products()
    bound = minimal_order()
    shown = 0
    for res in results:
        if not show_all and not res.complete:
            continue
        shown += 1
        flag = " MINIMAL" if res.minimal else ""
        print(
            f"{res.label:<50} order={res.order:<5} orbits={res.orbit_count:<4} "
            f"complete={'yes' if res.complete else 'no'}{flag}"
        )
    minimal = [res for res in results if res.minimal]
    print()
    print(f"evaluated products: {len(results)} (shown: {shown})")
    print(f"completeness bound (largest orbit): {bound}")
    print(f"minimal complete groups found: {len(minimal)}")
    for res in minimal:
        print(f"  {res.label}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
