#!/usr/bin/env python3
"""Tabulate the product-state census against the closed-form count.

For each qubit count the number of sign vectors that factor into
plus/minus qubits is 2**(n+1); everything else is entangled.  The last
column shows how quickly balanced sign patterns outnumber the products.
"""

from math import comb

from pilme.lme_state import count_osm_states


def main() -> None:
    header = f"{'n':>2} {'sign vectors':>14} {'products':>9} {'2^(n+1)':>8} {'balanced C(N,N/2)':>18}"
    print(header)
    print("-" * len(header))
    for n in range(1, 5):
        total = 1 << (1 << n)
        products = count_osm_states(n)
        balanced = comb(1 << n, 1 << (n - 1))
        print(f"{n:>2} {total:>14} {products:>9} {1 << (n + 1):>8} {balanced:>18}")


if __name__ == "__main__":
    main()
