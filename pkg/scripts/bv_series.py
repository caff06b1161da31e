"""Tabulate dim H^1 of the bv complex against the deviation tail, weight by weight."""

import argparse

from koszulkit.algebra_core import g2n_presentation
from koszulkit.bv_small import bv_homology, generator_series
from koszulkit.hilbert import deviations, hilbert_series, truncated_product_tail


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=8)
    args = ap.parse_args()
    N = args.max_weight
    gens = generator_series(bv_homology(N))
    tail = truncated_product_tail(list(deviations(hilbert_series(g2n_presentation(5), N)).epsilons), 3, N)
    print(f"{'q':>3} {'H^1':>6} {'tail':>6}")
    for q in range(N + 1):
        print(f"{q:>3} {int(gens[q]):>6} {int(tail[q]):>6}")


if __name__ == "__main__":
    main()
