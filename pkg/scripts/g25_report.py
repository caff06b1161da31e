"""Print the G(2,5) Betti table, Hilbert data and the bv homology side by side."""

import argparse

from koszulkit.algebra_core import g2n_presentation
from koszulkit.bv_small import bv_homology
from koszulkit.complexes import berkovits_homology, syzygy_betti
from koszulkit.hilbert import deviations, hilbert_series, numerator


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=6)
    args = ap.parse_args()
    N = args.max_weight
    pres = g2n_presentation(5)
    H = hilbert_series(pres, max(N, 8))
    print("H_A(t)      ", H)
    print("numerator   ", numerator(H, pres.n))
    print("deviations  ", list(deviations(H).epsilons))
    print("\nsyzygies")
    print(syzygy_betti(pres, N).to_text())
    print("\nBerkovits")
    print(berkovits_homology(pres, N).to_text())
    print("\nbv")
    print(bv_homology(N).to_text())


if __name__ == "__main__":
    main()
