"""Expand s_(0|3)^k in Frobenius notation, with and without a row bound."""

import argparse

from koszulkit.young_schur import parse_shape, schur_power


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--shape", default="(0|3)")
    ap.add_argument("--power", type=int, default=3)
    ap.add_argument("--rows", type=int, default=6)
    args = ap.parse_args()
    lam = parse_shape(args.shape)
    bounded = schur_power(lam, args.power, max_rows=args.rows)
    full = schur_power(lam, args.power)
    print(f"GL{args.rows}:", bounded)
    print(f"  dim {bounded.dimension(args.rows)}")
    print(f"unbounded ({len(full.terms)} terms):", full)


if __name__ == "__main__":
    main()
