"""Print the coefficients of x^m + conj(x)^m in N(x) for trace-2 x, odd m.

    python scripts/coefficient_table.py --mmax 15
"""

import argparse

from nconj.families import coeff_table, ntuple_threshold


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--mmax", type=int, default=15)
    args = ap.parse_args()
    for m in range(1, args.mmax + 1, 2):
        print(f"m={m:<3} {list(coeff_table(m).coefficients)}")
    print()
    for n in range(4, 13):
        print(f"n={n:<3} N(x) must exceed {ntuple_threshold(n)}")


if __name__ == "__main__":
    main()
