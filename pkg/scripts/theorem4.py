"""Rank profile of the (LId) and di-Malcev orbit matrices in the degree-4 right-anticommutative space.

    python3 scripts/theorem4.py [--dump m.json]
"""
import argparse

from dialg.qlinalg import QMatrix, dump_matrices, rank
from dialg.suite import lid_matrix


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dump", help="write the 48 x 60 matrix as JSON")
    args = ap.parse_args()

    m = lid_matrix()
    lid, dm = QMatrix(m.rows[:24], m.ncols), QMatrix(m.rows[24:], m.ncols)
    print(f"matrix: {m.nrows} x {m.ncols}")
    print("forward order")
    for k in range(1, 49):
        if k in (6, 12, 18, 24, 30, 36, 42, 48):
            print(f"  rows {k:2d}: rank {rank(m.head(k))}")
    print(f"reversed order: di-Malcev {rank(dm)}, then with (LId) {rank(dm.stack(lid))}")
    if args.dump:
        dump_matrices(args.dump, {"M": m})
        print(f"wrote {args.dump}")


if __name__ == "__main__":
    main()
