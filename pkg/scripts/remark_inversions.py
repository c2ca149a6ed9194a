"""Reproduce the published order inversions and survey where inversions first appear.

    python scripts/remark_inversions.py --k 3 --max-gen 12 --max-j 40
"""
import argparse
from collections import Counter

from jfrob.core import make_tuple
from jfrob.search import scan_inversions, search_inversions

PUBLISHED = [(3, 5, 8), (3, 10, 16), (2, 5, 7), (2, 5, 17), (4, 7, 19), (9, 11, 20)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--max-gen", type=int, default=12)
    ap.add_argument("--max-j", type=int, default=40)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print("published tuples, first inversion:")
    for gens in PUBLISHED:
        recs = scan_inversions(make_tuple(gens), 40)
        r = recs[0]
        print(f"  {gens}: g_{r.j}={r.g_j} g_{r.j + 1}={r.g_j_plus_1}")

    rep = search_inversions(args.k, args.max_gen, args.max_j, workers=args.workers)
    print(f"\nsurvey k={args.k} max_gen={args.max_gen} max_j={args.max_j}: "
          f"{len(rep.min_inverting_j)}/{rep.tuples_scanned} tuples invert ({rep.elapsed:.1f}s)")
    hist = Counter(j for _, j in rep.min_inverting_j)
    for j in sorted(hist):
        print(f"  first inversion at j={j}: {hist[j]} tuples")
    if rep.min_inverting_j:
        t, j = min(rep.min_inverting_j, key=lambda p: p[1])
        print(f"smallest first-inverting j: {j} for {t}")


if __name__ == "__main__":
    main()
