"""Search for a tuple with 0 < g_1 <= g_0 over all nondecreasing k-tuples up to max_gen."""
import argparse
import sys

from jfrob.search import conjecture_g1_gt_g0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--max-gen", type=int, default=20)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()
    found = 0
    for k in args.k:
        rep = conjecture_g1_gt_g0(k, args.max_gen, workers=args.workers)
        print(f"k={k} max_gen={args.max_gen}: {rep.tuples_scanned} tuples, "
              f"{len(rep.counterexamples)} counterexamples ({rep.elapsed:.1f}s)")
        for c in rep.counterexamples:
            print(f"  COUNTEREXAMPLE {c.tuple}: g_0={c.g_0} g_1={c.g_1}")
        found += len(rep.counterexamples)
    sys.exit(1 if found else 0)


if __name__ == "__main__":
    main()
