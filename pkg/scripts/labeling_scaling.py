"""Wall-clock time of the full labeling pipeline against the number of vertices."""

import argparse
import time

from utsw.model import generate_utsw
from utsw.labeling import label_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="25,50,75,100,150")
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    prev = None
    print(f"{'n':>5} {'|V|':>7} {'best s':>8} {'us/vertex':>10} {'ratio':>6}")
    for n in (int(x) for x in args.n_list.split(",")):
        view = generate_utsw(n, args.seed).view()
        best = float("inf")
        for _ in range(args.reps):
            t0 = time.perf_counter()
            label_graph(view, args.seed)
            best = min(best, time.perf_counter() - t0)
        ratio = f"{best / prev:.2f}" if prev else ""
        print(f"{n:>5} {n * n:>7} {best:>8.3f} {1e6 * best / (n * n):>10.2f} {ratio:>6}")
        prev = best


if __name__ == "__main__":
    main()
