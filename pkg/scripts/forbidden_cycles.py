"""Monte Carlo rate of roots whose four-cycles use a long-range edge, next to the closed-form bound."""

import argparse

from utsw.bounds import cycle_set_size_bound, detection_lower_bound, theoretical_eu_bound
from utsw.experiments import estimate_forbidden_cycle_rate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="10,50,100,150")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--roots", type=int, default=1000, help="sampled roots per graph")
    args = ap.parse_args()
    print(f"{'n':>5} {'rate':>8} {'95% interval':>20} {'bound':>8} {'cycles bound':>12} {'detect >=':>10}")
    for n in (int(x) for x in args.n_list.split(",")):
        e = estimate_forbidden_cycle_rate(n, range(args.seeds), min(args.roots, n * n))
        print(f"{n:>5} {e.rate:>8.4f} [{e.lo:.4f}, {e.hi:.4f}]".ljust(36)
              + f"{theoretical_eu_bound(n):>8.3f} {cycle_set_size_bound(n):>12.3f} {detection_lower_bound(n):>10.3f}")


if __name__ == "__main__":
    main()
