"""Print fix, F_xt, the upper bound floor(n / fix) and (for small n) the
partition count along the built-in graph families."""

import argparse

from fixatic.families import family_graph
from fixatic.fixing import fixing_number
from fixatic.partition import COUNT_CAP, count_fixatic_partitions, fixatic_number, fixatic_upper_bound

SWEEPS = {
    "path": [[n] for n in range(2, 11)],
    "cycle": [[n] for n in range(3, 12)],
    "star": [[k] for k in range(2, 8)],
    "broom_pair": [[t] for t in (2, 3)],
    "spider_dan1": [[t] for t in (2, 3)],
    "spider_rslt": [[t] for t in (1, 2, 3)],
    "caterpillar2": [[t] for t in (3, 4, 5, 6)],
    "double_broom": [[t] for t in (3, 4, 5)],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("families", nargs="*", default=list(SWEEPS))
    args = ap.parse_args()
    print(f"{'family':<14}{'params':<10}{'n':>4}{'fix':>5}{'fxt':>5}{'bound':>7}{'pi_t':>8}")
    for fam in args.families:
        for params in SWEEPS[fam]:
            g = family_graph(fam, params).graph
            pi = count_fixatic_partitions(g) if g.n <= COUNT_CAP else "-"
            print(f"{fam:<14}{str(params):<10}{g.n:>4}{fixing_number(g).size:>5}"
                  f"{fixatic_number(g).fxt:>5}{fixatic_upper_bound(g):>7}{pi:>8}")


if __name__ == "__main__":
    main()
