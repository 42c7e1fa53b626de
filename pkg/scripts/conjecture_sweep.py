"""Compare Jacobian secant dimensions with the cluster-sum predicate over all shapes."""

import argparse
from collections import Counter

from pluckertree.dimension import (
    EQUAL, UNDETERMINED, conjecture_values, equality_verdict, jacobian_ranks,
)
from pluckertree.tree import enumerate_shapes


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--nmax", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=3)
    args = ap.parse_args()

    tally = Counter()
    for r in args.r:
        for n in range(4, args.nmax + 1):
            for t in enumerate_shapes(n):
                jac = max(jacobian_ranks(t, r, seed=args.seed, trials=args.trials))
                verdict = equality_verdict(t, r, jacobian=jac)
                vals = conjecture_values(t, r)
                if verdict == UNDETERMINED:
                    tally[r, "undetermined"] += 1
                    status = "undetermined"
                else:
                    agree = (verdict == EQUAL) == vals["nonStrict"]
                    tally[r, "agree" if agree else "disagree"] += 1
                    status = "agree" if agree else "DISAGREE"
                print(f"r={r} n={n:<2} sum={vals['sum']:<3} thr={vals['threshold']:<3} "
                      f"jac={jac:<4} {verdict:<17} {status:<12} {t.to_newick()}")
    for key in sorted(tally):
        print(key, tally[key])


if __name__ == "__main__":
    main()
