"""Cherry bound versus expected dimension on the (4r+2)-leaf trees with 2r+1 cherries."""

import argparse

from pluckertree.dimension import cherry_bound, counterexample_tree, expected_secant_dim, jacobian_secant_dim


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=3)
    ap.add_argument("--jacobian", action="store_true", help="also compute the Jacobian rank")
    args = ap.parse_args()
    for r in range(1, args.rmax + 1):
        t = counterexample_tree(r)
        line = (f"r={r} n={t.n} cherries={len(t.cherries())} cherry_bound={cherry_bound(t, r)} "
                f"expected={expected_secant_dim(t.n, r)}")
        if args.jacobian:
            line += f" jacobian={jacobian_secant_dim(t, r)}"
        print(line)


if __name__ == "__main__":
    main()
