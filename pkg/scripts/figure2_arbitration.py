"""Recompute the 13-leaf r=3 comparison: cluster bound, expected dimension, Jacobian rank."""

import argparse
import json

from pluckertree.dimension import dimension_report
from pluckertree.linalg import DEFAULT_PRIME
from pluckertree.tree import FIGURE2_13, cluster_counts, parse_newick


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=3)
    args = ap.parse_args()

    tree = parse_newick(FIGURE2_13)
    rep = dimension_report(tree, 3, DEFAULT_PRIME, args.seed, args.trials)
    out = rep.to_json()
    out["clusterCounts"] = cluster_counts(tree, 3)
    out["printedClusterBound/expected"] = "66/67"
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
