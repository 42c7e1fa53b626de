"""Lift-chain certificates of bound 4n-10 for every tree with 3 or 4 cherries."""

import argparse
import time

from pluckertree.draisma import lift_chain, verify_certificate
from pluckertree.tree import enumerate_shapes


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    failures = 0
    for n in range(6, args.nmax + 1):
        for t in enumerate_shapes(n):
            c = len(t.cherries())
            if c not in (3, 4):
                continue
            start = time.perf_counter()
            cert = lift_chain(t, seed=args.seed)
            ok = verify_certificate(cert) and cert.bound == 4 * n - 10
            failures += not ok
            print(f"n={n:<2} cherries={c} bound={cert.bound:<3} ranks=({cert.rank1},{cert.rank2}) "
                  f"steps={len(cert.metadata['steps'])} {'ok' if ok else 'FAIL'} "
                  f"{time.perf_counter() - start:.2f}s  {t.to_newick()}")
    print(f"{failures} failures")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
