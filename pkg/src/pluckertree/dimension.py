"""Dimension formulas, cluster bounds and Jacobian-rank estimates for J_T^{r}.

All dimensions are affine cone dimensions.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from math import comb

import sympy

from .linalg import DEFAULT_PRIME, _rank_mod
from .tree import PhyloTree, attach_leaf, caterpillar, circular_embed, cluster_counts

EQUAL = "equal"
SMALLER = "strictly-smaller"
UNDETERMINED = "undetermined"


def expected_secant_dim(n: int, r: int) -> int:
    """Dimension of the r-th secant of the cone over Gr(2, n), i.e. of rank <= 2r skew matrices.

    For n <= 2r+1 every skew matrix has rank <= 2r and the value is n(n-1)/2.
    """
    if r < 1 or n < 2:
        raise ValueError("need r >= 1 and n >= 2")
    if n <= 2 * r + 1:
        return comb(n, 2)
    return 2 * r * n - 2 * r * r - r


def cherry_bound(tree: PhyloTree, r: int) -> int:
    if r < 1:
        raise ValueError("r must be at least 1")
    c = len(tree.cherries())
    return 2 * r * tree.n - 3 * r - (r - 1) * c


def cluster_sum(tree: PhyloTree, r: int) -> int:
    """sum_{k=2}^{r} (r-k+1) c_k"""
    counts = cluster_counts(tree, r)
    return sum((r - k + 1) * c for k, c in counts.items())


def cluster_bound(tree: PhyloTree, r: int) -> int:
    if r < 2:
        raise ValueError("r must be at least 2")
    return 2 * r * tree.n - 3 * r - cluster_sum(tree, r)


def jacobian_matrix(tree: PhyloTree, r: int, point: list[list[int]], prime: int) -> list[list[int]]:
    """Rows p_ij, columns (copy s, edge e); entry = product of y^(s) over path(i,j) minus e."""
    m = tree.num_edges
    rows = []
    for pair in tree.pairs:
        path = sorted(tree.paths[pair])
        row = [0] * (r * m)
        for s in range(r):
            y = point[s]
            vals = [y[e] for e in path]
            prefix = [1]
            for v in vals:
                prefix.append(prefix[-1] * v % prime)
            suffix = [1]
            for v in reversed(vals):
                suffix.append(suffix[-1] * v % prime)
            suffix.reverse()
            for k, e in enumerate(path):
                row[s * m + e] = prefix[k] * suffix[k + 1] % prime
        rows.append(row)
    return rows


def jacobian_ranks(tree: PhyloTree, r: int, prime: int = DEFAULT_PRIME, seed: int = 0,
                   trials: int = 3) -> list[int]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if prime <= 2 ** 31 or not sympy.isprime(prime):
        raise ValueError(f"modulus must be a prime above 2**31, got {prime}")
    rng = random.Random(seed)
    m = tree.num_edges
    out = []
    for _ in range(trials):
        point = [[rng.randrange(1, prime) for _ in range(m)] for _ in range(r)]
        out.append(_rank_mod(jacobian_matrix(tree, r, point, prime), r * m, prime))
    return out


def jacobian_secant_dim(tree: PhyloTree, r: int, prime: int = DEFAULT_PRIME, seed: int = 0,
                        trials: int = 3) -> int:
    """Generic rank of the parametrization of V(J_T) + ... + V(J_T) (r copies).

    The rank at any point is at most the dimension, so the maximum over random
    points is a lower bound that is exact with high probability.
    """
    return max(jacobian_ranks(tree, r, prime, seed, trials))


def equality_verdict(tree: PhyloTree, r: int, jacobian: int | None = None, **jac_kwargs) -> str:
    """equal, strictly-smaller (forced by a proven upper bound) or undetermined.

    A Jacobian rank equal to the expected dimension proves equality of dimensions
    (rank at a point never exceeds the generic rank, and dim J_T^{r} never exceeds
    the expected value). A Jacobian shortfall without a forcing bound is only
    probabilistic evidence and is reported as undetermined.
    """
    expected = expected_secant_dim(tree.n, r)
    bounds = [cherry_bound(tree, r)]
    if r >= 2:
        bounds.append(cluster_bound(tree, r))
    if min(bounds) < expected:
        return SMALLER
    if jacobian is None:
        jacobian = jacobian_secant_dim(tree, r, **jac_kwargs)
    if jacobian == expected:
        return EQUAL
    return UNDETERMINED


def counterexample_tree(r: int) -> PhyloTree:
    """(4r+2)-leaf tree with 2r+1 cherries: a cherry hung on every leaf of a (2r+1)-leaf tree."""
    if r < 1:
        raise ValueError("r must be at least 1")
    base = caterpillar(2 * r + 1)
    t = base
    label = base.n
    for leaf in base.leaves:
        label += 1
        t = attach_leaf(t, t.pendant_edge(leaf), label).tree
    return circular_embed(t).tree


def conjecture_values(tree: PhyloTree, r: int) -> dict:
    if r < 2:
        raise ValueError("r must be at least 2")
    s = cluster_sum(tree, r)
    threshold = 2 * r * r - 2 * r
    return {"sum": s, "threshold": threshold, "strict": s < threshold, "nonStrict": s <= threshold}


def conjecture_predicate(tree: PhyloTree, r: int, strict: bool = True) -> bool:
    vals = conjecture_values(tree, r)
    return vals["strict"] if strict else vals["nonStrict"]


@dataclass
class DimensionReport:
    tree: str
    n: int
    r: int
    expected_pfaffian_dim: int
    cherry_bound: int
    cluster_bound: int | None
    jacobian_dim: int
    jacobian_ranks: list[int]
    prime: int
    seed: int
    verdict: str
    conjecture: dict | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        d = asdict(self)
        return {
            "tree": d["tree"], "n": d["n"], "r": d["r"],
            "expectedPfaffianDim": d["expected_pfaffian_dim"],
            "cherryBound": d["cherry_bound"], "clusterBound": d["cluster_bound"],
            "jacobianDim": d["jacobian_dim"], "jacobianRanks": d["jacobian_ranks"],
            "prime": d["prime"], "seed": d["seed"], "equalityVerdict": d["verdict"],
            "conjecture": d["conjecture"], "notes": d["notes"],
        }


def dimension_report(tree: PhyloTree, r: int, prime: int = DEFAULT_PRIME, seed: int = 0,
                     trials: int = 3) -> DimensionReport:
    ranks = jacobian_ranks(tree, r, prime, seed, trials)
    jac = max(ranks)
    return DimensionReport(
        tree=tree.to_newick(), n=tree.n, r=r,
        expected_pfaffian_dim=expected_secant_dim(tree.n, r),
        cherry_bound=cherry_bound(tree, r),
        cluster_bound=cluster_bound(tree, r) if r >= 2 else None,
        jacobian_dim=jac, jacobian_ranks=ranks, prime=prime, seed=seed,
        verdict=equality_verdict(tree, r, jacobian=jac),
        conjecture=conjecture_values(tree, r) if r >= 2 else None,
    )
