"""Tropical lower bounds for dim(J_T^{2}) from winning directions.

A witness is a pair (v1, v2) of edge-weight vectors. Copy s *wins* the leaf pair
(i, j) when the v_s-length of the path i -> j is strictly larger than the other
copy's. The ranks of the two sets of winning path-indicator vectors add up to a
lower bound on the affine dimension of V(J_T) + V(J_T).
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import ExactMatrix, rank_of_rows, solve
from .tree import Pair, PhyloTree, alpha_vector, restrict

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WitnessPair:
    v1: tuple[Fraction, ...]
    v2: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "v1", tuple(Fraction(x) for x in self.v1))
        object.__setattr__(self, "v2", tuple(Fraction(x) for x in self.v2))
        if len(self.v1) != len(self.v2):
            raise ValueError("v1 and v2 must have the same length")

    def swapped(self) -> "WitnessPair":
        return WitnessPair(self.v2, self.v1)


@dataclass(frozen=True)
class WinningSets:
    d1: tuple[Pair, ...]
    d2: tuple[Pair, ...]
    ties: tuple[Pair, ...]


def path_weight(tree: PhyloTree, v: Sequence[Fraction], pair: Pair) -> Fraction:
    return sum((v[e] for e in tree.paths[pair]), Fraction(0))


def winning_directions(tree: PhyloTree, w: WitnessPair) -> WinningSets:
    if len(w.v1) != tree.num_edges:
        raise ValueError(f"witness has length {len(w.v1)}, tree has {tree.num_edges} edges")
    d1, d2, ties = [], [], []
    for p in tree.pairs:
        a, b = path_weight(tree, w.v1, p), path_weight(tree, w.v2, p)
        (d1 if a > b else d2 if b > a else ties).append(p)
    return WinningSets(tuple(d1), tuple(d2), tuple(ties))


def span_rank(tree: PhyloTree, pairs: Sequence[Pair]) -> int:
    return rank_of_rows([alpha_vector(tree, *p) for p in pairs], tree.num_edges)


def rank_pair(tree: PhyloTree, w: WitnessPair) -> tuple[int, int]:
    ws = winning_directions(tree, w)
    return span_rank(tree, ws.d1), span_rank(tree, ws.d2)


def lower_bound(tree: PhyloTree, w: WitnessPair) -> int:
    return sum(rank_pair(tree, w))


@dataclass
class WitnessCertificate:
    tree: PhyloTree
    witness: WitnessPair
    sets: WinningSets
    rank1: int
    rank2: int
    bound: int
    seed: int | None = None
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "tree": self.tree.to_json(),
            "v1": [_frac_str(x) for x in self.witness.v1],
            "v2": [_frac_str(x) for x in self.witness.v2],
            "d1": [list(p) for p in self.sets.d1],
            "d2": [list(p) for p in self.sets.d2],
            "ties": [list(p) for p in self.sets.ties],
            "rank1": self.rank1,
            "rank2": self.rank2,
            "bound": self.bound,
            "seed": self.seed,
            "metadata": self.metadata,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WitnessCertificate":
        try:
            tree = PhyloTree.from_json(data["tree"])
            w = WitnessPair([Fraction(x) for x in data["v1"]], [Fraction(x) for x in data["v2"]])
            sets = WinningSets(*(tuple(tuple(p) for p in data[k]) for k in ("d1", "d2", "ties")))
            return cls(tree, w, sets, int(data["rank1"]), int(data["rank2"]), int(data["bound"]),
                       data.get("seed"), dict(data.get("metadata", {})))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from exc


def certify(tree: PhyloTree, w: WitnessPair, seed: int | None = None, **metadata) -> WitnessCertificate:
    sets = winning_directions(tree, w)
    r1, r2 = span_rank(tree, sets.d1), span_rank(tree, sets.d2)
    return WitnessCertificate(tree, w, sets, r1, r2, r1 + r2, seed, metadata)


def certificate_mismatches(cert: WitnessCertificate) -> list[str]:
    """Everything in ``cert`` that does not survive recomputation from (tree, v1, v2)."""
    tree, w = cert.tree, cert.witness
    if len(w.v1) != tree.num_edges:
        return [f"witness length {len(w.v1)} != {tree.num_edges} edges"]
    problems = []
    sets = winning_directions(tree, w)
    for name in ("d1", "d2", "ties"):
        got, want = getattr(cert.sets, name), getattr(sets, name)
        if tuple(got) != tuple(want):
            diff = sorted(set(got) ^ set(want))
            problems.append(f"{name} differs, first at pair {diff[0] if diff else 'order'}")
    r1, r2 = span_rank(tree, sets.d1), span_rank(tree, sets.d2)
    if (cert.rank1, cert.rank2) != (r1, r2):
        problems.append(f"ranks recompute to ({r1}, {r2}), certificate says ({cert.rank1}, {cert.rank2})")
    if cert.bound != r1 + r2:
        problems.append(f"claimed bound {cert.bound} != {r1 + r2}")
    return problems


def verify_certificate(cert: WitnessCertificate) -> bool:
    return not certificate_mismatches(cert)


def search_witness(tree: PhyloTree, target: int, seed: int = 0, max_iters: int = 100_000,
                   ranks: tuple[int, int] | None = None, box: int = 1000) -> WitnessCertificate | None:
    """Random integer witnesses in [-box, box] until the bound reaches ``target``.

    Draws with ties are rejected. With ``ranks`` the rank pair must match exactly.
    Returns None when the budget runs out or the target exceeds 2(2n-3).
    """
    m = tree.num_edges
    if target > 2 * m:
        return None
    rng = random.Random(seed)
    paths = [sorted(tree.paths[p]) for p in tree.pairs]
    alphas = [alpha_vector(tree, *p) for p in tree.pairs]
    for it in range(1, max_iters + 1):
        v1 = [rng.randint(-box, box) for _ in range(m)]
        v2 = [rng.randint(-box, box) for _ in range(m)]
        # integer screen first; the certificate is rebuilt exactly below
        diffs = [sum(v1[e] - v2[e] for e in path) for path in paths]
        if 0 in diffs:
            continue
        r1 = rank_of_rows([a for a, d in zip(alphas, diffs) if d > 0], m)
        r2 = rank_of_rows([a for a, d in zip(alphas, diffs) if d < 0], m)
        if r1 + r2 >= target and (ranks is None or (r1, r2) == tuple(ranks)):
            log.info("witness found after %d draws", it)
            cert = certify(tree, WitnessPair(v1, v2), seed, method="search", iterations=it, box=box)
            assert (cert.rank1, cert.rank2) == (r1, r2)
            return cert
    log.info("no witness reaching %d in %d draws", target, max_iters)
    return None


# ---------------------------------------------------------------------------
# lifting


class LiftError(ValueError):
    pass


@dataclass(frozen=True)
class LiftData:
    """Edges and leaves of one lifting step, in the big tree's EdgeIds."""

    new_leaf: int
    e_a: int
    e_b: int
    e_new: int
    merged: int                  # EdgeId of the merged edge in the restriction
    leaves: tuple[int, int, int, int]


def _lift_geometry(big: PhyloTree, new_leaf: int):
    e_new = big.pendant_edge(new_leaf)
    u = big.adjacency[new_leaf][0][0]
    (ua, ea), (ub, eb) = [(w, e) for w, e in big.adjacency[u] if w != new_leaf]
    side_a = sorted(big.side(ea, ua))
    side_b = sorted(big.side(eb, ub))
    return u, e_new, (ua, ea, side_a), (ub, eb, side_b)


def lift_witness(big: PhyloTree, w: WitnessPair, leaves: Sequence[int] | None = None,
                 new_leaf: int | None = None, seed: int = 0,
                 max_attempts: int = 50) -> tuple[WitnessPair, LiftData]:
    """Extend a witness on restrict(big, leaves - {new_leaf}) to ``big``.

    The six new coordinates solve the exact linear system that keeps every old
    pair's winner and splits {L1, L2} and {L3, L4} between the two copies; a
    small random perturbation then removes ties, retried with smaller steps.
    """
    x = max(big.leaves) if new_leaf is None else new_leaf
    if x not in big.leaves:
        raise LiftError(f"{x} is not a leaf")
    if big.in_cherry(x):
        raise LiftError(f"leaf {x} is in a cherry")
    res = restrict(big, [l for l in big.leaves if l != x])
    small = res.tree
    if len(w.v1) != small.num_edges:
        raise LiftError(f"witness length {len(w.v1)} does not match restriction ({small.num_edges} edges)")
    n = small.n
    old_sets = winning_directions(small, w)
    r_old = (span_rank(small, old_sets.d1), span_rank(small, old_sets.d2))
    if min(r_old) < 2 * n - 5:
        raise LiftError(f"input witness has ranks {r_old}, need ({2 * n - 5}, {2 * n - 5})")

    u, e_new, (ua, ea, side_a), (ub, eb, side_b) = _lift_geometry(big, x)
    old_of = {}  # big edge -> small edge, for edges that survive unchanged
    merged = None
    for k, chain in res.provenance.items():
        if len(chain) == 1:
            old_of[chain[0]] = k
        elif set(chain) == {ea, eb}:
            merged = k
    if merged is None:
        raise AssertionError("restriction did not merge the two edges at the new leaf")

    def weight_from(vertex: int, leaf: int, v: Sequence[Fraction]) -> Fraction:
        return sum((v[old_of[e]] for e in big.vertex_path(vertex, leaf)), Fraction(0))

    def gap(vertex, leaf):
        return weight_from(vertex, leaf, w.v2) - weight_from(vertex, leaf, w.v1)

    def pick(vertex, side, given):
        if given is not None:
            l1, l2 = given
            if l1 == l2 or l1 not in side or l2 not in side:
                raise LiftError(f"leaves {given} are not two distinct leaves behind the same new edge")
            if gap(vertex, l1) == gap(vertex, l2):
                raise LiftError(f"leaves {given} cannot be split by the new coordinates")
            return l1, l2
        for l1, l2 in itertools.combinations(side, 2):
            if gap(vertex, l1) != gap(vertex, l2):
                return l1, l2
        raise LiftError("no leaf pair on one side can be split")

    given = (None, None) if leaves is None else (tuple(leaves[:2]), tuple(leaves[2:]))
    if leaves is not None and len(leaves) != 4:
        raise LiftError("need exactly four leaves L1..L4")
    L1, L2 = pick(ua, side_a, given[0])
    L3, L4 = pick(ub, side_b, given[1])

    def half(vertex, leaf):
        return gap(vertex, leaf) / 2

    # unknowns: w1a, w1b, w1x, w2a, w2b, w2x
    A = ExactMatrix.from_rows([
        [1, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 1],
        [0, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 1],
        [1, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 0],
    ])
    rhs = [half(ua, L1), -half(ua, L2), half(ub, L3), -half(ub, L4), w.v1[merged], w.v2[merged]]
    sol = solve(A, rhs)
    if sol.kind != "unique":
        raise AssertionError("lifting system is singular")
    w1a, w1b, w1x, w2a, w2b, w2x = sol.x

    m = big.num_edges
    base1, base2 = [Fraction(0)] * m, [Fraction(0)] * m
    for e, k in old_of.items():
        base1[e], base2[e] = w.v1[k], w.v2[k]
    base1[ea], base1[eb], base1[e_new] = w1a, w1b, w1x
    base2[ea], base2[eb], base2[e_new] = w2a, w2b, w2x

    data = LiftData(x, ea, eb, e_new, merged, (L1, L2, L3, L4))
    old_winner = {p: 1 for p in old_sets.d1}
    old_winner.update({p: 2 for p in old_sets.d2})

    def acceptable(cand: WitnessPair) -> bool:
        sets = winning_directions(big, cand)
        if sets.ties:
            return False
        winner = {p: 1 for p in sets.d1}
        winner.update({p: 2 for p in sets.d2})
        if any(winner[p] != s for p, s in old_winner.items()):
            return False
        pair = lambda l: (l, x) if l < x else (x, l)
        return (winner[pair(L1)] != winner[pair(L2)]) and (winner[pair(L3)] != winner[pair(L4)])

    rng = random.Random(seed)
    for _ in range(max_attempts):
        d1 = [rng.randint(-1000, 1000) for _ in range(m)]
        d2 = [rng.randint(-1000, 1000) for _ in range(m)]
        k = 1
        while k <= 256:
            eps = Fraction(1, 2 ** k)
            cand = WitnessPair([a + eps * b for a, b in zip(base1, d1)],
                               [a + eps * b for a, b in zip(base2, d2)])
            if acceptable(cand):
                return cand, data
            k *= 2
    raise LiftError("perturbation did not produce a generic witness")


def strip_sequence(tree: PhyloTree) -> list[int]:
    """Leaves removed, in order, to reach a tree whose leaves all lie in cherries.

    At each step the largest label not in a cherry is removed; this never changes
    the number of cherries.
    """
    removed = []
    cur = tree
    while True:
        free = [l for l in cur.leaves if not cur.in_cherry(l)]
        if not free:
            return removed
        x = max(free)
        removed.append(x)
        cur = restrict(cur, [l for l in cur.leaves if l != x]).tree


def lift_chain(tree: PhyloTree, seed: int = 0, max_iters: int = 100_000) -> WitnessCertificate:
    """Certificate of rank pair (2n-5, 2n-5) for a tree with 3 or 4 cherries.

    Strips non-cherry leaves down to the 6-leaf snowflake or the 8-leaf
    four-cherry tree, searches there, and lifts back one leaf at a time.
    """
    c = len(tree.cherries())
    if c not in (3, 4):
        raise LiftError(f"lift chain needs 3 or 4 cherries, tree has {c}")
    removed = strip_sequence(tree)
    trees = [tree]
    for x in removed:
        cur = trees[-1]
        trees.append(restrict(cur, [l for l in cur.leaves if l != x]).tree)
    base = trees[-1]
    nb = base.n
    cert = search_witness(base, 2 * (2 * nb - 5), seed=seed, max_iters=max_iters,
                          ranks=(2 * nb - 5, 2 * nb - 5))
    if cert is None:
        raise LiftError(f"base search failed on {base.to_newick()}")
    w = cert.witness
    steps = []
    for step, (big, x) in enumerate(zip(reversed(trees[:-1]), reversed(removed))):
        w, data = lift_witness(big, w, new_leaf=x, seed=seed + step + 1)
        r = rank_pair(big, w)
        want = 2 * big.n - 5
        if r != (want, want):
            raise AssertionError(f"lift to {big.to_newick()} gave ranks {r}, expected ({want}, {want})")
        steps.append({"leaf": x, "leaves": list(data.leaves)})
    return certify(tree, w, seed, method="lift-chain", base=base.to_json(),
                   base_iterations=cert.metadata["iterations"], steps=steps)
