"""Sparse polynomials in Pluecker variables p_ij and the Pfaffian generators built from them.

A monomial is a sorted tuple of variables ``(i, j)`` (repeats allowed); a
``SparsePoly`` maps monomials to nonzero integer coefficients. Pfaffian terms carry
the sign (-1)**(number of crossing pairs) of their perfect matching, which gives
the quadric p_ij p_kl - p_ik p_jl + p_il p_jk on four indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .tree import (
    CircularEmbedding, Pair, PhyloTree, Quartet, generic_lengths, quartet_topology, relabel_leaves,
    tree_metric_weights,
)

Var = Pair
Monomial = tuple[Var, ...]


def _var(i: int, j: int) -> Var:
    if i == j:
        raise ValueError(f"p_{i}{i} is not a variable")
    return (i, j) if i < j else (j, i)


def monomial(*vars: Iterable[int]) -> Monomial:
    return tuple(sorted(_var(*v) for v in vars))


@dataclass(frozen=True)
class SparsePoly:
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[Monomial, int]) -> "SparsePoly":
        return cls(tuple(sorted((tuple(sorted(m)), c) for m, c in d.items() if c != 0)))

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Monomial, int]]) -> "SparsePoly":
        acc: dict[Monomial, int] = {}
        for m, c in pairs:
            m = tuple(sorted(m))
            acc[m] = acc.get(m, 0) + c
        return cls.from_dict(acc)

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return SparsePoly(tuple((m, -c) for m, c in self.terms))

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        return SparsePoly.from_terms(self.terms + other.terms)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        return SparsePoly.from_terms((a + b, c * d) for a, c in self.terms for b, d in other.terms)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def coefficient(self, m: Monomial) -> int:
        return self.as_dict().get(tuple(sorted(m)), 0)

    def variables(self) -> set[Var]:
        return {v for m, _ in self.terms for v in m}

    def evaluate(self, values):
        """Substitute ``values[(i, j)]`` (a mapping or a callable) for each p_ij."""
        get = values if callable(values) else values.__getitem__
        total = 0
        for m, c in self.terms:
            t = c
            for v in m:
                t = t * get(v)
            total = total + t
        return total

    def equal_up_to_sign(self, other: "SparsePoly") -> bool:
        return self == other or self == -other

    def to_json(self) -> dict:
        return {"terms": [{"c": c, "vars": [list(v) for v in m]} for m, c in self.terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SparsePoly":
        return cls.from_terms((tuple(_var(*v) for v in t["vars"]), int(t["c"])) for t in data["terms"])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(sign + mag + "".join(f"p_{{{i},{j}}}" for i, j in m))
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


# ---------------------------------------------------------------------------
# matchings and Pfaffians


def perfect_matchings(labels: Iterable[int]) -> list[tuple[Var, ...]]:
    """All perfect matchings of an even label set, pairs sorted, in deterministic order."""
    items = sorted(labels)
    if len(set(items)) != len(items):
        raise ValueError("duplicate labels")
    if len(items) % 2 or not items:
        raise ValueError("need a nonempty set of even size")

    def rec(rest: list[int]) -> Iterator[list[Var]]:
        if not rest:
            yield []
            return
        first = rest[0]
        for k in range(1, len(rest)):
            pair = (first, rest[k])
            for tail in rec(rest[1:k] + rest[k + 1:]):
                yield [pair] + tail

    return [tuple(m) for m in rec(items)]


def crossings(matching: Sequence[Var]) -> int:
    count = 0
    for (a, b), (c, d) in itertools.combinations(matching, 2):
        if a > c:
            a, b, c, d = c, d, a, b
        if a < c < b < d:
            count += 1
    return count


def matching_sign(matching: Sequence[Var]) -> int:
    return -1 if crossings(matching) % 2 else 1


def pfaffian_polynomial(labels: Iterable[int]) -> SparsePoly:
    labels = list(labels)
    if len(labels) < 4:
        raise ValueError("Pfaffian generators need at least four indices")
    return SparsePoly.from_terms((tuple(sorted(m)), matching_sign(m)) for m in perfect_matchings(labels))


def plucker_quadric(i: int, j: int, k: int, l: int) -> SparsePoly:
    return pfaffian_polynomial((i, j, k, l))


def pfaffian_value(matrix: Sequence[Sequence[int]]) -> int:
    """Pfaffian of a skew-symmetric matrix by expansion along the first row."""
    n = len(matrix)
    if n % 2:
        return 0

    def rec(idx: tuple[int, ...]) -> int:
        if not idx:
            return 1
        first, rest = idx[0], idx[1:]
        total = 0
        for k, j in enumerate(rest):
            a = matrix[first][j]
            if a:
                sub = rest[:k] + rest[k + 1:]
                total += (-1) ** k * a * rec(sub)
        return total

    return rec(tuple(range(n)))


def crossing_monomial(labels: Iterable[int]) -> Monomial:
    """Pair the a-th smallest index with the (a+r)-th, for a 2r-element set."""
    s = sorted(labels)
    if len(s) % 2 or len(set(s)) != len(s) or not s:
        raise ValueError("need a set of even size")
    r = len(s) // 2
    return tuple(sorted((s[a], s[a + r]) for a in range(r)))


# ---------------------------------------------------------------------------
# weights and initial forms

WeightVector = Mapping[Var, Fraction]


def omega_weight(m: Monomial, omega: WeightVector) -> Fraction:
    try:
        return sum((Fraction(omega[v]) for v in m), Fraction(0))
    except KeyError as exc:
        raise KeyError(f"no weight for variable p_{exc.args[0]}") from None


def initial_form(p: SparsePoly, omega: WeightVector) -> SparsePoly:
    """Terms of maximal omega-weight."""
    if not p:
        return p
    weights = [omega_weight(m, omega) for m, _ in p.terms]
    top = max(weights)
    return SparsePoly(tuple(t for t, w in zip(p.terms, weights) if w == top))


def tree_weights(tree: PhyloTree, lengths: Sequence | None = None) -> dict[Var, Fraction]:
    return tree_metric_weights(tree, generic_lengths(tree) if lengths is None else lengths)


def quartet_binomial(q: Quartet) -> SparsePoly:
    """With i<j<k<l: p_ik p_jl - p_il p_jk for ij|kl, and p_ij p_kl - p_ik p_jl for il|jk."""
    i, j, k, l = sorted(q.left + q.right)
    if q == Quartet.of((i, k), (j, l)):
        raise ValueError(f"quartet {q} crosses; the tree is not circularly labeled")
    if q == Quartet.of((i, j), (k, l)):
        return SparsePoly.from_dict({monomial((i, k), (j, l)): 1, monomial((i, l), (j, k)): -1})
    return SparsePoly.from_dict({monomial((i, j), (k, l)): 1, monomial((i, k), (j, l)): -1})


def jt_generators(emb: CircularEmbedding | PhyloTree) -> list[SparsePoly]:
    tree = emb.tree if isinstance(emb, CircularEmbedding) else emb
    return [quartet_binomial(quartet_topology(tree, K)) for K in itertools.combinations(tree.leaves, 4)]


def initial_pfaffian_generators(emb: CircularEmbedding | PhyloTree, s: int,
                                lengths: Sequence | None = None) -> list[SparsePoly]:
    """Initial forms of the 2(s+1)-Pfaffians, one per index set in lexicographic order."""
    if s < 1:
        raise ValueError("secant order must be at least 1")
    tree = emb.tree if isinstance(emb, CircularEmbedding) else emb
    omega = tree_weights(tree, lengths)
    return [initial_form(pfaffian_polynomial(K), omega)
            for K in itertools.combinations(tree.leaves, 2 * (s + 1))]


def phi_tree(tree: PhyloTree, y: Sequence) -> dict[Var, object]:
    """The monomial parametrization p_ij -> product of y_e along the path."""
    out = {}
    for p in tree.pairs:
        t = 1
        for e in tree.paths[p]:
            t = t * y[e]
        out[p] = t
    return out


def incomparable_pair_ideal(n: int) -> list[Monomial]:
    """Products p_ij p_kl of variables incomparable under p_ij <= p_kl iff i<=k and j<=l."""
    vars_ = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for (i, j), (k, l) in itertools.combinations(vars_, 2):
        if not ((i <= k and j <= l) or (k <= i and l <= j)):
            out.append(monomial((i, j), (k, l)))
    return sorted(out)


# ---------------------------------------------------------------------------
# linear occurrence of p_{j,n+1}


@dataclass(frozen=True)
class LinearOccurrenceWitness:
    tree: PhyloTree                 # relabeled; the distinguished leaf is n+1
    relabel: dict[int, int]         # input label -> new label
    case: int
    r: int
    j: int
    index_set: tuple[int, ...]
    chain: tuple[Monomial, ...]
    quartets: tuple[Quartet, ...]   # quartet justifying each swap
    k: int | None                   # Case 2 only
    g: SparsePoly
    h: SparsePoly

    @property
    def target(self) -> Var:
        return _var(self.j, self.tree.n)


def _rooted_leaf_order(tree: PhyloTree, v: int, parent: int, larger_first: bool) -> list[int]:
    if v > 0:
        return [v]
    kids = [w for w, _ in tree.adjacency[v] if w != parent]
    blocks = [_rooted_leaf_order(tree, w, v, False) for w in kids]
    if larger_first:
        blocks.sort(key=lambda b: (-len(b), min(b)))
    else:
        blocks.sort(key=min)
    return [x for b in blocks for x in b]


def _swap(m: Monomial, old: Sequence[Var], new: Sequence[Var]) -> Monomial:
    rest = list(m)
    for v in old:
        rest.remove(_var(*v))
    return tuple(sorted(rest + [_var(*v) for v in new]))


def linear_occurrence_witness(tree: PhyloTree, r: int, j: int) -> LinearOccurrenceWitness:
    """Relabel an (n+1)-leaf tree and exhibit an initial Pfaffian term linear in p_{j,n+1}.

    The relabeling puts a split side A (of size r+1 if one exists, otherwise the
    smallest size in (r+1, 2r]) at labels n+1, 1, 2, ... in clockwise order; for
    the second case the leaves of A are visited starting from the larger child of
    its root. ``j`` refers to the new labels and must satisfy 2r < j <= n.
    """
    n1 = tree.n
    n = n1 - 1
    if r < 1 or n < 2 * r + 1:
        raise ValueError(f"need n >= 2r+1 (n={n}, r={r})")
    if not 2 * r < j <= n:
        raise ValueError(f"need 2r < j <= n, got j={j}")

    sides = []
    for eid, (u, v) in enumerate(tree.edges):
        for root, other in ((u, v), (v, u)):
            sides.append((len(tree.side(eid, root)), eid, root, other))
    exact = [s for s in sides if s[0] == r + 1]
    if exact:
        case = 1
        size, eid, root, other = min(exact)
    else:
        case = 2
        size, eid, root, other = min(s for s in sides if r + 1 < s[0] <= 2 * r)
    a_order = _rooted_leaf_order(tree, root, other, larger_first=(case == 2))
    b_order = _rooted_leaf_order(tree, other, root, larger_first=False)
    order = a_order + b_order
    mapping = {order[0]: n1}
    mapping.update({leaf: k for k, leaf in enumerate(order[1:], start=1)})
    t = relabel_leaves(tree, mapping)
    index_set = tuple(range(1, 2 * r + 1)) + (j, n1)
    m0 = crossing_monomial(index_set)
    chain = [m0]
    quartets = []
    k = None
    if case == 1:
        old, new = [(r, j), (r + 1, n1)], [(r, r + 1), (j, n1)]
        quartets.append(Quartet.of((r, n1), (r + 1, j)))
        chain.append(_swap(m0, old, new))
    else:
        kids = [w for w, _ in tree.adjacency[root] if w != other]
        k = max(len(_rooted_leaf_order(tree, w, root, False)) for w in kids) - 1
        if not k < r:
            raise AssertionError("larger side of A must have fewer than r+1 leaves")
        c = k + r + 1
        quartets.append(Quartet.of((n1, k), (r + 1, c)))
        m1 = _swap(m0, [(k, c), (r + 1, n1)], [(k, r + 1), (c, n1)])
        quartets.append(Quartet.of((r, n1), (j, c)))
        m2 = _swap(m1, [(r, j), (c, n1)], [(r, c), (j, n1)])
        chain += [m1, m2]

    for q in quartets:
        if quartet_topology(t, q.left + q.right) != q:
            raise AssertionError(f"relabeled tree does not display {q}")
    omega = tree_weights(t)
    weights = {omega_weight(m, omega) for m in chain}
    if len(weights) != 1:
        raise AssertionError("chain monomials differ in weight")
    target = _var(j, n1)
    if chain[-1].count(target) != 1:
        raise AssertionError("final monomial is not linear in the target variable")
    init = initial_form(pfaffian_polynomial(index_set), omega)
    if any(init.coefficient(m) == 0 for m in chain):
        raise AssertionError("chain leaves the initial form")
    g_terms, h_terms = [], []
    for m, coef in init:
        if target in m:
            rest = list(m)
            rest.remove(target)
            g_terms.append((tuple(rest), coef))
        else:
            h_terms.append((m, coef))
    return LinearOccurrenceWitness(
        tree=t, relabel=mapping, case=case, r=r, j=j, index_set=index_set,
        chain=tuple(chain), quartets=tuple(quartets), k=k,
        g=SparsePoly.from_terms(g_terms), h=SparsePoly.from_terms(h_terms),
    )
