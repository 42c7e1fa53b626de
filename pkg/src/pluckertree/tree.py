"""Binary phylogenetic trees: Newick input, circular embeddings and combinatorial queries.

Vertices are plain ints. A leaf vertex *is* its label (a positive int); internal
vertices are negative. Edges are stored as a tuple of ``(u, v)`` pairs and an
EdgeId is simply the position in that tuple. Trees are immutable; operations that
change the shape return a new tree together with a provenance map from the new
EdgeIds to the old ones.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Pair = tuple[int, int]


class TreeError(ValueError):
    """Raised for structurally invalid trees (non-binary, disconnected, ...)."""


class NewickError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True, eq=False)
class PhyloTree:
    """Unrooted binary tree whose leaves carry distinct positive integer labels."""

    edges: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(_pair(u, v) for u, v in self.edges))
        self._validate()

    def _validate(self):
        adj = self.adjacency
        leaves = [v for v in adj if v > 0]
        if len(leaves) < 3:
            raise TreeError("a binary tree needs at least 3 leaves")
        for v, nbrs in adj.items():
            if v > 0 and len(nbrs) != 1:
                raise TreeError(f"leaf {v} has degree {len(nbrs)}")
            if v < 0 and len(nbrs) != 3:
                raise TreeError(f"internal vertex {v} has degree {len(nbrs)}")
        if 0 in adj:
            raise TreeError("vertex id 0 is reserved")
        n = len(leaves)
        if len(self.edges) != 2 * n - 3 or len(set(self.edges)) != len(self.edges):
            raise TreeError(f"expected {2 * n - 3} distinct edges, got {len(self.edges)}")
        seen = {leaves[0]}
        stack = [leaves[0]]
        while stack:
            for w, _ in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            raise TreeError("tree is not connected")

    # -- basic structure -------------------------------------------------

    @cached_property
    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> sorted list of (neighbour, edge id)."""
        adj: dict[int, list[tuple[int, int]]] = {}
        for eid, (u, v) in enumerate(self.edges):
            adj.setdefault(u, []).append((v, eid))
            adj.setdefault(v, []).append((u, eid))
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(sorted(v for v in self.adjacency if v > 0))

    @property
    def n(self) -> int:
        return len(self.leaves)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def pairs(self) -> tuple[Pair, ...]:
        """All leaf pairs (i, j) with i < j in lexicographic order."""
        return tuple(itertools.combinations(self.leaves, 2))

    def pendant_edge(self, leaf: int) -> int:
        return self.adjacency[leaf][0][1]

    def is_canonical(self) -> bool:
        """Leaves are exactly 1..n."""
        return self.leaves == tuple(range(1, self.n + 1))

    def __eq__(self, other):
        if not isinstance(other, PhyloTree):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return f"PhyloTree({self.to_newick()})"

    # -- paths and metrics -----------------------------------------------

    def _bfs_parents(self, root: int) -> dict[int, tuple[int, int] | None]:
        parent: dict[int, tuple[int, int] | None] = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, eid in self.adjacency[u]:
                if w not in parent:
                    parent[w] = (u, eid)
                    queue.append(w)
        return parent

    def vertex_path(self, a: int, b: int) -> tuple[int, ...]:
        """Edge ids on the path between two arbitrary vertices."""
        parent = self._bfs_parents(a)
        path = []
        v = b
        while parent[v] is not None:
            u, eid = parent[v]
            path.append(eid)
            v = u
        return tuple(reversed(path))

    @cached_property
    def paths(self) -> dict[Pair, frozenset[int]]:
        """(i, j) -> set of edge ids on the leaf-to-leaf path."""
        out = {}
        for i in self.leaves:
            parent = self._bfs_parents(i)
            for j in self.leaves:
                if j <= i:
                    continue
                path = set()
                v = j
                while parent[v] is not None:
                    u, eid = parent[v]
                    path.add(eid)
                    v = u
                out[(i, j)] = frozenset(path)
        return out

    def path(self, i: int, j: int) -> frozenset[int]:
        if i == j:
            raise ValueError("path endpoints must differ")
        return self.paths[_pair(i, j)]

    def distance(self, i: int, j: int, lengths: Sequence | None = None):
        p = self.path(i, j)
        if lengths is None:
            return len(p)
        return sum((lengths[e] for e in p), Fraction(0))

    # -- splits, quartets, clusters --------------------------------------

    def side(self, eid: int, vertex: int) -> frozenset[int]:
        """Leaves on the side of edge ``eid`` containing ``vertex``."""
        u, v = self.edges[eid]
        if vertex not in (u, v):
            raise ValueError(f"vertex {vertex} is not an endpoint of edge {eid}")
        seen = {vertex, v if vertex == u else u}
        stack = [vertex]
        out = set()
        while stack:
            x = stack.pop()
            if x > 0:
                out.add(x)
            for w, _ in self.adjacency[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(out)

    @cached_property
    def splits(self) -> tuple["Split", ...]:
        out = []
        for eid, (u, v) in enumerate(self.edges):
            a, b = self.side(eid, u), self.side(eid, v)
            if min(b) < min(a):
                a, b = b, a
            out.append(Split(a, b, eid))
        return tuple(out)

    def nontrivial_splits(self) -> list["Split"]:
        return [s for s in self.splits if min(len(s.block_a), len(s.block_b)) > 1]

    def quartet(self, i: int, j: int, k: int, l: int) -> "Quartet":
        return quartet_topology(self, (i, j, k, l))

    def cherries(self) -> list[Pair]:
        out = []
        for v, nbrs in self.adjacency.items():
            if v < 0:
                leafs = sorted(w for w, _ in nbrs if w > 0)
                out.extend(itertools.combinations(leafs, 2))
        return sorted(out)

    def in_cherry(self, leaf: int) -> bool:
        return any(leaf in c for c in self.cherries())

    def _rooted_is_caterpillar(self, root: int, parent: int) -> bool:
        # every internal node of the rooted side must have a leaf child
        stack = [(root, parent)]
        while stack:
            x, p = stack.pop()
            if x > 0:
                continue
            kids = [w for w, _ in self.adjacency[x] if w != p]
            if not any(w > 0 for w in kids):
                return False
            stack.extend((w, x) for w in kids)
        return True

    @cached_property
    def clusters(self) -> tuple[frozenset[int], ...]:
        """Leaf sets of every rooted-caterpillar side cut off by one edge (size >= 2)."""
        out = set()
        for eid, (u, v) in enumerate(self.edges):
            for root, other in ((u, v), (v, u)):
                leaves = self.side(eid, root)
                if len(leaves) >= 2 and self._rooted_is_caterpillar(root, other):
                    out.add(leaves)
        return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))

    # -- output ------------------------------------------------------------

    def to_newick(self) -> str:
        """Newick string rooted at the neighbour of the smallest leaf."""
        start = self.leaves[0]
        top = self.adjacency[start][0][0]

        def rec(v: int, parent: int) -> str:
            if v > 0:
                return str(v)
            kids = sorted((w for w, _ in self.adjacency[v] if w != parent),
                          key=lambda w: min(self._side_leaves(w, v)))
            return "(" + ",".join(rec(w, v) for w in kids) + ")"

        kids = sorted((w for w, _ in self.adjacency[top] if w != start),
                      key=lambda w: min(self._side_leaves(w, top)))
        return "(" + ",".join([str(start)] + [rec(w, top) for w in kids]) + ");"

    def _side_leaves(self, v: int, parent: int) -> frozenset[int]:
        for w, eid in self.adjacency[v]:
            if w == parent:
                return self.side(eid, v)
        raise ValueError("not adjacent")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [[u, v, eid] for eid, (u, v) in enumerate(self.edges)],
            "leafOrder": list(self.leaves),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PhyloTree":
        edges = sorted(data["edges"], key=lambda e: e[2])
        if [e[2] for e in edges] != list(range(len(edges))):
            raise TreeError("edge ids must be 0..m-1")
        tree = cls(tuple((int(u), int(v)) for u, v, _ in edges))
        if "n" in data and data["n"] != tree.n:
            raise TreeError("leaf count does not match edges")
        return tree


@dataclass(frozen=True)
class Split:
    block_a: frozenset[int]
    block_b: frozenset[int]
    edge: int

    def __str__(self):
        sep = "," if max(self.block_a | self.block_b) >= 10 else ""
        return sep.join(map(str, sorted(self.block_a))) + "|" + sep.join(map(str, sorted(self.block_b)))


@dataclass(frozen=True)
class Quartet:
    """Quartet ab|cd with a < b, c < d and a < c."""

    left: Pair
    right: Pair

    @classmethod
    def of(cls, p: Pair, q: Pair) -> "Quartet":
        p, q = _pair(*p), _pair(*q)
        return cls(*sorted((p, q)))

    def separates(self, p: Pair, q: Pair) -> bool:
        return Quartet.of(p, q) == self

    def __str__(self):
        return f"{self.left[0]}{self.left[1]}|{self.right[0]}{self.right[1]}"


@dataclass(frozen=True)
class CircularEmbedding:
    """A tree relabeled so that 1..n is a clockwise planar order of its leaves.

    ``relabel`` maps the labels of the input tree to the new labels.
    """

    tree: PhyloTree
    relabel: dict[int, int] = field(default_factory=dict)

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(range(1, self.tree.n + 1))


# ---------------------------------------------------------------------------
# Newick

_TOKEN = re.compile(r"\s*(?:(?P<punct>[(),;:])|(?P<label>[^\s(),;:\[\]]+)|(?P<comment>\[[^\]]*\]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise NewickError(f"unexpected character {text[pos]!r}", pos)
        if m.group("punct"):
            out.append((m.group("punct"), m.start("punct")))
        elif m.group("label"):
            out.append((m.group("label"), m.start("label")))
        pos = m.end()
    return out


def parse_newick(text: str, suppress_unary: bool = False) -> PhyloTree:
    """Parse a Newick string into a binary tree.

    A bifurcating root is always suppressed (that is the usual rooted encoding of
    an unrooted tree). Any other degree-2 vertex, i.e. a node written with one
    child, is rejected unless ``suppress_unary`` is set. Branch lengths and
    internal node labels are read and discarded. Leaf labels that are exactly
    the integers 1..n are kept; otherwise leaves are numbered 1..n in input
    order.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise NewickError("empty input", 0)
    pos = 0
    children: dict[int, list[int]] = {}
    node_pos: dict[int, int] = {}
    leaf_names: list[tuple[str, int]] = []
    counter = itertools.count(1)

    def peek():
        return tokens[pos] if pos < len(tokens) else ("", len(text))

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if expected is not None and tok[0] != expected:
            raise NewickError(f"expected {expected!r}, found {tok[0] or 'end of input'!r}", tok[1])
        pos += 1
        return tok

    def skip_length():
        if peek()[0] == ":":
            take()
            tok = take()
            try:
                float(tok[0])
            except ValueError:
                raise NewickError(f"bad branch length {tok[0]!r}", tok[1]) from None

    def node() -> int:
        tok = peek()
        if tok[0] == "(":
            take()
            nid = -next(counter)
            node_pos[nid] = tok[1]
            kids = [node()]
            while peek()[0] == ",":
                take()
                kids.append(node())
            take(")")
            if peek()[0] not in "(),;:" and peek()[0]:
                take()  # internal label
            skip_length()
            children[nid] = kids
            return nid
        if tok[0] in "(),;:" or not tok[0]:
            raise NewickError(f"expected a label or '(', found {tok[0] or 'end of input'!r}", tok[1])
        take()
        skip_length()
        leaf_names.append(tok)
        return len(leaf_names)  # provisional positive id = input order

    root = node()
    take(";")
    if pos != len(tokens):
        raise NewickError("trailing input after ';'", tokens[pos][1])

    names = [name for name, _ in leaf_names]
    seen = {}
    for name, p in leaf_names:
        if name in seen:
            raise NewickError(f"duplicate leaf label {name!r}", p)
        seen[name] = p
    if all(s.isdigit() for s in names) and sorted(int(s) for s in names) == list(range(1, len(names) + 1)):
        label_of = {k + 1: int(s) for k, s in enumerate(names)}
    else:
        label_of = {k + 1: k + 1 for k in range(len(names))}

    def relabel(x: int) -> int:
        return label_of[x] if x > 0 else x

    # collapse unary nodes and the root
    def resolve(v: int) -> int:
        while v < 0 and len(children[v]) == 1:
            if not suppress_unary:
                raise NewickError("node with a single child (degree-2 vertex)", node_pos[v])
            v = children[v][0]
        return v

    edges: list[Pair] = []

    def build(v: int):
        kids = [resolve(c) for c in children[v]]
        if len(kids) != 2:
            raise NewickError(f"non-binary vertex with {len(kids)} children", node_pos[v])
        for c in kids:
            edges.append((relabel(v), relabel(c)))
            if c < 0:
                build(c)

    if root > 0:
        raise NewickError("a tree needs at least three leaves", 0)
    root = resolve(root)
    top = [resolve(c) for c in children[root]]
    if len(top) == 2:
        a, b = top
        if a > 0 and b > 0:
            raise NewickError("a tree needs at least three leaves", 0)
        edges.append((relabel(a), relabel(b)))
        for c in (a, b):
            if c < 0:
                build(c)
    elif len(top) == 3:
        for c in top:
            edges.append((relabel(root), relabel(c)))
            if c < 0:
                build(c)
    else:
        raise NewickError(f"root has {len(top)} children", node_pos[root])
    return _renumber_internal(edges)


def _renumber_internal(edges: Iterable[Pair]) -> PhyloTree:
    """Renumber internal vertices -1, -2, ... in order of first appearance."""
    mapping: dict[int, int] = {}
    out = []
    for u, v in edges:
        for x in (u, v):
            if x < 0 and x not in mapping:
                mapping[x] = -(len(mapping) + 1)
        out.append((mapping.get(u, u), mapping.get(v, v)))
    return PhyloTree(tuple(out))


# ---------------------------------------------------------------------------
# embeddings and queries


def planar_leaf_order(tree: PhyloTree) -> list[int]:
    """Leaves in depth-first order from the smallest leaf, children by smallest leaf."""
    start = tree.leaves[0]
    order = [start]

    def rec(v: int, parent: int):
        if v > 0:
            order.append(v)
            return
        kids = [w for w, _ in tree.adjacency[v] if w != parent]
        kids.sort(key=lambda w: min(tree._side_leaves(w, v)))
        for w in kids:
            rec(w, v)

    rec(tree.adjacency[start][0][0], start)
    return order


def relabel_leaves(tree: PhyloTree, mapping: Mapping[int, int]) -> PhyloTree:
    """Rename leaves; EdgeIds are unchanged."""
    if sorted(mapping) != list(tree.leaves) or len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping must be a bijection on the leaves")
    if any(x <= 0 for x in mapping.values()):
        raise ValueError("leaf labels must be positive")
    return PhyloTree(tuple((mapping.get(u, u), mapping.get(v, v)) for u, v in tree.edges))


def circular_embed(tree: PhyloTree) -> CircularEmbedding:
    order = planar_leaf_order(tree)
    mapping = {leaf: k + 1 for k, leaf in enumerate(order)}
    return CircularEmbedding(relabel_leaves(tree, mapping), mapping)


def quartet_topology(tree: PhyloTree, leaves: Iterable[int]) -> Quartet:
    i, j, k, l = sorted(leaves)
    if len({i, j, k, l}) != 4:
        raise ValueError("quartet needs four distinct leaves")
    for x in (i, j, k, l):
        if x not in tree.adjacency or x < 0:
            raise ValueError(f"{x} is not a leaf label")
    d = tree.distance
    options = [((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k))]
    best = min(options, key=lambda o: d(*o[0]) + d(*o[1]))
    return Quartet.of(*best)


def cherries(tree: PhyloTree) -> list[Pair]:
    return tree.cherries()


def k_clusters(tree: PhyloTree, k: int) -> list[frozenset[int]]:
    """Leaf sets of the k-clusters; ``len`` of the result is c_k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return [c for c in tree.clusters if len(c) == k]


def cluster_counts(tree: PhyloTree, up_to: int) -> dict[int, int]:
    return {k: len(k_clusters(tree, k)) for k in range(2, up_to + 1)}


def cluster_variable_sizes(tree: PhyloTree) -> dict[Pair, int]:
    """(i, j) -> size of the smallest cluster containing both, for pairs in some cluster."""
    out = {}
    for c in tree.clusters:  # sorted by size, so the first hit is the smallest
        for p in itertools.combinations(sorted(c), 2):
            out.setdefault(p, len(c))
    return out


def cluster_variables(tree: PhyloTree, k: int) -> list[Pair]:
    """Pairs whose smallest enclosing cluster has exactly k leaves.

    The count equals (k-1)*c_k whenever n > 2k-2; on smaller trees a cluster and
    its complement can overlap and share pairs.
    """
    return sorted(p for p, s in cluster_variable_sizes(tree).items() if s == k)


@dataclass(frozen=True)
class Restriction:
    tree: PhyloTree
    provenance: dict[int, tuple[int, ...]]  # new edge id -> old edge ids along the merged chain


def restrict(tree: PhyloTree, keep: Iterable[int]) -> Restriction:
    """Induced subtree on ``keep`` with degree-2 vertices suppressed.

    New EdgeIds are ordered by the smallest old EdgeId in each merged chain.
    """
    keep = sorted(set(keep))
    if len(keep) < 3:
        raise ValueError("restriction needs at least 3 leaves")
    for x in keep:
        if x not in tree.leaves:
            raise ValueError(f"{x} is not a leaf")
    used: set[int] = set()
    for i, j in itertools.combinations(keep, 2):
        used |= tree.path(i, j)
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in used:
        u, v = tree.edges[eid]
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    branch = {v for v, nb in adj.items() if len(nb) != 2}
    chains = []
    done: set[int] = set()
    for start in sorted(branch):
        for w, eid in adj[start]:
            if eid in done:
                continue
            chain = [eid]
            done.add(eid)
            cur = w
            while cur not in branch:
                nxt = [(x, e) for x, e in adj[cur] if e not in done]
                x, e = nxt[0]
                chain.append(e)
                done.add(e)
                cur = x
            chains.append((start, cur, tuple(chain)))
    chains.sort(key=lambda c: min(c[2]))
    new_tree = PhyloTree(tuple((a, b) for a, b, _ in chains))
    provenance = {k: tuple(sorted(c[2])) for k, c in enumerate(chains)}
    return Restriction(new_tree, provenance)


def restrict_quartet(tree: PhyloTree, keep: Iterable[int]) -> Quartet:
    keep = list(keep)
    if len(set(keep)) != 4:
        raise ValueError("need exactly four leaves")
    return quartet_topology(restrict(tree, keep).tree, keep)


@dataclass(frozen=True)
class Attachment:
    tree: PhyloTree
    removed: int          # edge id in the old tree
    e_a: int              # new edge id, old endpoint u .. new vertex
    e_b: int              # new edge id, new vertex .. old endpoint v
    e_new: int            # pendant edge of the new leaf
    provenance: dict[int, tuple[int, ...]]


def attach_leaf(tree: PhyloTree, edge: int, label: int) -> Attachment:
    """Subdivide ``edge`` and hang a new leaf ``label`` from the new vertex.

    Untouched edges keep their ids; e_a reuses the removed edge's slot and
    e_b, e_new are appended.
    """
    if label <= 0 or label in tree.adjacency:
        raise ValueError(f"label {label} is not a fresh positive label")
    if not 0 <= edge < tree.num_edges:
        raise ValueError(f"no edge {edge}")
    u, v = tree.edges[edge]
    w = min(x for x in tree.adjacency) - 1
    w = min(w, -1)
    edges = list(tree.edges)
    edges[edge] = (u, w)
    edges.append((w, v))
    edges.append((w, label))
    m = tree.num_edges
    prov = {e: (e,) for e in range(m)}
    prov[m] = (edge,)
    prov[m + 1] = ()
    return Attachment(PhyloTree(tuple(edges)), edge, edge, m, m + 1, prov)


def alpha_vector(tree: PhyloTree, i: int, j: int) -> tuple[int, ...]:
    """0/1 indicator over EdgeIds of the path between leaves i and j."""
    p = tree.path(i, j)
    return tuple(1 if e in p else 0 for e in range(tree.num_edges))


def incidence_rows(tree: PhyloTree) -> list[tuple[int, ...]]:
    return [alpha_vector(tree, i, j) for i, j in tree.pairs]


def tree_metric_weights(tree: PhyloTree, lengths: Sequence) -> dict[Pair, Fraction]:
    """omega_ij = total length of the path i -> j."""
    if len(lengths) != tree.num_edges:
        raise ValueError(f"need {tree.num_edges} lengths, got {len(lengths)}")
    lengths = [Fraction(x) for x in lengths]
    if any(x <= 0 for x in lengths):
        raise ValueError("edge lengths must be positive")
    return {p: sum((lengths[e] for e in tree.paths[p]), Fraction(0)) for p in tree.pairs}


_PRIMES_FROM_101 = [q for q in range(101, 2000) if all(q % d for d in range(2, int(q ** 0.5) + 1))]


def generic_lengths(tree: PhyloTree) -> list[Fraction]:
    """1 + 1/q_e with distinct primes q_e >= 101.

    A tie sum(c_e * len_e) == 0 with |c_e| < 101 forces every c_e to vanish, so
    only ties that hold for all tree metrics survive.
    """
    if tree.num_edges > len(_PRIMES_FROM_101):
        raise ValueError("tree too large for the built-in prime table")
    return [1 + Fraction(1, q) for q in _PRIMES_FROM_101[: tree.num_edges]]


# ---------------------------------------------------------------------------
# shape enumeration and standard trees


def _rooted_code(tree: PhyloTree, v: int, parent: int) -> str:
    if v > 0:
        return "L"
    kids = sorted(_rooted_code(tree, w, v) for w, _ in tree.adjacency[v] if w != parent)
    return "(" + "".join(kids) + ")"


def shape_code(tree: PhyloTree) -> str:
    """Label-free canonical form: minimum over edges of the edge-rooted code."""
    best = None
    for u, v in tree.edges:
        code = "".join(sorted((_rooted_code(tree, u, v), _rooted_code(tree, v, u))))
        if best is None or code < best:
            best = code
    return best


def enumerate_shapes(n: int) -> list[PhyloTree]:
    """One circularly labeled representative of every unlabeled binary tree with n leaves."""
    if n < 3:
        raise ValueError("n must be at least 3")
    shapes = [PhyloTree(((1, -1), (2, -1), (3, -1)))]
    for m in range(4, n + 1):
        seen = {}
        for t in shapes:
            for e in range(t.num_edges):
                big = attach_leaf(t, e, m).tree
                code = shape_code(big)
                if code not in seen:
                    seen[code] = circular_embed(big).tree
        shapes = [seen[c] for c in sorted(seen)]
    return shapes


def enumerate_circular_trees(n: int) -> list[PhyloTree]:
    """Every binary [n]-tree compatible with the circular order 1, ..., n.

    Leaf m is attached to an edge on the path from m-1 to 1, which is exactly
    the boundary arc it lands on; there are Catalan(n-2) such trees.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    trees = [PhyloTree(((1, -1), (2, -1), (3, -1)))]
    for m in range(4, n + 1):
        trees = [attach_leaf(t, e, m).tree for t in trees for e in sorted(t.path(m - 1, 1))]
    return trees


def caterpillar(n: int) -> PhyloTree:
    newick = "(1,2)"
    for k in range(3, n):
        newick = f"({newick},{k})"
    return parse_newick(f"({newick},{n});")


SNOWFLAKE = "((1,2),((3,4),(5,6)));"
CATERPILLAR6 = "((((1,2),3),4),(5,6));"
FOUR_CHERRY8 = "(((1,2),(3,4)),((5,6),(7,8)));"
# 13 leaves: cherries 12, 45, 78, 9 10, 11 12; 3-clusters 123, 456, 11 12 13
FIGURE2_13 = "(((1,2),3),((4,5),6),((7,8),((9,10),((11,12),13))));"
# 15 leaves: no split with 5 or 6 leaves on a side; the 7-leaf side {15,1..6}
# is rooted with 4 leaves {15,1,2,3} on one side of the root and 3 on the other
EXAMPLE33_15 = "(((15,1),(2,3)),(4,(5,6)),(((7,8),(9,10)),((11,12),(13,14))));"
