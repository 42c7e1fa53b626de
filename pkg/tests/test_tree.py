import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pluckertree.linalg import rank_of_rows
from pluckertree.tree import (
    NewickError, PhyloTree, Quartet, TreeError, alpha_vector, attach_leaf, caterpillar,
    circular_embed, cluster_variables, enumerate_circular_trees, enumerate_shapes, incidence_rows, k_clusters,
    parse_newick, quartet_topology, relabel_leaves, restrict, restrict_quartet, shape_code,
    tree_metric_weights,
)


def split_quartet(tree, leaves):
    """Oracle: the quartet is ab|cd iff some edge separates {a,b} from {c,d}."""
    i, j, k, l = sorted(leaves)
    for a, b in (((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k))):
        for s in tree.splits:
            if (set(a) <= s.block_a and set(b) <= s.block_b) or (set(a) <= s.block_b and set(b) <= s.block_a):
                return Quartet.of(a, b)
    raise AssertionError("no separating edge")


def scrambled(tree, seed):
    rng = random.Random(seed)
    labels = list(tree.leaves)
    perm = labels[:]
    rng.shuffle(perm)
    return relabel_leaves(tree, dict(zip(labels, perm)))


def random_tree(n, seed):
    rng = random.Random(seed)
    t = parse_newick("(1,2,3);")
    for leaf in range(4, n + 1):
        t = attach_leaf(t, rng.randrange(t.num_edges), leaf).tree
    return t


def check_structure(t: PhyloTree):
    assert t.num_edges == 2 * t.n - 3
    for v, nb in t.adjacency.items():
        assert len(nb) == (1 if v > 0 else 3)


# -- parsing ----------------------------------------------------------------


def test_parse_quartet():
    t = parse_newick("((1,2),(3,4));")
    assert t.n == 4
    assert [str(s) for s in t.nontrivial_splits()] == ["12|34"]


def test_parse_snowflake(snowflake):
    assert sorted(str(s) for s in snowflake.nontrivial_splits()) == ["1234|56", "1256|34", "12|3456"]


def test_parse_names_and_lengths():
    t = parse_newick("((a:0.1,b:2)90:1.5,(c,d)[comment]);")
    assert t.leaves == (1, 2, 3, 4)
    assert quartet_topology(t, (1, 2, 3, 4)) == Quartet.of((1, 2), (3, 4))


def test_parse_keeps_integer_labels():
    t = parse_newick("((3,1),(4,2));")
    assert quartet_topology(t, (1, 2, 3, 4)) == Quartet.of((1, 3), (2, 4))


def test_root_of_degree_two_is_collapsed():
    t = parse_newick("(1,(2,(3,4)));")
    assert [str(s) for s in t.nontrivial_splits()] == ["12|34"]


def test_unary_node_rejected_unless_flag():
    with pytest.raises(NewickError, match="single child"):
        parse_newick("(1,((2),(3,4)));")
    t = parse_newick("(1,((2),(3,4)));", suppress_unary=True)
    check_structure(t)


@pytest.mark.parametrize("text, msg", [
    ("((1,2),(3,4))", "expected ';'"),
    ("((1,2),(3,4);", "expected '\\)'"),
    ("((1,2,3),(4,5));", "non-binary"),
    ("((a,b),(a,c));", "duplicate"),
    ("(1,2);", "at least three"),
])
def test_parse_errors(text, msg):
    with pytest.raises(NewickError, match=msg) as err:
        parse_newick(text)
    assert err.value.position >= 0


def test_invalid_edge_lists():
    with pytest.raises(TreeError):
        PhyloTree(((1, -1), (2, -1)))
    with pytest.raises(TreeError):
        PhyloTree(((1, -1), (2, -1), (3, -2), (4, -2)))


def test_json_round_trip(figure2):
    assert PhyloTree.from_json(figure2.to_json()) == figure2


# -- circular embedding and quartets ------------------------------------------


def assert_circular(t):
    for K in itertools.combinations(t.leaves, 4):
        i, j, k, l = K
        assert quartet_topology(t, K) != Quartet.of((i, k), (j, l))


def test_identity_embedding_of_quartet():
    emb = circular_embed(parse_newick("((1,2),(3,4));"))
    assert emb.relabel == {1: 1, 2: 2, 3: 3, 4: 4}


def test_scrambled_caterpillar_embedding():
    t = scrambled(caterpillar(8), 3)
    emb = circular_embed(t)
    assert_circular(emb.tree)
    # relabeling is a tree isomorphism
    assert relabel_leaves(t, emb.relabel) == emb.tree


def test_snowflake_embedding_keeps_cherries_adjacent(snowflake):
    emb = circular_embed(scrambled(snowflake, 1))
    assert_circular(emb.tree)
    # cherries are cyclically adjacent in the new labels
    for a, b in emb.tree.cherries():
        assert (b - a) % 6 in (1, 5)


@pytest.mark.parametrize("n", range(4, 11))
def test_circular_invariant_exhaustive(n):
    for t in enumerate_shapes(n):
        assert_circular(t)
        assert_circular(circular_embed(scrambled(t, n)).tree)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 12), st.integers(0, 10**6))
def test_circular_embed_random_trees(n, seed):
    emb = circular_embed(scrambled(random_tree(n, seed), seed + 1))
    assert emb.tree.is_canonical()
    assert_circular(emb.tree)


def test_quartet_examples(cat6, snowflake):
    assert quartet_topology(cat6, (1, 2, 5, 6)) == Quartet.of((1, 2), (5, 6))
    assert quartet_topology(snowflake, (1, 3, 5, 6)) == split_quartet(snowflake, (1, 3, 5, 6))
    assert str(quartet_topology(snowflake, (1, 3, 5, 6))) == "13|56"
    assert quartet_topology(parse_newick("((1,2),(3,4));"), (1, 2, 3, 4)) == Quartet.of((1, 2), (3, 4))
    with pytest.raises(ValueError):
        quartet_topology(cat6, (1, 1, 2, 3))
    with pytest.raises(ValueError):
        quartet_topology(cat6, (1, 2, 3, 9))


@pytest.mark.parametrize("n", [5, 7, 9])
def test_quartet_agrees_with_split_oracle(n):
    for t in enumerate_shapes(n):
        for K in itertools.combinations(t.leaves, 4):
            assert quartet_topology(t, K) == split_quartet(t, K)


# -- cherries and clusters -----------------------------------------------------


def test_figure2_clusters(figure2):
    assert len(k_clusters(figure2, 2)) == 5
    assert sorted(map(sorted, k_clusters(figure2, 3))) == [[1, 2, 3], [4, 5, 6], [11, 12, 13]]
    assert cluster_variables(figure2, 2) == [(1, 2), (4, 5), (7, 8), (9, 10), (11, 12)]
    assert cluster_variables(figure2, 3) == [(1, 3), (2, 3), (4, 6), (5, 6), (11, 13), (12, 13)]


@pytest.mark.parametrize("n", range(5, 13))
def test_caterpillar_has_two_cherries(n):
    assert len(k_clusters(caterpillar(n), 2)) == 2
    assert len(caterpillar(n).cherries()) == 2


def test_snowflake_clusters(snowflake):
    # brute force: every side of every edge, kept when it is a rooted caterpillar
    sizes = []
    for eid, (u, v) in enumerate(snowflake.edges):
        for root in (u, v):
            side = snowflake.side(eid, root)
            if len(side) in (2, 3):
                sizes.append(len(side))
    assert sizes.count(2) == 3 and sizes.count(3) == 0
    assert len(k_clusters(snowflake, 2)) == 3
    assert k_clusters(snowflake, 3) == []


@pytest.mark.parametrize("n", range(4, 12))
def test_cluster_variable_count(n):
    for t in enumerate_shapes(n):
        for k in range(2, n):
            if n > 2 * k - 2:
                assert len(cluster_variables(t, k)) == (k - 1) * len(k_clusters(t, k))


# -- restriction and attachment ------------------------------------------------


def test_restrict_to_everything_is_identity(figure2):
    r = restrict(figure2, figure2.leaves)
    assert shape_code(r.tree) == shape_code(figure2)
    assert {frozenset(s.block_a) for s in r.tree.splits} == {frozenset(s.block_a) for s in figure2.splits}
    assert all(len(v) == 1 for v in r.provenance.values())


def test_restrict_caterpillar_to_quartet(cat6):
    assert restrict_quartet(cat6, [1, 2, 5, 6]) == Quartet.of((1, 2), (5, 6))


def test_restrict_example33_side(example33):
    side = [s for s in example33.splits if len(s.block_b) == 7 or len(s.block_a) == 7][0]
    A = side.block_a if len(side.block_a) == 7 else side.block_b
    assert A == frozenset({15, 1, 2, 3, 4, 5, 6})
    sub = restrict(example33, A).tree
    check_structure(sub)
    # rooted at the cut edge, the sides hold 4 and 3 leaves
    assert any({len(s.block_a), len(s.block_b)} == {4, 3} for s in sub.splits)


@pytest.mark.parametrize("n", range(5, 9))
def test_restrict_then_quartet(n):
    for t in enumerate_shapes(n):
        for K in itertools.combinations(t.leaves, 4):
            assert restrict_quartet(t, K) == quartet_topology(t, K)


def test_restrict_provenance_covers_paths(figure2):
    keep = [1, 4, 7, 9, 13]
    r = restrict(figure2, keep)
    for i, j in itertools.combinations(keep, 2):
        old = set().union(*(r.provenance[e] for e in r.tree.path(i, j)))
        assert old == set(figure2.path(i, j))


def test_restrict_too_small(cat6):
    with pytest.raises(ValueError):
        restrict(cat6, [1, 2])


def test_attach_to_cherry_pendant_creates_3_cluster(snowflake):
    att = attach_leaf(snowflake, snowflake.pendant_edge(1), 7)
    assert frozenset({1, 2, 7}) in k_clusters(att.tree, 3)
    check_structure(att.tree)
    assert (att.e_a, att.e_b, att.e_new) == (snowflake.pendant_edge(1), 9, 10)


def test_attach_cherry_to_each_leaf():
    t = caterpillar(5)
    label = 5
    for leaf in range(1, 6):
        label += 1
        t = attach_leaf(t, t.pendant_edge(leaf), label).tree
    assert t.n == 10 and len(t.cherries()) == 5
    check_structure(t)


def test_attach_to_internal_edge_of_snowflake(snowflake):
    internal = [s.edge for s in snowflake.nontrivial_splits()]
    for e in internal:
        t = attach_leaf(snowflake, e, 7).tree
        assert t.n == 7 and len(t.cherries()) == 3


# -- incidence and metrics -------------------------------------------------------


def test_alpha_of_cherry():
    t = parse_newick("((1,2),(3,4));")
    a = alpha_vector(t, 1, 2)
    assert {e for e, x in enumerate(a) if x} == {t.pendant_edge(1), t.pendant_edge(2)}


@pytest.mark.parametrize("n", range(4, 13))
def test_incidence_rank(n):
    for seed in range(3):
        t = random_tree(n, seed)
        assert rank_of_rows(incidence_rows(t), t.num_edges) == 2 * n - 3


def test_unit_lengths_give_graph_distance(figure2):
    g = nx.Graph(figure2.edges)
    omega = tree_metric_weights(figure2, [1] * figure2.num_edges)
    for (i, j), w in omega.items():
        assert w == nx.shortest_path_length(g, i, j)


def test_unit_weights_quartet():
    omega = tree_metric_weights(parse_newick("((1,2),(3,4));"), [1] * 5)
    assert omega[(1, 2)] == 2 and omega[(1, 3)] == 3


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 10), st.integers(0, 10**6))
def test_four_point_condition(n, seed):
    t = random_tree(n, seed)
    rng = random.Random(seed)
    lengths = [Fraction(rng.randint(1, 50), rng.randint(1, 7)) for _ in range(t.num_edges)]
    w = tree_metric_weights(t, lengths)
    d = lambda a, b: w[(min(a, b), max(a, b))]
    for K in itertools.combinations(t.leaves, 4):
        q = quartet_topology(t, K)
        (i, j), (k, l) = q.left, q.right
        assert d(i, k) + d(j, l) == d(i, l) + d(j, k) > d(i, j) + d(k, l)
    doubled = tree_metric_weights(t, [2 * x for x in lengths])
    assert all(doubled[p] == 2 * w[p] for p in w)


def test_nonpositive_length_rejected(cat6):
    with pytest.raises(ValueError):
        tree_metric_weights(cat6, [1] * 8 + [0])


@pytest.mark.parametrize("n", range(4, 10))
def test_circular_trees_are_catalan_many(n):
    trees = enumerate_circular_trees(n)
    assert len(set(trees)) == len(trees) == sympy.catalan(n - 2)
    for t in trees:
        assert_circular(t)
    # every shape shows up
    assert {shape_code(t) for t in trees} == {shape_code(t) for t in enumerate_shapes(n)}


def test_shape_counts():
    # unlabeled unrooted binary trees, n = 4..12
    assert [len(enumerate_shapes(n)) for n in range(4, 13)] == [1, 1, 2, 2, 4, 6, 11, 18, 37]
