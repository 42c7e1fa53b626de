"""Pluecker tree ideals, initial forms of Pfaffians and secant dimension bounds."""

from .tree import (
    PhyloTree, Quartet, Split, alpha_vector, attach_leaf, circular_embed, cluster_variables,
    enumerate_circular_trees, enumerate_shapes, k_clusters, parse_newick, quartet_topology, restrict,
    tree_metric_weights,
)
from .pfaffian import (
    SparsePoly, crossing_monomial, initial_form, initial_pfaffian_generators, jt_generators,
    linear_occurrence_witness, pfaffian_polynomial,
)
from .linalg import ExactMatrix, rank, solve
from .draisma import (
    WitnessPair, lift_chain, lift_witness, lower_bound, search_witness, verify_certificate,
    winning_directions,
)
from .dimension import (
    cherry_bound, cluster_bound, counterexample_tree, equality_verdict, expected_secant_dim,
    jacobian_secant_dim,
)

__all__ = [
    "ExactMatrix",
    "PhyloTree",
    "Quartet",
    "SparsePoly",
    "Split",
    "WitnessPair",
    "alpha_vector",
    "attach_leaf",
    "cherry_bound",
    "circular_embed",
    "cluster_bound",
    "cluster_variables",
    "counterexample_tree",
    "crossing_monomial",
    "enumerate_circular_trees",
    "enumerate_shapes",
    "equality_verdict",
    "expected_secant_dim",
    "initial_form",
    "initial_pfaffian_generators",
    "jacobian_secant_dim",
    "jt_generators",
    "k_clusters",
    "lift_chain",
    "lift_witness",
    "linear_occurrence_witness",
    "lower_bound",
    "parse_newick",
    "pfaffian_polynomial",
    "quartet_topology",
    "rank",
    "restrict",
    "search_witness",
    "solve",
    "tree_metric_weights",
    "verify_certificate",
    "winning_directions",
]

__version__ = "0.1.0"
