"""Majority partitions of 2-edge-colored graphs: constructions, exact solvers, reductions and samplers."""

from .families import counterexample_147, figure2_k5, gadget_append, no_good_trees, triangle_nonmono
from .graph import BLUE, RED, EdgeColoredGraph, parse_graph, serialize_graph
from .instances import CnfFormula, Hypergraph3, parse_dimacs, parse_hypergraph
from .partition import (
    KPartition,
    parse_partition,
    serialize_partition,
    verify_bicolor_cut,
    verify_connected_cut,
    verify_good_subset,
    verify_majority,
)
from .probabilistic import (
    empirical_tail,
    hoeffding_bound,
    lll_hypothesis_check,
    pad_to_multiple_of_3,
    resample_majority3,
)
from .reductions import lift_witness, project_witness, reduce
from .refutation import check_certificate, refute_counterexample
from .solvers import (
    SolveOutcome,
    Status,
    erdos_bipartition,
    exact_bicolor_cut,
    exact_connected_cut,
    exact_majority,
    majority_4_partition,
)

__version__ = "0.1.0"
