"""Balanced biclique search and biclique edge decomposition.

Finds a K_{q,q} of the size guaranteed by edge count alone (q, r computed in
closed form from n and m) and partitions a graph's edges into balanced
complete bipartite subgraphs of total vertex complexity O(n^2 / ln n), with
generators, verifiers, an exhaustive small-scale oracle, and a benchmark
harness. Hot kernels run on a compiled backend when available; see
``bicliques.kernels``.
"""

from bicliques.decomposer import (
    Decomposition,
    PhaseStat,
    VerifyReport,
    Violation,
    complexity,
    decompose,
    decompose_bipartite,
    decomposition_from_json,
    decomposition_to_json,
    verify_decomposition,
)
from bicliques.finder import (
    Biclique,
    FindReport,
    find_biclique,
    find_biclique_bipartite,
    find_biclique_with_params,
)
from bicliques.gen import (
    bipartite_gnm,
    complete,
    complete_bipartite_general,
    gnm,
    matching_bipartite,
)
from bicliques.graph import BipartiteGraph, Graph
from bicliques.io import parse_bipartite, parse_graph, serialize_bipartite, serialize_graph
from bicliques.oracle import max_balanced_biclique, reference_find
from bicliques.params import (
    ParamSet,
    Regime,
    bipartite_params,
    density_precondition,
    general_params,
)

__version__ = "0.1.0"

__all__ = [
    "Biclique", "BipartiteGraph", "Decomposition", "FindReport", "Graph",
    "ParamSet", "PhaseStat", "Regime", "VerifyReport", "Violation",
    "bipartite_gnm", "bipartite_params", "complete", "complete_bipartite_general",
    "complexity", "decompose", "decompose_bipartite", "decomposition_from_json",
    "decomposition_to_json", "density_precondition", "find_biclique",
    "find_biclique_bipartite", "find_biclique_with_params", "general_params",
    "gnm", "matching_bipartite", "max_balanced_biclique", "parse_bipartite",
    "parse_graph", "reference_find", "serialize_bipartite", "serialize_graph",
    "verify_decomposition",
]
