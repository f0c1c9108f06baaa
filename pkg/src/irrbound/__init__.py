"""Albertson irregularity of simple graphs and its upper bounds."""

from .bounds import (
    BoundReport,
    acd_bound,
    albertson_bound,
    bound_report,
    laplacian_bound,
    tree_pendant_bound,
    trunc_even,
    zhou_luo_bound,
)
from .edgelist import format_edge_list, parse_edge_list
from .generators import complete, complete_bipartite, cycle, path, random_graph, star, yoke
from .graph import (
    DegreeProfile,
    Graph,
    build_graph,
    degree_profile,
    imbalance,
    irregularity,
    is_connected,
    is_tree,
    pendant_count,
)
from .spectral import (
    LaplacianMatrix,
    SpectralResult,
    fiedler_quotient,
    lambda_max,
    laplacian,
    merris_bound,
    pairwise_difference_sum,
    quadratic_form,
)
from .study import StudyOutcome, family_asymptotics, find_t15_candidates, tree_bound_study
from .trees import TreeStream, canonical_form, free_trees, tree_from_pruefer

__version__ = "0.1.0"
