"""Exact Wiener-type indices of hexagonal lattice graphs and the one-pentagon nanocone."""

from nanocone.graph import (
    DisconnectedGraphError,
    Graph,
    InvariantError,
    all_pairs,
    bfs_distances,
    d_lambda,
    distance_distribution,
    hyper_wiener,
    w_lambda,
    w_lambda_real,
    wiener,
)
from nanocone.families import (
    FamilyInstance,
    build,
    build_A,
    build_cone,
    build_M,
    build_Z,
    build_ZL,
    expected_vertex_count,
    sector_partition,
)
from nanocone.cuts import (
    hyper_wiener_via_cuts,
    theta_star_classes,
    wiener_via_cuts,
    wlambda_via_recursion,
)
from nanocone.closed_forms import eval_formula, list_formulas, theorem3_wlambda
from nanocone.fitting import fit_multivariate, fit_univariate
from nanocone.formats import GraphDocument
from nanocone.verify import Limits, run_suite

__version__ = "0.1.0"
