"""Sum-of-squares pseudo-expectation workbench.

Thin python surface over the C++ core: graph generation, pseudo-expectation
construction (distribution-backed and pseudo-calibrated), spectral
certification, the coloring reduction pipeline, and the refutation checks.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # pragma: no cover - in-tree builds put _core on sys.path
    from _core import *  # noqa: F401,F403

__all__ = [
    "Graph",
    "gen_gnp",
    "complement",
    "is_independent_set",
    "max_independent_set",
    "enumerate_independent_sets",
    "is_k_colorable",
    "graph_hash",
    "write_edge_list",
    "parse_edge_list",
    "PseudoExpectation",
    "uniform_independent_set_pe",
    "pe_calibrated",
    "covering_certificate",
    "choose_k",
    "run_reduction",
    "check_coloring",
    "h_expectation",
    "tensor_restricted_min_eig",
    "refute_coloring_existence",
    "power_chain_refute",
    "chi_sum_moment",
    "xi_concentration",
    "pipeline_survey",
]
