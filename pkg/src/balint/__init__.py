"""Solvers for color-balanced independent and dominating sets on interval graphs."""

from .bds import DominationIndex, canonicalize_bds, solve_fbds_brute
from .cnf import CnfFormula, is_three_bounded, is_tptn, parse_dimacs, serialize_dimacs
from .fbis_dp import max_f, max_f_with_witness, solve_fbis_dp
from .fbis_vc import (
    VertexCoverDecomposition,
    enumerate_swap_candidates,
    minimum_vertex_cover,
    solve_fbis_vc,
)
from .gen import GenSpec, generate, random_three_bounded, random_tptn_uniform3
from .mcis import (
    LocalSearchConfig,
    greedy_mcis,
    is_b_locally_optimal,
    local_search_mcis,
)
from .model import (
    ColoredIntervalInstance,
    FormatError,
    GuardError,
    Interval,
    SolutionSet,
    SortedView,
    Verdict,
    build_sorted_view,
    intersects,
    parse_assignment,
    parse_instance,
    parse_solution,
    serialize_assignment,
    serialize_instance,
    serialize_solution,
    solution_from_ids,
    verify_solution,
)
from .oracle import (
    BudgetError,
    OracleBudget,
    oracle_fbds,
    oracle_fbis,
    oracle_maximal_is,
    oracle_mcis,
    oracle_sat,
)
from .reductions import (
    GadgetMetadata,
    decode_domset,
    decode_indset,
    encode_domset_solution,
    encode_indset_solution,
    reduce_domset,
    reduce_indset,
)

__all__ = [
    "CnfFormula",
    "ColoredIntervalInstance",
    "DominationIndex",
    "FormatError",
    "GadgetMetadata",
    "GenSpec",
    "GuardError",
    "BudgetError",
    "Interval",
    "LocalSearchConfig",
    "OracleBudget",
    "SolutionSet",
    "SortedView",
    "Verdict",
    "VertexCoverDecomposition",
    "build_sorted_view",
    "canonicalize_bds",
    "decode_domset",
    "decode_indset",
    "encode_domset_solution",
    "encode_indset_solution",
    "enumerate_swap_candidates",
    "generate",
    "greedy_mcis",
    "intersects",
    "is_b_locally_optimal",
    "is_three_bounded",
    "is_tptn",
    "local_search_mcis",
    "max_f",
    "max_f_with_witness",
    "minimum_vertex_cover",
    "oracle_fbds",
    "oracle_fbis",
    "oracle_maximal_is",
    "oracle_mcis",
    "oracle_sat",
    "parse_assignment",
    "parse_dimacs",
    "parse_instance",
    "parse_solution",
    "random_three_bounded",
    "random_tptn_uniform3",
    "reduce_domset",
    "reduce_indset",
    "serialize_assignment",
    "serialize_dimacs",
    "serialize_instance",
    "serialize_solution",
    "solution_from_ids",
    "solve_fbds_brute",
    "solve_fbis_dp",
    "solve_fbis_vc",
    "verify_solution",
]
