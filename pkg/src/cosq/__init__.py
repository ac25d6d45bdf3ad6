"""Exact-arithmetic toolkit for codegree-squared sums of k-uniform
hypergraphs: named extremal families, property checks, closed-form
bounds, and certified maximization at small scale."""

from .bounds import (
    BeyCheck,
    BoundReport,
    L1Bound,
    bey_rhs,
    bound_report,
    check_bey,
    de_caen_pi,
    ekr_l2_bound,
    l1_bounds,
    sigma_Kt,
    sigma_upper,
    t_star_l2_bound,
)
from .core import (
    CodegreeVector,
    Hypergraph,
    add_edge,
    co2,
    co2_delta,
    codegree,
    codegree_vector,
    format_hypergraph,
    load_hypergraph,
    parse_hypergraph,
    save_hypergraph,
)
from .families import (
    FamilySize,
    FamilySpec,
    build,
    co2_hitting_closed,
    co2_star_closed,
    family_size,
)
from .props import (
    PatternSpec,
    Witness,
    common_intersection,
    contains_pattern,
    covering_number,
    is_d_wise_t_intersecting,
    is_pattern_free,
    is_t_intersecting,
    matching_number,
)
from .search import (
    Conjunction,
    DWiseTIntersecting,
    MatchingAtMost,
    PatternFree,
    SearchProblem,
    SearchResult,
    TIntersecting,
    brute_force_co2,
    max_co2,
)
from .verify import ClaimReport, verify_claim

__version__ = "0.1.0"

__all__ = [
    "BeyCheck",
    "BoundReport",
    "ClaimReport",
    "CodegreeVector",
    "Conjunction",
    "DWiseTIntersecting",
    "FamilySize",
    "FamilySpec",
    "Hypergraph",
    "L1Bound",
    "MatchingAtMost",
    "PatternFree",
    "PatternSpec",
    "SearchProblem",
    "SearchResult",
    "TIntersecting",
    "Witness",
    "add_edge",
    "bey_rhs",
    "bound_report",
    "brute_force_co2",
    "build",
    "check_bey",
    "co2",
    "co2_delta",
    "co2_hitting_closed",
    "co2_star_closed",
    "codegree",
    "codegree_vector",
    "common_intersection",
    "contains_pattern",
    "covering_number",
    "de_caen_pi",
    "ekr_l2_bound",
    "family_size",
    "format_hypergraph",
    "is_d_wise_t_intersecting",
    "is_pattern_free",
    "is_t_intersecting",
    "l1_bounds",
    "load_hypergraph",
    "matching_number",
    "max_co2",
    "parse_hypergraph",
    "save_hypergraph",
    "sigma_Kt",
    "sigma_upper",
    "t_star_l2_bound",
    "verify_claim",
]
