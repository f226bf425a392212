"""Independence number, matching number and core of trees, forests and
unicyclic graphs."""

from .analysis import AnalysisReport, analyze
from .core import (
    CoreResult,
    Method,
    check_structural_consistency,
    core,
    core_by_deletion,
    core_tree_by_matching,
    core_unicyclic,
)
from .errors import (
    InvalidInput,
    InvalidSpec,
    NotUnicyclic,
    TooLarge,
    UnicoreError,
    UnknownEdge,
    UnknownFixture,
    UnknownVertex,
    UnsupportedClass,
)
from .gen import GenSpec, fixture, gen_forest, gen_tree, gen_unicyclic
from .graph import (
    CycleInfo,
    Graph,
    GraphClass,
    classify,
    closed_neighborhood,
    delete_edge,
    delete_vertices,
    find_cycle,
    parse_graph,
    serialize,
)
from .oracle import OracleReport, oracle_analyze
from .solver import (
    MatchingResult,
    alpha,
    cycle_alpha_critical_edges,
    is_alpha_critical,
    is_koenig_egervary,
    max_matching,
    mu,
)

__version__ = "0.1.0"

__all__ = [
    "alpha",
    "AnalysisReport",
    "analyze",
    "check_structural_consistency",
    "classify",
    "closed_neighborhood",
    "core",
    "core_by_deletion",
    "core_tree_by_matching",
    "core_unicyclic",
    "CoreResult",
    "cycle_alpha_critical_edges",
    "CycleInfo",
    "delete_edge",
    "delete_vertices",
    "find_cycle",
    "fixture",
    "gen_forest",
    "gen_tree",
    "gen_unicyclic",
    "GenSpec",
    "Graph",
    "GraphClass",
    "InvalidInput",
    "InvalidSpec",
    "is_alpha_critical",
    "is_koenig_egervary",
    "MatchingResult",
    "max_matching",
    "Method",
    "mu",
    "NotUnicyclic",
    "oracle_analyze",
    "OracleReport",
    "parse_graph",
    "serialize",
    "TooLarge",
    "UnicoreError",
    "UnknownEdge",
    "UnknownFixture",
    "UnknownVertex",
    "UnsupportedClass",
]
