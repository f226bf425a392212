"""core(G): the vertices lying in every maximum independent set.

Three routes:

* deletion: ``v`` is in the core iff ``alpha(G - v) = alpha(G) - 1``;
* tree matching: in a forest, ``v`` is in the core iff some maximum
  matching leaves it unsaturated, i.e. iff ``mu(F - v) = mu(F)``;
* structural decomposition: for a unicyclic graph with
  ``alpha + mu = n - 1`` the core is the union of the cores of its pendant
  trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import NotUnicyclic, UnsupportedClass
from .graph import Graph, GraphClass, classify, components, find_cycle
from .invariants import unicyclic_invariants
from .solver import (
    require_supported,
    alpha,
    alpha_without_each,
    forest_mu_without_each,
    is_koenig_egervary,
    mu,
)


class Method(str, Enum):
    VERTEX_DELETION = "VertexDeletion"
    TREE_MATCHING = "TreeMatching"
    STRUCTURAL_DECOMPOSITION = "StructuralDecomposition"
    KE_FALLBACK = "KEFallback"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CoreResult:
    core: frozenset[str]
    method: Method
    # attachment vertex x -> core of its pendant tree
    certificate: Mapping[str, frozenset[str]] | None = None

    def sorted_core(self) -> list[str]:
        return sorted(self.core)


def core_by_deletion(g: Graph) -> CoreResult:
    """{v : alpha(G - v) = alpha(G) - 1}.

    alpha(G - v) is evaluated for all v at once by rerooting, so this is
    linear per component rather than one alpha call per vertex.
    """
    base = alpha(g)
    drops = alpha_without_each(g)
    return CoreResult(frozenset(v for v, a in drops.items() if a == base - 1), Method.VERTEX_DELETION)


def core_tree_by_matching(t: Graph) -> CoreResult:
    cls = require_supported(t)
    if not cls.acyclic:
        raise UnsupportedClass(f"forest required, got {cls.value}")
    base = mu(t)
    drops = forest_mu_without_each(t)
    return CoreResult(frozenset(v for v, m in drops.items() if m == base), Method.TREE_MATCHING)


def pendant_cores(g: Graph) -> dict[str, frozenset[str]]:
    """x -> core(T_x) for every attachment vertex x of the cycle."""
    info = find_cycle(g)
    return {p.x: core_tree_by_matching(p.tree).core for p in info.pendant_trees}


def core_unicyclic(g: Graph) -> CoreResult:
    if classify(g) is not GraphClass.UNICYCLIC:
        raise NotUnicyclic(f"graph is {classify(g).value}")
    if is_koenig_egervary(g):
        return CoreResult(core_by_deletion(g).core, Method.KE_FALLBACK)
    cert = pendant_cores(g)
    union = frozenset().union(*cert.values())
    return CoreResult(union, Method.STRUCTURAL_DECOMPOSITION, cert)


_METHOD_RANK = {
    Method.TREE_MATCHING: 0,
    Method.STRUCTURAL_DECOMPOSITION: 1,
    Method.KE_FALLBACK: 2,
}


def core(g: Graph) -> CoreResult:
    """Dispatch on graph class; a disconnected input is solved per component.

    For a multi-component input the reported method is the weakest one used
    (fallback over structural over tree matching) and no certificate is kept.
    """
    cls = require_supported(g)
    if cls.acyclic:
        return core_tree_by_matching(g)
    if cls is GraphClass.UNICYCLIC:
        return core_unicyclic(g)
    found: set[str] = set()
    method = Method.TREE_MATCHING
    forest: list[str] = []
    for comp in components(g):
        piece = g.induced(comp)
        if piece.m == piece.n - 1:
            forest.extend(comp)
            continue
        part = core_unicyclic(piece)
        found |= part.core
        if _METHOD_RANK[part.method] > _METHOD_RANK[method]:
            method = part.method
    if forest:
        found |= core_tree_by_matching(g.induced(forest)).core
    return CoreResult(frozenset(found), method)


@dataclass
class ConsistencyReport:
    """Outcome of cross-checking the fast core against the deletion core on
    one unicyclic graph, with every structural invariant evaluated."""

    fast: CoreResult
    deletion: CoreResult
    koenig_egervary: bool
    # name -> held?
    invariants: dict[str, bool] = field(default_factory=dict)
    # KE instances only: does the pendant-core union happen to equal the core?
    union_formula_holds: bool | None = None

    @property
    def agree(self) -> bool:
        return self.fast.core == self.deletion.core

    @property
    def ok(self) -> bool:
        return self.agree and all(self.invariants.values())

    def failures(self) -> list[str]:
        out = [] if self.agree else ["core mismatch"]
        return out + [name for name, held in self.invariants.items() if not held]


def check_structural_consistency(g: Graph) -> ConsistencyReport:
    if classify(g) is not GraphClass.UNICYCLIC:
        raise NotUnicyclic(f"graph is {classify(g).value}")
    fast = core_unicyclic(g)
    deletion = core_by_deletion(g)
    ke = fast.method is Method.KE_FALLBACK
    report = ConsistencyReport(fast, deletion, ke, unicyclic_invariants(g, deletion.core))
    if ke:
        union = frozenset().union(*pendant_cores(g).values())
        report.union_formula_holds = union == deletion.core
    return report
