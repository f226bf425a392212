"""One-shot analysis of a graph, as reported by ``unicore analyze``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .core import CoreResult, Method, check_structural_consistency, core, core_by_deletion
from .graph import Graph, GraphClass, components, find_cycle
from .solver import alpha, cycle_alpha_critical_edges, max_matching, require_supported

METHODS = ("structural", "deletion", "both")


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    m: int
    graph_class: GraphClass
    alpha: int
    mu: int
    koenig_egervary: bool
    core: list[str]
    method: Method
    cycle: list[str] | None = None
    n1: list[str] | None = None
    alpha_critical_cycle_edges: list[list[str]] | None = None
    certificate: dict[str, list[str]] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "class": self.graph_class.value,
            "alpha": self.alpha,
            "mu": self.mu,
            "koenig_egervary": self.koenig_egervary,
            "core": self.core,
            "method": self.method.value,
            "cycle": self.cycle,
            "n1": self.n1,
            "alpha_critical_cycle_edges": self.alpha_critical_cycle_edges,
            "certificate": self.certificate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for key, value in sorted(self.to_dict().items()):
            if isinstance(value, bool):
                value = str(value).lower()
            elif value is None:
                value = "null"
            elif isinstance(value, list):
                value = " ".join("-".join(v) if isinstance(v, list) else v for v in value)
            elif isinstance(value, dict):
                value = "; ".join(f"{x}: {' '.join(c)}" for x, c in sorted(value.items()))
            lines.append(f"{key}: {value}")
        return "\n".join(lines)


def _cyclic_pieces(g: Graph, cls: GraphClass) -> list[Graph]:
    if cls is GraphClass.UNICYCLIC:
        return [g]
    pieces = []
    for comp in components(g):
        piece = g.induced(comp)
        if piece.m == piece.n:
            pieces.append(piece)
    return pieces


def core_for_method(g: Graph, method: str) -> CoreResult:
    if method == "deletion":
        return core_by_deletion(g)
    return core(g)


def analyze(g: Graph, method: str = "structural") -> AnalysisReport:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    cls = require_supported(g)
    a = alpha(g)
    m = len(max_matching(g))
    result = core_for_method(g, method)

    cycle = n1 = critical = None
    if not cls.acyclic:
        cycle, n1_set, critical = [], set(), []
        for piece in _cyclic_pieces(g, cls):
            info = find_cycle(piece)
            cycle.extend(info.cycle_vertices)
            n1_set |= info.n1
            critical.extend([u, v] for u, v in cycle_alpha_critical_edges(piece))
        n1 = sorted(n1_set)

    certificate = None
    if result.certificate is not None:
        certificate = {x: sorted(c) for x, c in result.certificate.items()}

    return AnalysisReport(
        n=g.n,
        m=g.m,
        graph_class=cls,
        alpha=a,
        mu=m,
        koenig_egervary=a + m == g.n,
        core=result.sorted_core(),
        method=result.method,
        cycle=cycle,
        n1=n1,
        alpha_critical_cycle_edges=critical,
        certificate=certificate,
    )


def cores_agree(g: Graph) -> tuple[bool, CoreResult, CoreResult]:
    """Fast route vs deletion route, for ``--method both``."""
    cls = require_supported(g)
    if cls is GraphClass.UNICYCLIC:
        rep = check_structural_consistency(g)
        return rep.ok, rep.fast, rep.deletion
    fast, slow = core(g), core_by_deletion(g)
    return fast.core == slow.core, fast, slow
