"""Executable structural properties of supported graphs.

Each checker returns ``{name: held}``. The core set is passed in so callers
decide which route produced it.
"""

from __future__ import annotations

from collections.abc import Set

from .graph import (
    Graph,
    classify,
    closed_neighborhood,
    components,
    delete_edge,
    delete_vertices,
    find_cycle,
)
from .solver import MatchingResult, alpha, cycle_alpha_critical_edges, max_matching, mu


def matching_is_valid(g: Graph, m: MatchingResult) -> bool:
    covered = [v for e in m.edges for v in e]
    return (
        all(e in g.edges for e in m.edges)
        and len(covered) == len(set(covered))
        and m.saturated == frozenset(covered)
        and len(m.saturated) == 2 * len(m.edges)
    )


def ke_matching_structure(g: Graph, core: Set[str], m: MatchingResult) -> bool:
    """Every vertex of N(core) is matched into core, and G - N[core] has a
    perfect matching."""
    closed = closed_neighborhood(g, core)
    mate = m.mate()
    for v in closed - core:
        if mate.get(v) not in core:
            return False
    rest = delete_vertices(g, closed)
    return rest.n == 0 or 2 * mu(rest) == rest.n


def unicyclic_invariants(g: Graph, core: Set[str]) -> dict[str, bool]:
    """Properties of a unicyclic graph that cost at most O(n * |C|)."""
    from .core import core_tree_by_matching

    n = g.n
    info = find_cycle(g)
    cyc = set(info.cycle_vertices)
    a, m = alpha(g), max_matching(g)
    ke = a + len(m) == n
    critical = cycle_alpha_critical_edges(g)
    closed = closed_neighborhood(g, core) if core else frozenset()

    out = {
        "cycle_shape": (
            len(info.cycle_edges) == len(info.cycle_vertices) >= 3
            and sum(p.tree.n for p in info.pendant_trees) + len(cyc) == n
            and all(sum(w in cyc for w in g.neighbors(x)) == 1 for x in info.n1)
        ),
        "alpha_mu_within_one_of_n": n - 1 <= a + len(m) <= n,
        "non_ke_iff_all_cycle_edges_critical": (a + len(m) == n - 1) == (len(critical) == len(info.cycle_edges)),
        "some_cycle_edge_not_mu_critical": any(
            mu(delete_edge(g, e)) == len(m) for e in info.ordered_cycle_edges()
        ),
        "critical_cycle_edges_avoid_closed_core": all(not (set(e) & closed) for e in critical),
        "pendant_core_root_implies_ke": ke or not any(
            p.x in core_tree_by_matching(p.tree).core for p in info.pendant_trees
        ),
        "matching_valid": matching_is_valid(g, m),
    }
    if ke:
        out["ke_matching_structure"] = ke_matching_structure(g, core, m)
    else:
        out["non_ke_cycle_avoids_closed_core"] = not (closed & cyc)
    return out


def edge_invariants(g: Graph, core: Set[str]) -> dict[str, bool]:
    """Per-edge properties; one alpha and one mu evaluation per edge."""
    a, m = alpha(g), mu(g)
    closed = closed_neighborhood(g, core) if core else frozenset()
    bounds = critical_ok = True
    for e in g.sorted_edges():
        h = delete_edge(g, e)
        ah, mh = alpha(h), mu(h)
        bounds &= a <= ah <= a + 1 and m - 1 <= mh <= m
        if ah > a and set(e) & closed:
            critical_ok = False
    return {
        "edge_deletion_bounds": bounds,
        "alpha_critical_edges_avoid_closed_core": critical_ok,
    }


def graph_invariants(g: Graph, core: Set[str], per_edge: bool = True) -> dict[str, bool]:
    """Properties of any supported graph; per-edge checks are optional since
    they cost O(n * m)."""
    a, m = alpha(g), max_matching(g)
    cyclic = sum(1 for comp in components(g) if len(comp) <= _component_edges(g, comp))
    out = {
        "alpha_mu_within_p_of_n": g.n - cyclic <= a + len(m) <= g.n,
        "matching_valid": matching_is_valid(g, m),
        "core_is_independent": not any(u in core and v in core for u, v in g.edges),
    }
    if a + len(m) == g.n:
        out["ke_matching_structure"] = ke_matching_structure(g, core, m)
    if classify(g).acyclic:
        out["forest_is_ke"] = a + len(m) == g.n
    if per_edge:
        out.update(edge_invariants(g, core))
    return out


def _component_edges(g: Graph, comp: list[str]) -> int:
    members = set(comp)
    return sum(1 for v in comp for w in g.neighbors(v) if w in members) // 2
