"""Exact independence and matching numbers for forests and unicyclic forests.

Forests use linear-time tree dynamic programs. A unicyclic component is
reduced to forests: for alpha by branching on one cycle vertex ``c``
(``alpha(G) = max(alpha(G - c), 1 + alpha(G - N[c]))``), for matchings by
deleting each cycle edge in turn.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotUnicyclic, UnknownEdge, UnsupportedClass
from .graph import (
    Edge,
    Graph,
    GraphClass,
    classify,
    closed_neighborhood,
    components,
    delete_edge,
    delete_vertices,
    edge_key,
    find_cycle,
    per_graph,
)


@dataclass(frozen=True)
class MatchingResult:
    edges: frozenset[Edge]
    saturated: frozenset[str]

    def __len__(self) -> int:
        return len(self.edges)

    def mate(self) -> dict[str, str]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


def require_supported(g: Graph) -> GraphClass:
    cls = classify(g)
    if not cls.supported:
        raise UnsupportedClass("graph has a component with more than one cycle")
    return cls


def _rooted(g: Graph, skip: Edge | None = None) -> tuple[list[str], dict[str, str | None]]:
    """BFS order and parent map over a forest, rooted per component at the
    lexicographically smallest vertex. ``skip`` is treated as absent."""
    a, b = skip if skip is not None else (None, None)
    order: list[str] = []
    parent: dict[str, str | None] = {}
    for root in sorted(g.vertices):
        if root in parent:
            continue
        parent[root] = None
        order.append(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in parent and not (v == a and w == b or v == b and w == a):
                    parent[w] = v
                    order.append(w)
                    queue.append(w)
    return order, parent


def _unicyclic_parts(g: Graph) -> list[tuple[Graph, bool]]:
    """Split a supported graph into (component, has_cycle) pieces.

    Acyclic components are merged into a single forest piece.
    """
    cls = require_supported(g)
    if cls.acyclic:
        return [(g, False)]
    if cls is GraphClass.UNICYCLIC:
        return [(g, True)]
    parts = []
    forest_vertices: list[str] = []
    for comp in components(g):
        members = set(comp)
        m_i = sum(1 for v in comp for w in g.neighbors(v) if w in members) // 2
        if m_i == len(comp):
            parts.append((g.induced(comp), True))
        else:
            forest_vertices.extend(comp)
    if forest_vertices:
        parts.append((g.induced(forest_vertices), False))
    return parts


# -- independence number -----------------------------------------------------


def _forest_alpha(g: Graph) -> int:
    order, parent = _rooted(g)
    inc = dict.fromkeys(order, 1)
    exc = dict.fromkeys(order, 0)
    total = 0
    for v in reversed(order):
        p = parent[v]
        best = max(inc[v], exc[v])
        if p is None:
            total += best
        else:
            inc[p] += exc[v]
            exc[p] += best
    return total


def _unicyclic_alpha(g: Graph) -> int:
    c = find_cycle(g).cycle_vertices[0]
    return max(
        _forest_alpha(delete_vertices(g, [c])),
        1 + _forest_alpha(delete_vertices(g, closed_neighborhood(g, c))),
    )


@per_graph
def alpha(g: Graph) -> int:
    """Independence number."""
    return sum(
        _unicyclic_alpha(part) if cyclic else _forest_alpha(part)
        for part, cyclic in _unicyclic_parts(g)
    )


def _forest_alpha_without_each(g: Graph) -> dict[str, int]:
    """alpha(F - v) for every vertex v of a forest F, by rerooting."""
    order, parent = _rooted(g)
    inc = dict.fromkeys(order, 1)  # 1 + sum of children's exc
    exc = dict.fromkeys(order, 0)  # sum of children's best
    for v in reversed(order):
        p = parent[v]
        if p is not None:
            inc[p] += exc[v]
            exc[p] += max(inc[v], exc[v])

    root_of: dict[str, str] = {}
    comp_alpha: dict[str, int] = {}
    up_inc: dict[str, int] = {}
    up_exc: dict[str, int] = {}
    for v in order:
        p = parent[v]
        if p is None:
            root_of[v] = v
            comp_alpha[v] = max(inc[v], exc[v])
            continue
        root_of[v] = root_of[p]
        # best sets of the p-side of the edge pv, with p in / p out
        sib_exc = inc[p] - 1 - exc[v]
        sib_best = exc[p] - max(inc[v], exc[v])
        if parent[p] is None:
            up_inc[v] = 1 + sib_exc
            up_exc[v] = sib_best
        else:
            up_inc[v] = 1 + sib_exc + up_exc[p]
            up_exc[v] = sib_best + max(up_inc[p], up_exc[p])

    total = sum(comp_alpha.values())
    out = {}
    for v in order:
        rest = total - comp_alpha[root_of[v]]
        upside = max(up_inc[v], up_exc[v]) if v in up_inc else 0
        out[v] = rest + exc[v] + upside
    return out


def _unicyclic_alpha_without_each(g: Graph) -> dict[str, int]:
    # alpha(H) = max(alpha(H - c), 1 + alpha(H - N[c])) with H = G - v
    c = find_cycle(g).cycle_vertices[0]
    nc = closed_neighborhood(g, c)
    f0 = delete_vertices(g, [c])
    f1 = delete_vertices(g, nc)
    drop0 = _forest_alpha_without_each(f0)
    drop1 = _forest_alpha_without_each(f1)
    a0 = _forest_alpha(f0)
    a1 = _forest_alpha(f1)
    out = {}
    for v in g.vertices:
        if v == c:
            out[v] = a0
        elif v in nc:
            out[v] = max(drop0[v], 1 + a1)
        else:
            out[v] = max(drop0[v], 1 + drop1[v])
    return out


@per_graph
def alpha_without_each(g: Graph) -> dict[str, int]:
    """Map every vertex v to alpha(G - v), in linear time per component."""
    parts = _unicyclic_parts(g)
    alphas = [_unicyclic_alpha(p) if cyc else _forest_alpha(p) for p, cyc in parts]
    total = sum(alphas)
    out: dict[str, int] = {}
    for (part, cyclic), a in zip(parts, alphas):
        local = _unicyclic_alpha_without_each(part) if cyclic else _forest_alpha_without_each(part)
        for v, value in local.items():
            out[v] = total - a + value
    return {v: out[v] for v in g.vertices}


# -- matchings ---------------------------------------------------------------


def _forest_matching(g: Graph, skip: Edge | None = None) -> set[Edge]:
    # Children before parents: match v to its parent when both are free.
    order, parent = _rooted(g, skip)
    matched: set[str] = set()
    edges: set[Edge] = set()
    for v in reversed(order):
        p = parent[v]
        if p is not None and v not in matched and p not in matched:
            matched.update((v, p))
            edges.add(edge_key(v, p))
    return edges


@dataclass(frozen=True)
class _CycleProfile:
    """Tree-DP values of the trees hanging off each cycle vertex (the vertex
    itself plus everything reachable from it without using cycle edges),
    aligned with the cycle walk."""

    inc: list[int]  # max independent set containing the cycle vertex
    exc: list[int]  # max independent set avoiding it
    full: list[int]  # max matching
    free: list[int]  # max matching leaving the cycle vertex unmatched


@per_graph
def _cycle_profile(g: Graph) -> _CycleProfile:
    cycle = find_cycle(g).cycle_vertices
    on_cycle = set(cycle)
    parent: dict[str, str | None] = dict.fromkeys(cycle)
    order = list(cycle)
    queue = deque(cycle)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in parent and w not in on_cycle:
                parent[w] = v
                order.append(w)
                queue.append(w)
    inc = dict.fromkeys(order, 1)
    exc = dict.fromkeys(order, 0)
    free = dict.fromkeys(order, 0)
    gain = dict.fromkeys(order, 0)
    full: dict[str, int] = {}
    for v in reversed(order):
        full[v] = free[v] + gain[v]
        p = parent[v]
        if p is not None:
            inc[p] += exc[v]
            exc[p] += max(inc[v], exc[v])
            free[p] += full[v]
            if full[v] == free[v]:
                gain[p] = 1
    return _CycleProfile(
        [inc[c] for c in cycle], [exc[c] for c in cycle],
        [full[c] for c in cycle], [free[c] for c in cycle],
    )


def _path_alpha(prof: _CycleProfile, idx: list[int]) -> int:
    take, skip = prof.inc[idx[0]], prof.exc[idx[0]]
    for i in idx[1:]:
        take, skip = prof.inc[i] + skip, prof.exc[i] + max(take, skip)
    return max(take, skip)


def _path_mu(prof: _CycleProfile, idx: list[int]) -> int:
    # open: best with the current path vertex still unmatched
    open_, best = prof.free[idx[0]], prof.full[idx[0]]
    for i in idx[1:]:
        open_, best = prof.free[i] + best, max(prof.full[i] + best, prof.free[i] + 1 + open_)
    return best


def _paths(g: Graph) -> list[list[int]]:
    """Cycle positions left as a path after deleting each ordered cycle edge."""
    size = len(find_cycle(g).cycle_vertices)
    return [[(k + 1 + j) % size for j in range(size)] for k in range(size)]


@per_graph
def alpha_without_cycle_edges(g: Graph) -> list[int]:
    """alpha(G - e) for each edge e of the unique cycle, in walk order."""
    prof = _cycle_profile(g)
    return [_path_alpha(prof, path) for path in _paths(g)]


@per_graph
def mu_without_cycle_edges(g: Graph) -> list[int]:
    """mu(G - e) for each edge e of the unique cycle, in walk order."""
    prof = _cycle_profile(g)
    return [_path_mu(prof, path) for path in _paths(g)]


def _unicyclic_matching(g: Graph) -> set[Edge]:
    # mu(G) = max_e mu(G - e) over cycle edges; first maximizer in walk order
    values = mu_without_cycle_edges(g)
    k = values.index(max(values))
    return _forest_matching(g, skip=find_cycle(g).ordered_cycle_edges()[k])


@per_graph
def max_matching(g: Graph) -> MatchingResult:
    """A maximum matching, deterministic for a given graph."""
    edges: set[Edge] = set()
    for part, cyclic in _unicyclic_parts(g):
        edges |= _unicyclic_matching(part) if cyclic else _forest_matching(part)
    saturated = frozenset(v for e in edges for v in e)
    return MatchingResult(frozenset(edges), saturated)


def mu(g: Graph) -> int:
    """Matching number."""
    return len(max_matching(g).edges)


@per_graph
def forest_mu_without_each(g: Graph) -> dict[str, int]:
    """Map every vertex v of a forest F to mu(F - v), by rerooting."""
    cls = require_supported(g)
    if not cls.acyclic:
        raise UnsupportedClass("forest required")
    order, parent = _rooted(g)
    free = dict.fromkeys(order, 0)  # best matching of subtree with v unmatched
    full: dict[str, int] = {}
    ones = dict.fromkeys(order, 0)  # children whose edge to v can be added for +1
    for v in reversed(order):
        full[v] = free[v] + (1 if ones[v] else 0)
        p = parent[v]
        if p is not None:
            free[p] += full[v]
            if full[v] == free[v]:
                ones[p] += 1

    root_of: dict[str, str] = {}
    comp_mu: dict[str, int] = {}
    up_free: dict[str, int] = {}
    up_full: dict[str, int] = {}
    for v in order:
        p = parent[v]
        if p is None:
            root_of[v] = v
            comp_mu[v] = full[v]
            continue
        root_of[v] = root_of[p]
        gain_v = 1 if full[v] == free[v] else 0
        others = ones[p] - gain_v
        if parent[p] is None:
            up_free[v] = free[p] - full[v]
        else:
            up_free[v] = free[p] - full[v] + up_full[p]
            if up_full[p] == up_free[p]:
                others += 1
        up_full[v] = up_free[v] + (1 if others else 0)

    total = sum(comp_mu.values())
    return {
        v: total - comp_mu[root_of[v]] + free[v] + up_full.get(v, 0)
        for v in g.vertices
    }


# -- derived predicates ------------------------------------------------------


def is_koenig_egervary(g: Graph) -> bool:
    return alpha(g) + mu(g) == g.n


def is_alpha_critical(g: Graph, e: tuple[str, str]) -> bool:
    """True when deleting ``e`` raises the independence number."""
    if edge_key(*e) not in g.edges:
        raise UnknownEdge(e)
    return alpha(delete_edge(g, e)) > alpha(g)


def cycle_alpha_critical_edges(g: Graph) -> list[Edge]:
    """The alpha-critical edges of the unique cycle, in cycle walk order."""
    if classify(g) is not GraphClass.UNICYCLIC:
        raise NotUnicyclic(f"graph is {classify(g).value}")
    base = alpha(g)
    return [
        e for e, a in zip(find_cycle(g).ordered_cycle_edges(), alpha_without_cycle_edges(g))
        if a > base
    ]
