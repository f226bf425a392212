"""Simple undirected graphs with string labels, plus cycle/pendant-tree structure.

Vertex order is insertion order; neighbor lists are sorted lexicographically.
Edges are stored as ``(u, v)`` tuples with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import wraps
from typing import Any, Callable, Iterable, Iterator, Mapping, TypeVar

from .errors import InvalidInput, NotUnicyclic, UnknownEdge, UnknownVertex

Edge = tuple[str, str]
T = TypeVar("T")


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("_vertices", "_index", "_adj", "_edges", "_cache")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> None:
        order: list[str] = []
        index: dict[str, int] = {}
        for v in vertices:
            if v in index:
                raise InvalidInput(f"duplicate vertex {v!r}")
            index[v] = len(order)
            order.append(v)
        adj: dict[str, list[str]] = {v: [] for v in order}
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"self-loop on {u!r}")
            if u not in index:
                raise UnknownVertex(u)
            if v not in index:
                raise UnknownVertex(v)
            e = edge_key(u, v)
            if e in seen:
                raise InvalidInput(f"duplicate edge {u!r} {v!r}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._vertices = tuple(order)
        self._index = index
        self._adj = {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}
        self._edges = frozenset(seen)
        self._cache: dict[str, Any] = {}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def adjacency(self) -> Mapping[str, tuple[str, ...]]:
        return self._adj

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def position(self, v: str) -> int:
        return self._index[v]

    def induced(self, keep: Iterable[str]) -> Graph:
        """Subgraph spanned by ``keep``, in this graph's vertex order."""
        keep = set(keep)
        for v in keep:
            if v not in self._index:
                raise UnknownVertex(v)
        verts = [v for v in self._vertices if v in keep]
        return Graph(verts, (e for e in self._edges if e[0] in keep and e[1] in keep))


def per_graph(fn: Callable[[Graph], T]) -> Callable[[Graph], T]:
    """Memoize a one-argument function of an (immutable) graph on the graph.

    Cached values are shared between callers and must not be mutated.
    """
    key = f"{fn.__module__}.{fn.__qualname__}"

    @wraps(fn)
    def wrapper(g: Graph) -> T:
        try:
            return g._cache[key]
        except KeyError:
            value = g._cache[key] = fn(g)
            return value

    return wrapper


class GraphClass(str, Enum):
    TREE = "Tree"
    FOREST = "Forest"
    UNICYCLIC = "Unicyclic"
    UNICYCLIC_FOREST = "UnicyclicForest"
    UNSUPPORTED = "Unsupported"

    def __str__(self) -> str:
        return self.value

    @property
    def supported(self) -> bool:
        return self is not GraphClass.UNSUPPORTED

    @property
    def acyclic(self) -> bool:
        return self in (GraphClass.TREE, GraphClass.FOREST)


@dataclass(frozen=True)
class PendantTree:
    x: str
    y: str
    tree: Graph


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph and its pendant trees.

    ``pendant_trees`` holds one entry per attachment vertex ``x``; ``y`` is the
    cycle neighbor of ``x`` and ``tree`` is the component of ``G - xy``
    containing ``x``. Entries are sorted by ``x``.
    """

    cycle_vertices: tuple[str, ...]
    cycle_edges: frozenset[Edge]
    n1: frozenset[str]
    pendant_trees: tuple[PendantTree, ...]

    def ordered_cycle_edges(self) -> list[Edge]:
        """Cycle edges in walk order, starting at the first cycle vertex."""
        c = self.cycle_vertices
        return [edge_key(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


# -- text format ------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``u v`` per edge, ``v`` for an isolated vertex.

    ``#`` starts a comment. Vertex order is first appearance.
    """
    vertices: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertices.setdefault(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise InvalidInput(f"line {lineno}: self-loop on {u!r}")
            e = edge_key(u, v)
            if e in seen:
                raise InvalidInput(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(e)
            vertices.setdefault(u)
            vertices.setdefault(v)
            edges.append((u, v))
        else:
            raise InvalidInput(f"line {lineno}: expected 1 or 2 tokens, got {len(tokens)}")
    if not vertices:
        raise InvalidInput("empty graph")
    return Graph(vertices, edges)


def serialize(g: Graph, header: Iterable[str] = ()) -> str:
    """Emit the edge-list format: header comments, then every vertex as a
    single-token line in vertex order, then the edges sorted lexicographically.

    Listing every vertex (not only isolated ones) makes the vertex order
    survive a round trip.
    """
    lines = [f"# n={g.n} m={g.m}"]
    lines.extend(f"# {h}" for h in header)
    lines.extend(g.vertices)
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- elementary operations ---------------------------------------------------


def delete_vertices(g: Graph, w: Iterable[str]) -> Graph:
    w = set(w)
    for v in w:
        if v not in g:
            raise UnknownVertex(v)
    return g.induced(v for v in g.vertices if v not in w)


def delete_edge(g: Graph, e: tuple[str, str]) -> Graph:
    key = edge_key(*e)
    if key not in g.edges:
        raise UnknownEdge(e)
    return Graph(g.vertices, (f for f in g.edges if f != key))


def closed_neighborhood(g: Graph, vs: str | Iterable[str]) -> frozenset[str]:
    """N[v] for a single vertex, or N[A] for a collection."""
    if isinstance(vs, str):
        vs = (vs,)
    out: set[str] = set()
    for v in vs:
        out.add(v)
        out.update(g.neighbors(v))
    return frozenset(out)


@per_graph
def components(g: Graph) -> tuple[tuple[str, ...], ...]:
    """Connected components as vertex lists, each in BFS order from its
    lexicographically smallest vertex; components ordered by that vertex."""
    seen: set[str] = set()
    comps = []
    for root in sorted(g.vertices):
        if root in seen:
            continue
        seen.add(root)
        order = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    queue.append(w)
        comps.append(tuple(order))
    return tuple(comps)


@per_graph
def classify(g: Graph) -> GraphClass:
    comps = components(g)
    acyclic = unicyclic = 0
    for comp in comps:
        members = set(comp)
        m_i = sum(1 for v in comp for w in g.neighbors(v) if w in members) // 2
        if m_i == len(comp) - 1:
            acyclic += 1
        elif m_i == len(comp):
            unicyclic += 1
        else:
            return GraphClass.UNSUPPORTED
    if unicyclic == 0:
        return GraphClass.TREE if acyclic == 1 else GraphClass.FOREST
    if unicyclic == 1 and acyclic == 0:
        return GraphClass.UNICYCLIC
    return GraphClass.UNICYCLIC_FOREST


@per_graph
def find_cycle(g: Graph) -> CycleInfo:
    """Locate the unique cycle by repeatedly stripping degree-1 vertices."""
    if classify(g) is not GraphClass.UNICYCLIC:
        raise NotUnicyclic(f"graph is {classify(g).value}")
    deg = {v: g.degree(v) for v in g.vertices}
    stripped: set[str] = set()
    leaves = deque(v for v in g.vertices if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        stripped.add(v)
        for w in g.neighbors(v):
            if w not in stripped:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    on_cycle = set(g.vertices) - stripped

    start = min(on_cycle)
    cyc_nbrs = {v: [w for w in g.neighbors(v) if w in on_cycle] for v in on_cycle}
    assert all(len(ns) == 2 for ns in cyc_nbrs.values())
    walk = [start, min(cyc_nbrs[start])]
    while True:
        prev, cur = walk[-2], walk[-1]
        a, b = cyc_nbrs[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        walk.append(nxt)
    cycle_edges = frozenset(edge_key(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))

    n1: set[str] = set()
    attach: dict[str, str] = {}
    for v in stripped:
        hits = [w for w in g.neighbors(v) if w in on_cycle]
        if hits:
            # a second cycle neighbor would close a second cycle
            assert len(hits) == 1, f"{v} has {len(hits)} cycle neighbors"
            n1.add(v)
            attach[v] = hits[0]

    off_cycle = g.induced(stripped)
    pendant = []
    for comp in components(off_cycle):
        roots = [v for v in comp if v in n1]
        assert len(roots) == 1
        x = roots[0]
        pendant.append(PendantTree(x, attach[x], off_cycle.induced(comp)))
    pendant.sort(key=lambda p: p.x)
    return CycleInfo(tuple(walk), cycle_edges, frozenset(n1), tuple(pendant))
