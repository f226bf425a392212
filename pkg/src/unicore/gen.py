"""Seeded instance generators and pinned example graphs.

Randomness comes from ``random.Random(seed).random()`` only: CPython
guarantees that the Mersenne Twister float stream for a given seed does not
change between releases, which the other ``Random`` methods do not promise.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .errors import InvalidSpec, UnknownFixture
from .graph import Graph, edge_key, parse_graph

GENERATOR = "unicore-gen/1 (mt19937 random(), pruefer decoding)"
KINDS = ("tree", "unicyclic", "forest")
# probability that gen_forest drops each tree edge
FOREST_CUT = 0.25


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    seed: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown kind {self.kind!r}")
        minimum = 3 if self.kind == "unicyclic" else 1
        if not isinstance(self.n, int) or self.n < minimum:
            raise InvalidSpec(f"{self.kind} needs n >= {minimum}, got {self.n!r}")

    def header(self) -> list[str]:
        return [f"generator: {GENERATOR}", f"kind={self.kind} n={self.n} seed={self.seed}"]


def _below(rng: random.Random, k: int) -> int:
    return min(int(rng.random() * k), k - 1)


def _tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    code = [_below(rng, n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _build(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph([str(i) for i in range(n)], [(str(u), str(v)) for u, v in edges])


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on vertices "0".."n-1"."""
    GenSpec("tree", n, seed)
    return _build(n, _tree_edges(n, random.Random(seed)))


def gen_unicyclic(n: int, seed: int) -> Graph:
    """Random tree plus one uniformly chosen non-edge.

    Not uniform over unicyclic graphs.
    """
    GenSpec("unicyclic", n, seed)
    rng = random.Random(seed)
    edges = _tree_edges(n, rng)
    present = {edge_key(str(u), str(v)) for u, v in edges}
    while True:
        u, v = _below(rng, n), _below(rng, n)
        if u != v and edge_key(str(u), str(v)) not in present:
            break
    return _build(n, edges + [(u, v)])


def gen_forest(n: int, seed: int) -> Graph:
    """Random tree with each edge dropped independently with probability 1/4."""
    GenSpec("forest", n, seed)
    rng = random.Random(seed)
    edges = [e for e in _tree_edges(n, rng) if rng.random() >= FOREST_CUT]
    return _build(n, edges)


def generate(spec: GenSpec) -> Graph:
    return {"tree": gen_tree, "unicyclic": gen_unicyclic, "forest": gen_forest}[spec.kind](spec.n, spec.seed)


# Unlabelled vertices in the fig3-fig5 graphs are named p*, q*, ...
_FIXTURES: dict[str, list[str]] = {
    "fig1_G": ["a u", "u c", "c v", "v y", "u b", "v x", "x y"],
    "fig2_G": ["u v", "v x", "x y", "a x", "b x", "y w", "w c", "c t", "t d", "d y"],
    "fig2_Tx": ["u v", "v x", "a x", "b x"],
    # bipartite, 4-cycle; core {a, b}
    "fig3_H1": ["a c", "c b", "c p1", "p1 p2", "p2 d", "d q3", "p1 q1", "q1 q2", "q2 p2"],
    # odd 5-cycle, KE; core {x, y, z}
    "fig3_H2": ["p1 p2", "p2 u", "u v", "v z", "p1 q1", "q1 q2", "q2 u", "u x", "v y"],
    # same graph as fig3_H1
    "fig4_H1": ["a c", "c b", "c p1", "p1 p2", "p2 d", "d q3", "p1 q1", "q1 q2", "q2 p2"],
    # bipartite, 4-cycle; core {t, x, y, z}, pendant-core union {x, y}
    "fig4_H2": ["x p1", "p1 t", "y p1", "p1 z", "z q1", "q1 q2", "t q1", "p2 q2"],
    # odd 5-cycle, KE; core {a, b, c}, pendant-core union agrees
    "fig5_G1": ["a p1", "p1 b", "p1 p2", "p2 p3", "p3 p4", "p4 c", "p2 q1", "q1 q2", "q2 p4"],
    # odd 5-cycle, KE; core {t, y, z}, pendant-core union {t, z} does not
    "fig5_G2": ["t p1", "p1 y", "y p2", "p2 z", "p1 q1", "q1 q2", "q2 p2"],
}


def fixture_names() -> list[str]:
    return list(_FIXTURES)


def fixture(name: str) -> Graph:
    try:
        lines = _FIXTURES[name]
    except KeyError:
        raise UnknownFixture(name) from None
    return parse_graph("\n".join(lines))
