"""Exhaustive ground truth for small graphs of any class.

Deliberately plain: include/exclude branching on bitmasks. Nothing here
imports the solver.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import TooLarge
from .graph import Graph

DEFAULT_LIMIT = 20
DEFAULT_SAMPLE = 64


def default_limit() -> int:
    return int(os.environ.get("UNICORE_ORACLE_LIMIT", DEFAULT_LIMIT))


@dataclass(frozen=True)
class OracleReport:
    alpha: int
    mu: int
    num_mis: int
    core: frozenset[str]
    omega_sample: tuple[frozenset[str], ...]


def _masks(g: Graph) -> tuple[list[str], list[int]]:
    labels = list(g.vertices)
    index = {v: i for i, v in enumerate(labels)}
    nbr = [0] * len(labels)
    for u, v in g.edges:
        nbr[index[u]] |= 1 << index[v]
        nbr[index[v]] |= 1 << index[u]
    return labels, nbr


def _enumerate_mis(g: Graph, sample: int) -> tuple[int, int, int, list[int]]:
    """Walk every maximum independent set once.

    Returns (alpha, count, intersection mask, first ``sample`` sets as masks).
    Masks index vertices in vertex order.
    """
    labels, nbr = _masks(g)
    n = len(labels)
    full = (1 << n) - 1
    best = 0
    count = 0
    core = full
    kept: list[int] = []

    def grow(i: int, chosen: int, size: int, banned: int) -> None:
        nonlocal best, count, core, kept
        available = bin(full & ~banned >> i << i).count("1")
        if size + available < best:
            return
        if i == n:
            if size > best:
                best, count, core, kept = size, 0, full, []
            count += 1
            core &= chosen
            if len(kept) < sample:
                kept.append(chosen)
            return
        if not banned >> i & 1:
            grow(i + 1, chosen | 1 << i, size + 1, banned | nbr[i] | 1 << i)
        grow(i + 1, chosen, size, banned | 1 << i)

    grow(0, 0, 0, 0)
    return best, count, core, kept


def matching_number(g: Graph) -> int:
    """mu by backtracking: the lowest undecided vertex is left bare or paired."""
    labels = list(g.vertices)
    index = {v: i for i, v in enumerate(labels)}
    nbr = [sum(1 << index[w] for w in g.neighbors(v)) for v in labels]
    full = (1 << len(labels)) - 1
    best = 0

    def grow(free: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + bin(free).count("1") // 2 <= best:
            return
        low = free & -free
        i = low.bit_length() - 1
        rest = free ^ low
        options = nbr[i] & rest
        while options:
            bit = options & -options
            grow(rest ^ bit, size + 1)
            options ^= bit
        grow(rest, size)

    grow(full, 0)
    return best


def oracle_analyze(g: Graph, limit: int | None = None, sample: int = DEFAULT_SAMPLE) -> OracleReport:
    if limit is None:
        limit = default_limit()
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds oracle limit {limit}")
    labels = list(g.vertices)
    a, count, core_mask, kept = _enumerate_mis(g, sample)

    def unmask(mask: int) -> frozenset[str]:
        return frozenset(labels[i] for i in range(len(labels)) if mask >> i & 1)

    return OracleReport(
        alpha=a,
        mu=matching_number(g),
        num_mis=count,
        core=unmask(core_mask),
        omega_sample=tuple(unmask(s) for s in kept),
    )


def oracle_alpha(g: Graph) -> int:
    return _enumerate_mis(g, 0)[0]
