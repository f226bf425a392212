"""Seeded differential campaigns: fast routes vs each other and vs the oracle."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import Method, check_structural_consistency, core, core_by_deletion, core_tree_by_matching
from .gen import GenSpec, generate
from .graph import Graph, GraphClass, classify, serialize
from .invariants import graph_invariants
from .oracle import oracle_analyze
from .solver import alpha, mu

CAMPAIGN_KINDS = ("tree", "unicyclic", "forest", "mixed")
_MIN_N = {"tree": 1, "forest": 1, "unicyclic": 3}


def instance_spec(kind: str, max_n: int, seed: int) -> GenSpec:
    """Draw the instance kind and order from ``seed``; the graph reuses it."""
    rng = random.Random(seed)
    if kind == "mixed":
        kind = ("tree", "unicyclic", "forest")[min(int(rng.random() * 3), 2)]
    lo = _MIN_N[kind]
    span = max_n - lo + 1
    return GenSpec(kind, lo + min(int(rng.random() * span), span - 1), seed)


@dataclass
class InstanceResult:
    index: int
    seed: int
    spec: GenSpec
    failures: list[str]
    oracle_checked: bool
    koenig_egervary: bool
    union_formula_holds: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def check_graph(g: Graph, oracle_limit: int, expected: GraphClass | None = None) -> tuple[list[str], bool, bool | None]:
    """Run every applicable check on ``g``.

    Returns (failed check names, KE flag, union-formula telemetry for KE
    unicyclic graphs). Per-edge and oracle checks only run when
    ``n <= oracle_limit``.
    """
    fails: list[str] = []
    cls = classify(g)
    if expected is not None and cls is not expected and not (expected is GraphClass.FOREST and cls.acyclic):
        return [f"class {cls.value} != {expected.value}"], False, None
    if not cls.supported:
        return ["unsupported"], False, None

    small = g.n <= oracle_limit
    a, m = alpha(g), mu(g)
    ke = a + m == g.n
    fast = core(g)
    deletion = core_by_deletion(g)
    if fast.core != deletion.core:
        fails.append("core_fast_vs_deletion")

    union_holds = None
    if cls.acyclic:
        if core_tree_by_matching(g).core != deletion.core:
            fails.append("tree_core_matching_vs_deletion")
    elif cls is GraphClass.UNICYCLIC:
        rep = check_structural_consistency(g)
        fails.extend(f"unicyclic:{name}" for name in rep.failures())
        union_holds = rep.union_formula_holds
        if not ke and fast.method is not Method.STRUCTURAL_DECOMPOSITION:
            fails.append("non_ke_not_structural")

    inv = graph_invariants(g, deletion.core, per_edge=small)
    fails.extend(name for name, held in inv.items() if not held)

    if small:
        o = oracle_analyze(g, limit=oracle_limit)
        if o.alpha != a:
            fails.append("oracle_alpha")
        if o.mu != m:
            fails.append("oracle_mu")
        if o.core != fast.core:
            fails.append("oracle_core")
        if o.core != deletion.core:
            fails.append("oracle_core_deletion")
        # a unique maximum independent set is its own core
        if o.num_mis < 1 or (len(o.core) == o.alpha) != (o.num_mis == 1):
            fails.append("oracle_num_mis")
        if (o.core == frozenset(g.vertices)) != (g.m == 0):
            fails.append("oracle_full_core_iff_edgeless")
        if any(not fast.core <= s for s in o.omega_sample):
            fails.append("core_outside_some_mis")
    return fails, ke, union_holds


_EXPECTED = {"tree": GraphClass.TREE, "unicyclic": GraphClass.UNICYCLIC, "forest": GraphClass.FOREST}


def run_instance(args: tuple[int, str, int, int, int]) -> InstanceResult:
    index, kind, max_n, base_seed, oracle_limit = args
    seed = base_seed + index
    spec = instance_spec(kind, max_n, seed)
    g = generate(spec)
    fails, ke, union_holds = check_graph(g, oracle_limit, _EXPECTED[spec.kind])
    return InstanceResult(index, seed, spec, fails, g.n <= oracle_limit, ke, union_holds)


@dataclass
class CampaignResult:
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def first_failure(self) -> InstanceResult | None:
        return next((r for r in self.results if not r.ok), None)

    def summary_lines(self) -> list[str]:
        rs = self.results
        ke_uni = [r for r in rs if r.union_formula_holds is not None]
        lines = [
            f"instances: {len(rs)}",
            f"passed: {self.passed}",
            f"failed: {self.failed}",
            f"oracle_checked: {sum(r.oracle_checked for r in rs)}",
            f"koenig_egervary: {sum(r.koenig_egervary for r in rs)}",
            f"ke_unicyclic_union_formula_holds: {sum(bool(r.union_formula_holds) for r in ke_uni)}/{len(ke_uni)}",
        ]
        first = self.first_failure
        if first is not None:
            lines.append(f"first_failure: index={first.index} seed={first.seed} kind={first.spec.kind} n={first.spec.n}")
            lines.append("failed_checks: " + ", ".join(first.failures))
            lines.append(serialize(generate(first.spec), first.spec.header()).rstrip("\n"))
        return lines


def run_campaign(
    count: int,
    max_n: int,
    seed: int,
    kind: str = "mixed",
    oracle_limit: int = 20,
    jobs: int = 1,
) -> CampaignResult:
    """Generate ``count`` instances with seeds ``seed + i`` and check each.

    Results are kept in index order, so parallel runs report exactly what a
    sequential run would.
    """
    if kind not in CAMPAIGN_KINDS:
        raise ValueError(f"kind must be one of {CAMPAIGN_KINDS}")
    tasks = [(i, kind, max_n, seed, oracle_limit) for i in range(count)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        results = [run_instance(t) for t in tasks]
    return CampaignResult(results)
