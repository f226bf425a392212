from __future__ import annotations

import pytest
from hypothesis import given, settings

from brute import brute_core, maximum_independent_sets
from conftest import cycle, graph_of, supported_graphs, trees, unicyclic_graphs
from unicore.core import (
    Method,
    check_structural_consistency,
    core,
    core_by_deletion,
    core_tree_by_matching,
    core_unicyclic,
    pendant_cores,
)
from unicore.errors import NotUnicyclic, UnsupportedClass
from unicore.gen import fixture
from unicore.graph import closed_neighborhood, delete_vertices, find_cycle
from unicore.invariants import ke_matching_structure
from unicore.solver import alpha, forest_mu_without_each, is_alpha_critical, is_koenig_egervary, max_matching, mu


class TestCoreByDeletion:
    def test_fig1(self, fig1):
        res = core_by_deletion(fig1)
        assert res.core == {"a", "b", "c"}
        assert res.method is Method.VERTEX_DELETION

    def test_c5(self):
        assert core_by_deletion(cycle(5)).core == frozenset()

    def test_paw(self, paw):
        # brute force: the maximum independent sets are {b, d} and {c, d}
        assert sorted(map(sorted, maximum_independent_sets(paw))) == [["b", "d"], ["c", "d"]]
        assert core_by_deletion(paw).core == {"d"}

    def test_unsupported(self):
        with pytest.raises(UnsupportedClass):
            core_by_deletion(graph_of("a b,a c,a d,b c,b d,c d"))


class TestTreeByMatching:
    def test_fig2_pendant_tree(self, fig2_tx):
        res = core_tree_by_matching(fig2_tx)
        assert res.core == {"a", "b"}
        assert res.method is Method.TREE_MATCHING

    def test_p3(self):
        assert core_tree_by_matching(graph_of("a b,b c")).core == {"a", "c"}

    def test_star(self):
        assert core_tree_by_matching(graph_of("h x,h y,h z")).core == {"x", "y", "z"}

    def test_rejects_cycles(self, paw):
        with pytest.raises(UnsupportedClass):
            core_tree_by_matching(paw)

    @settings(max_examples=200)
    @given(trees(max_n=16))
    def test_routes_agree(self, t):
        by_matching = core_tree_by_matching(t).core
        mus = forest_mu_without_each(t)
        base_mu, base_alpha = mu(t), alpha(t)
        for v in t.vertices:
            rest = delete_vertices(t, [v])
            in_core = v in by_matching
            assert in_core == (mus[v] == base_mu)
            assert in_core == ((alpha(rest) if rest.n else 0) == base_alpha - 1)
        assert by_matching == core_by_deletion(t).core


class TestUnicyclic:
    def test_fig2_structural(self, fig2):
        res = core_unicyclic(fig2)
        assert res.core == {"a", "b"}
        assert res.method is Method.STRUCTURAL_DECOMPOSITION
        assert res.certificate == {"x": frozenset({"a", "b"})}

    def test_odd_cycle_empty_union(self):
        res = core_unicyclic(cycle(7))
        assert res.method is Method.STRUCTURAL_DECOMPOSITION
        assert res.core == frozenset() and res.certificate == {}

    def test_fig1_fallback(self, fig1):
        res = core_unicyclic(fig1)
        assert res.core == {"a", "b", "c"}
        assert res.method is Method.KE_FALLBACK
        assert res.certificate is None

    def test_requires_unicyclic(self):
        with pytest.raises(NotUnicyclic):
            core_unicyclic(graph_of("a b"))

    @settings(max_examples=300)
    @given(unicyclic_graphs(max_n=13))
    def test_union_of_pendant_cores_is_exact(self, g):
        res = core_unicyclic(g)
        truth = brute_core(g)
        assert res.core == truth == core_by_deletion(g).core
        if not is_koenig_egervary(g):
            assert res.method is Method.STRUCTURAL_DECOMPOSITION
            assert set(res.certificate) == find_cycle(g).n1
            assert frozenset().union(*res.certificate.values()) == res.core


class TestDispatch:
    def test_two_p3(self):
        assert core(graph_of("a b,b c,x y,y z")).core == {"a", "c", "x", "z"}

    def test_fig2(self, fig2):
        assert core(fig2).core == {"a", "b"}

    def test_single_vertex(self):
        res = core(graph_of("a"))
        assert res.core == {"a"}

    def test_unicyclic_forest_method(self, fig1, fig2):
        g = graph_of("a b,b c,c a,a d,p q,q r,r s,s t,t p")
        res = core(g)
        assert res.core == brute_core(g)
        assert res.certificate is None

    @settings(max_examples=300)
    @given(supported_graphs(max_n=12))
    def test_matches_brute_force(self, g):
        truth = brute_core(g)
        assert core(g).core == truth
        assert core_by_deletion(g).core == truth
        for s in maximum_independent_sets(g):
            assert truth <= s


@pytest.mark.parametrize(
    "name, expected_core, union_holds",
    [
        ("fig3_H1", {"a", "b"}, True),
        ("fig3_H2", {"x", "y", "z"}, True),
        ("fig4_H1", {"a", "b"}, True),
        ("fig4_H2", {"t", "x", "y", "z"}, False),
        ("fig5_G1", {"a", "b", "c"}, True),
        ("fig5_G2", {"t", "y", "z"}, False),
    ],
)
def test_ke_examples_where_union_formula_may_fail(name, expected_core, union_holds):
    g = fixture(name)
    assert is_koenig_egervary(g)
    assert brute_core(g) == expected_core
    rep = check_structural_consistency(g)
    assert rep.ok and rep.koenig_egervary
    assert rep.fast.core == expected_core
    assert rep.union_formula_holds is union_holds
    union = frozenset().union(*pendant_cores(g).values())
    assert (union == expected_core) is union_holds


def test_fig3_closed_cores():
    assert closed_neighborhood(fixture("fig3_H1"), core(fixture("fig3_H1")).core) == {"a", "b", "c"}
    h2 = fixture("fig3_H2")
    closed = closed_neighborhood(h2, core(h2).core)
    assert closed == {"x", "y", "z", "u", "v"}
    assert closed & set(find_cycle(h2).cycle_vertices) == {"u"}


class TestConsistency:
    def test_fig2(self, fig2):
        rep = check_structural_consistency(fig2)
        assert rep.agree and rep.ok
        assert rep.fast.core == {"a", "b"}
        assert rep.union_formula_holds is None

    def test_c4(self):
        rep = check_structural_consistency(cycle(4))
        assert rep.ok and rep.fast.core == frozenset()

    @settings(max_examples=300)
    @given(unicyclic_graphs(max_n=16))
    def test_invariants_hold(self, g):
        rep = check_structural_consistency(g)
        assert rep.failures() == []


class TestStructure:
    @settings(max_examples=200)
    @given(supported_graphs(max_n=12))
    def test_alpha_critical_edges_avoid_closed_core(self, g):
        closed = closed_neighborhood(g, core(g).core)
        for e in g.sorted_edges():
            if is_alpha_critical(g, e):
                assert not set(e) & closed

    @settings(max_examples=200)
    @given(unicyclic_graphs(max_n=16))
    def test_non_ke_cycle_avoids_closed_core(self, g):
        if not is_koenig_egervary(g):
            closed = closed_neighborhood(g, core(g).core)
            assert not closed & set(find_cycle(g).cycle_vertices)

    @settings(max_examples=200)
    @given(unicyclic_graphs(max_n=16))
    def test_pendant_root_in_core_implies_ke(self, g):
        if any(x in c for x, c in pendant_cores(g).items()):
            assert is_koenig_egervary(g)

    @settings(max_examples=200)
    @given(supported_graphs(max_n=14))
    def test_ke_matching_structure(self, g):
        if is_koenig_egervary(g):
            assert ke_matching_structure(g, core(g).core, max_matching(g))
