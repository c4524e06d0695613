from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from oracles import GeometricRep, commuting, infinity_components
from racgmin import (
    CoxeterPresentation,
    ball,
    boundary_minimal,
    irreducible_components,
    is_infinite,
    is_spherical,
    maximal_spherical_subsets,
    parabolic_orbit_dense,
)
from racgmin.corpus import corpus, load, random_family
from test_core import presentations


def named(p, subsets):
    return [set(p.names(c)) for c in subsets]


def test_is_spherical_examples(pentagon):
    assert is_spherical(pentagon, ())
    assert is_spherical(pentagon, "1 2")
    assert not is_spherical(pentagon, "1 3")
    assert not is_infinite(pentagon, ())
    assert is_infinite(pentagon, "1 3")
    assert not is_infinite(pentagon, "1 2")


@pytest.mark.parametrize("name", ["pentagon", "path4", "d_inf_x_z2", "random5_seed11"])
def test_is_spherical_matches_ball_growth(name):
    p = load(name)
    for k in range(1, p.rank + 1):
        for t in combinations(range(p.rank), k):
            # a finite right-angled group has no element longer than its rank
            sizes = ball(p.induced(t), len(t) + 1).sphere_sizes
            assert is_spherical(p, t) == (sizes[-1] == 0), t


def test_maximal_cliques_examples(d_inf, dd, pentagon):
    assert named(d_inf, maximal_spherical_subsets(d_inf)) == [{"a"}, {"b"}]
    assert named(dd, maximal_spherical_subsets(dd)) == [{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}]
    got = named(pentagon, maximal_spherical_subsets(pentagon))
    assert got == [{"1", "2"}, {"1", "5"}, {"2", "3"}, {"3", "4"}, {"4", "5"}]


def _nx_cliques(p):
    g = nx.Graph()
    g.add_nodes_from(range(p.rank))
    g.add_edges_from(p.edges)
    return sorted((sorted(c) for c in nx.find_cliques(g)))


@given(presentations(max_rank=9))
@settings(max_examples=150)
def test_maximal_cliques_match_networkx(p):
    got = maximal_spherical_subsets(p)
    assert [sorted(c) for c in got] == _nx_cliques(p)
    assert set().union(*got) == set(range(p.rank))


def test_maximal_cliques_on_family():
    for p in corpus().values():
        assert [sorted(c) for c in maximal_spherical_subsets(p)] == _nx_cliques(p)
    for p in random_family():
        assert [sorted(c) for c in maximal_spherical_subsets(p)] == _nx_cliques(p)


def test_irreducible_components_examples(pentagon, dd, dz2):
    dec = irreducible_components(pentagon)
    assert dec.components == (frozenset(range(5)),)
    assert dec.s_tilde == frozenset(range(5)) and dec.finite_part == frozenset()
    dec = irreducible_components(dd)
    assert named(dd, dec.components) == [{"a", "b"}, {"c", "d"}]
    assert set(dd.names(dec.s_tilde)) == {"a", "b", "c", "d"}
    dec = irreducible_components(dz2)
    assert named(dz2, dec.components) == [{"a", "b"}, {"c"}]
    assert set(dz2.names(dec.s_tilde)) == {"a", "b"}
    assert set(dz2.names(dec.finite_part)) == {"c"}


@given(presentations(max_rank=8))
@settings(max_examples=150)
def test_components_match_complement_graph(p):
    h = nx.Graph()
    h.add_nodes_from(range(p.rank))
    h.add_edges_from(p.edges)
    g = nx.complement(h)
    want = sorted(sorted(c) for c in nx.connected_components(g))
    dec = irreducible_components(p)
    assert sorted(sorted(c) for c in dec.components) == want
    assert dec.s_tilde | dec.finite_part == frozenset(range(p.rank))
    assert not dec.s_tilde & dec.finite_part


def test_boundary_minimal_examples(pentagon, dd, dz2):
    assert boundary_minimal(load("complete3")).outcome == "empty-boundary"
    assert boundary_minimal(load("single")).outcome == "empty-boundary"
    assert boundary_minimal(pentagon).outcome == "minimal"
    v = boundary_minimal(dd)
    assert v.outcome == "not-minimal"
    assert named(dd, v.splitting) == [{"a", "b"}, {"c", "d"}]
    assert boundary_minimal(dz2).minimal


@given(presentations(max_rank=8))
@settings(max_examples=150)
def test_boundary_minimal_invariants(p):
    v = boundary_minimal(p)
    dec = irreducible_components(p)
    pairs = commuting(p.rank, p.edges)
    big = [c for c in infinity_components(p.rank, pairs) if len(c) >= 2]
    assert (v.outcome == "empty-boundary") == (len(p.edges) == p.rank * (p.rank - 1) // 2)
    assert (v.outcome == "minimal") == (len(big) == 1)
    if v.outcome == "not-minimal":
        first, rest = v.splitting
        assert not first & rest and first | rest == dec.s_tilde
        assert first in big
        for part in (first, rest):
            assert all(c <= part or not c & part for c in big)


def test_parabolic_orbit_dense_examples(pentagon, dd):
    assert parabolic_orbit_dense(pentagon, "1 3")
    assert not parabolic_orbit_dense(pentagon, "1 2")
    assert not parabolic_orbit_dense(dd, "a b c")
    assert parabolic_orbit_dense(dd, "a b c d")
    assert not parabolic_orbit_dense(load("complete3"), "a b c")


@given(presentations(max_rank=7))
@settings(max_examples=150)
def test_parabolic_orbit_dense_invariants(p):
    full = frozenset(range(p.rank))
    infinite_w = is_infinite(p, full)
    assert parabolic_orbit_dense(p, full) == infinite_w
    for k in range(p.rank + 1):
        for t in combinations(range(p.rank), k):
            if parabolic_orbit_dense(p, t):
                assert is_infinite(p, t)


def test_infinite_parabolic_by_matrix_growth(pentagon):
    # independent finiteness check: W_T infinite iff its ball keeps growing
    for t in combinations(range(5), 2):
        rep = GeometricRep(2, [(0, 1)] if pentagon.comm[t[0], t[1]] else [])
        grows = len(rep.ball(6)) > len(rep.ball(5))
        assert grows == is_infinite(pentagon, t)


def test_induced_presentation_is_consistent():
    p = CoxeterPresentation.from_pairs(["x", "y", "z"], [("x", "y")])
    sub = p.induced([0, 2])
    assert sub.generators == ("x", "z") and sub.edges == ()
