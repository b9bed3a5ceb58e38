import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from somborkit.extremal import build_pnk
from somborkit.graph import (
    Graph,
    build_complete,
    build_cycle,
    build_path,
    build_star,
    disjoint_union,
    is_connected,
    join,
    remove_edge,
)
from somborkit.oracle import enumerate_connected
from somborkit.structure import (
    are_isomorphic,
    bridges,
    classify,
    count_bridges,
    cycle_rank,
    edge_connectivity,
    unique_cycle,
    vertex_connectivity,
)

from conftest import connected_graphs, graphs, to_nx


def test_bridge_examples():
    assert count_bridges(build_cycle(7)) == 0
    assert count_bridges(build_path(6)) == 5
    assert count_bridges(build_pnk(7, 2)) == 2
    assert count_bridges(disjoint_union(build_path(3), build_cycle(3))) == 2


def test_connectivity_examples():
    assert vertex_connectivity(build_complete(5)) == 4
    assert vertex_connectivity(build_cycle(8)) == 2
    assert vertex_connectivity(join(disjoint_union(build_complete(2), build_complete(1)), build_complete(2))) == 2
    assert edge_connectivity(build_path(5)) == 1
    assert edge_connectivity(build_complete(4)) == 3
    assert edge_connectivity(build_cycle(6)) == 2
    split = disjoint_union(build_complete(2), build_complete(2))
    assert vertex_connectivity(split) == 0 and edge_connectivity(split) == 0
    with pytest.raises(ValueError):
        vertex_connectivity(build_complete(1))


def test_unique_cycle_examples():
    assert len(unique_cycle(build_pnk(9, 3))) == 6
    assert unique_cycle(build_path(5)) is None
    assert unique_cycle(build_complete(4)) is None


def test_isomorphism_examples():
    assert are_isomorphic(build_cycle(5), build_pnk(5, 0))
    assert not are_isomorphic(build_path(4), build_star(4))
    assert are_isomorphic(build_complete(3), build_cycle(3))
    with pytest.raises(ValueError):
        are_isomorphic(build_cycle(11), build_cycle(11))


def test_classify_examples():
    c5 = classify(build_cycle(5)).to_dict()
    assert c5 == {"connected": True, "bridges": 0, "kappa": 2, "lambda": 2, "unicyclic": True, "cycle_len": 5}
    p4 = classify(build_path(4))
    assert (p4.bridges, p4.kappa, p4.lam, p4.unicyclic) == (3, 1, 1, False)
    s = classify(build_pnk(6, 2))
    assert (s.bridges, s.kappa, s.cycle_len) == (2, 1, 4)


@settings(max_examples=200)
@given(graphs(max_order=9))
def test_bridges_match_networkx(g):
    assert sorted(bridges(g)) == sorted(tuple(sorted(e)) for e in nx.bridges(to_nx(g)))


@settings(max_examples=200)
@given(connected_graphs(max_order=9))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert vertex_connectivity(g) == nx.node_connectivity(h)
    assert edge_connectivity(g) == nx.edge_connectivity(h)


@settings(max_examples=200)
@given(graphs(max_order=8), graphs(max_order=8))
def test_isomorphism_matches_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_order=10), st.data())
def test_isomorphism_relabel_invariant(g, data):
    p = data.draw(st.permutations(range(g.order)))
    q = data.draw(st.permutations(range(g.order)))
    assert are_isomorphic(g, g)
    assert are_isomorphic(g.relabel(p), g.relabel(q))


@given(graphs(max_order=8), graphs(max_order=8))
def test_isomorphism_symmetric(g, h):
    assert are_isomorphic(g, h) == are_isomorphic(h, g)


def _brute_bridges(g: Graph) -> int:
    comps = nx.number_connected_components(to_nx(g))
    return sum(nx.number_connected_components(to_nx(remove_edge(g, u, v))) > comps for u, v in g.edges())


@pytest.mark.parametrize("n", range(2, 7))
def test_exhaustive_structure_facts(n):
    for g in enumerate_connected(n):
        b = count_bridges(g)
        assert (b == n - 1) == (g.size == n - 1)
        k, lam = vertex_connectivity(g), edge_connectivity(g)
        assert k <= lam <= g.min_degree()
        if cycle_rank(g) > 0:
            assert g.size >= n
        assert (unique_cycle(g) is not None) == (g.size == n)


@pytest.mark.parametrize("n", range(2, 6))
def test_bridges_match_deletion_count(n):
    for g in enumerate_connected(n):
        assert count_bridges(g) == _brute_bridges(g)


def test_unique_cycle_matches_networkx():
    for n in range(3, 7):
        for g in enumerate_connected(n):
            cyc = unique_cycle(g)
            if cyc is None:
                continue
            assert is_connected(g)
            basis = nx.cycle_basis(to_nx(g))
            assert len(basis) == 1 and sorted(basis[0]) == sorted(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert g.has_edge(a, b)
