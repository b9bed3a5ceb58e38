import math

import pytest
from hypothesis import given, strategies as st

from somborkit.extremal import build_pnk
from somborkit.graph import build_complete, build_cycle, build_path, build_star, make_empty, remove_edge
from somborkit.invariants import degree_sequence, edge_term, sombor, sombor_index
from somborkit.oracle import enumerate_connected

from conftest import connected_graphs, graphs


def test_edge_term():
    assert edge_term(2, 2) == pytest.approx(math.sqrt(8), abs=1e-12)
    assert edge_term(1, 1) == math.sqrt(2)
    assert edge_term(3, 2) == pytest.approx(3.605551, abs=1e-6)
    with pytest.raises(ValueError):
        edge_term(0, 2)


def test_sombor_examples():
    assert sombor(build_cycle(5)) == pytest.approx(5 * math.sqrt(8), abs=1e-9)
    assert sombor(build_path(4)) == pytest.approx(2 * math.sqrt(5) + math.sqrt(8), abs=1e-9)
    assert sombor(build_complete(4)) == pytest.approx(18 * math.sqrt(2), abs=1e-9)
    assert sombor(build_star(4)) == pytest.approx(3 * math.sqrt(10), abs=1e-9)
    v = sombor_index(make_empty(4))
    assert (v.value, v.term_count) == (0.0, 0)


def test_degree_sequence():
    assert degree_sequence(build_pnk(5, 1)) == (3, 2, 2, 2, 1)
    assert degree_sequence(build_complete(3)) == (2, 2, 2)
    assert degree_sequence(make_empty(3)) == (0, 0, 0)


@pytest.mark.parametrize("n", range(3, 21))
def test_cycle_is_n_terms(n):
    v = sombor_index(build_cycle(n))
    assert v.term_count == n
    assert v.value == n * edge_term(2, 2)


@given(graphs())
def test_index_value_invariants(g):
    v = sombor_index(g)
    assert v.term_count == g.size
    assert (v.value == 0) == (v.term_count == 0)
    assert v.value >= v.term_count * math.sqrt(2) - 1e-9


@given(graphs(), st.data())
def test_relabel_invariance_bit_exact(g, data):
    perm = data.draw(st.permutations(range(g.order)))
    assert sombor(g.relabel(perm)) == sombor(g)


@given(connected_graphs(max_order=7), st.data())
def test_edge_deletion_decreases_sampled(g, data):
    u, v = data.draw(st.sampled_from(g.edges()))
    assert sombor(g) - sombor(remove_edge(g, u, v)) > 1e-6


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_edge_deletion_decreases_exhaustive_small(n):
    # the full n <= 6 sweep lives in the acceptance suite
    for g in enumerate_connected(n):
        so = sombor(g)
        for u, v in g.edges():
            assert so - sombor(remove_edge(g, u, v)) > 1e-6
