import math

import pytest

from somborkit.extremal import build_pnk
from somborkit.graph import Graph, build_cycle
from somborkit.invariants import sombor
from somborkit.structure import are_isomorphic, count_bridges, cycle_rank, is_tree, unique_cycle
from somborkit.transforms import (
    KINDS,
    AlphaWitness,
    BetaWitness,
    DeltaWitness,
    GammaWitness,
    TauWitness,
    WitnessError,
    alpha_switch,
    apply_switch,
    beta_switch,
    delta_switch,
    gamma_switch,
    generate_instance,
    lemma_trials,
    tau_switch,
)

r = math.sqrt

# hand-built hosts in the labeling used by the worked examples
# tau: u1..u4 = 0..3, x1 = 4, y1 = 5 on u2
TAU_HOST = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)])
TAU_W = TauWitness((0, 1, 2, 3), 1, 4, 5)


def test_tau_example():
    out = tau_switch(TAU_HOST, TAU_W)
    assert set(out.edges()) == {(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)}
    assert sombor(TAU_HOST) == pytest.approx(3 * r(17) + r(20) + r(5), abs=1e-9)
    assert sombor(out) == pytest.approx(2 * r(10) + r(13) + r(8) + r(5), abs=1e-9)
    assert round(sombor(TAU_HOST), 4) == 19.0775 and round(sombor(out), 4) == 14.9946
    assert is_tree(out)


def test_tau_rejects():
    # u2 has degree 3: the would-be y1 hangs under x1 instead
    missing_y1 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)])
    with pytest.raises(WitnessError, match="adjacent"):
        tau_switch(missing_y1, TauWitness((0, 1, 2, 3), 1, 4, 5))
    # u1 is not a leaf: extra pendant on vertex 0
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (0, 6)])
    with pytest.raises(WitnessError, match="first path vertex"):
        tau_switch(g, TauWitness((0, 1, 2, 3), 1, 4, 5))
    with pytest.raises(WitnessError, match="tree"):
        tau_switch(build_cycle(6), TauWitness((0, 1, 2), 1, 3, 4))


def _two_triangles():
    # u = 0,1,2 ; w1 = 3 ; v = 4,5,6
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6), (6, 4)])


def test_alpha_example():
    g = _two_triangles()
    out = alpha_switch(g, AlphaWitness((0, 1, 2), (4, 5, 6), (3,)))
    assert are_isomorphic(out, build_pnk(7, 2))
    assert sombor(g) == pytest.approx(6 * r(13) + 2 * r(8), abs=1e-9)
    assert sombor(out) == pytest.approx(6 * r(2) + r(5) + 3 * r(13), abs=1e-9)
    assert out.size == g.size - 1
    assert count_bridges(out) == count_bridges(g)


def test_alpha_rejects():
    g = _two_triangles()
    with pytest.raises(WitnessError, match="overlap"):
        alpha_switch(g, AlphaWitness((0, 1, 2), (0, 5, 6), (3,)))
    with pytest.raises(WitnessError, match="at least one vertex"):
        alpha_switch(g, AlphaWitness((0, 1, 2), (4, 5, 6), ()))


def _beta_host():
    # cycle 0,1,2 ; v1 = 3 on u2 = 1 ; w1 = 4 on u1 = 0
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (1, 3), (0, 4)])


def test_beta_example():
    g = _beta_host()
    out = beta_switch(g, BetaWitness((0, 1, 2), (3,), (4,)))
    assert are_isomorphic(out, build_pnk(5, 2))
    assert sombor(g) == pytest.approx(r(18) + 2 * r(13) + 2 * r(10), abs=1e-9)
    assert sombor(out) == pytest.approx(3 * r(13) + r(8) + r(5), abs=1e-9)


def test_beta_rejects():
    g = _beta_host()
    with pytest.raises(WitnessError, match="cycle\\[1\\]"):
        beta_switch(g, BetaWitness((0, 2, 1), (3,), (4,)))
    longer = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (1, 3), (0, 4), (4, 5)])
    with pytest.raises(WitnessError, match="end of path_w"):
        beta_switch(longer, BetaWitness((0, 1, 2), (3,), (4,)))


def _theta():
    # 4-cycle u1..u4 = 0..3 with chord path u3 - v4 - u1 (v4 = 4)
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0)])


def test_gamma_example():
    g = _theta()
    out = gamma_switch(g, GammaWitness((0, 1, 2, 3), (4,), 2))
    assert are_isomorphic(out, build_cycle(5))
    assert sombor(g) == pytest.approx(6 * r(13), abs=1e-9)
    assert sombor(out) == pytest.approx(5 * r(8), abs=1e-9)
    assert sombor(g) - sombor(out) == pytest.approx(6 * r(13) - 5 * r(8), abs=1e-12)
    assert cycle_rank(out) == cycle_rank(g) - 1


def test_gamma_rejects():
    g = _theta()
    with pytest.raises(WitnessError, match="already present"):
        gamma_switch(g.add_edge(1, 3), GammaWitness((0, 1, 2, 3), (4,), 2))
    heavy = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0), (0, 5)])
    with pytest.raises(WitnessError, match="outer_cycle\\[0\\]"):
        gamma_switch(heavy, GammaWitness((0, 1, 2, 3), (4,), 2))


def _delta_host():
    # cycle 0,1,2 ; branches v1 = 3 and w1 = 4 both at u1 = 0
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])


def test_delta_example():
    g = _delta_host()
    out = delta_switch(g, DeltaWitness((0, 1, 2), (), (3,), (4,)))
    assert are_isomorphic(out, build_pnk(5, 2))
    assert sombor(g) == pytest.approx(2 * r(20) + r(8) + 2 * r(17), abs=1e-9)
    assert sombor(out) == pytest.approx(3 * r(13) + r(8) + r(5), abs=1e-9)
    assert count_bridges(out) == count_bridges(g)
    assert len(unique_cycle(out)) == 3


def test_delta_rejects():
    with pytest.raises(WitnessError, match="branch_v"):
        delta_switch(_delta_host(), DeltaWitness((0, 1, 2), (), (), (4,)))


def test_generated_examples_match_worked_instances():
    g, w = generate_instance("tau", {"l": 4, "t0": 1, "t1": 1, "r": 2}, seed=1)
    assert are_isomorphic(g, TAU_HOST)
    assert are_isomorphic(tau_switch(g, w), tau_switch(TAU_HOST, TAU_W))
    g, w = generate_instance("alpha", {"r": 3, "l": 3, "path": 1}, seed=7)
    assert are_isomorphic(g, _two_triangles())
    g, w = generate_instance("gamma", {"l": 4, "m": 4, "r": 3}, seed=0)
    assert are_isomorphic(g, _theta())
    assert are_isomorphic(gamma_switch(g, w), build_cycle(5))


def test_generation_is_deterministic():
    for kind in KINDS:
        rec1 = lemma_trials(kind, 5, seed=11)
        rec2 = lemma_trials(kind, 5, seed=11)
        assert rec1 == rec2


def test_generation_rejects_oversize():
    with pytest.raises(ValueError):
        generate_instance("beta", {"r": 10, "l": 6, "xi": 6}, seed=0)
    with pytest.raises(ValueError):
        generate_instance("tau", {"l": 2, "t0": 1, "t1": 1}, seed=0)
    with pytest.raises(ValueError):
        apply_switch("omega", _theta(), None)


@pytest.mark.parametrize("kind", KINDS)
def test_structural_postconditions(kind):
    for rec_seed in range(60):
        g, w = generate_instance(kind, _small_params(kind), seed=rec_seed)
        out = apply_switch(kind, g, w)
        assert out.order == g.order
        delta = {"alpha": -1, "gamma": -1}.get(kind, 0)
        assert out.size == g.size + delta
        if kind == "tau":
            assert is_tree(out)
        if kind == "delta":
            assert count_bridges(out) == count_bridges(g)
        if kind == "gamma":
            assert cycle_rank(out) == cycle_rank(g) - 1
        assert sombor(g) - sombor(out) > 1e-6


def _small_params(kind):
    return {
        "tau": {"l": 5, "t0": 3, "t1": 2},
        "alpha": {"r": 4, "l": 3, "path": 2},
        "beta": {"r": 5, "l": 2, "xi": 3},
        "gamma": {"l": 6, "r": 4, "m": 6},
        "delta": {"r": 4, "s": 2, "l": 2, "xi": 1},
    }[kind]


@pytest.mark.parametrize("kind", KINDS)
def test_lemma_trials_strict_decrease(kind):
    recs = lemma_trials(kind, 200, seed=5)
    assert all(r["margin"] > 1e-6 for r in recs)
    assert max(r["n"] for r in recs) <= 20
