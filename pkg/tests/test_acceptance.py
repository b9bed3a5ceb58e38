"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are collected into an "acceptance criteria" section of the pytest
terminal summary. Run alone with ``pytest tests/test_acceptance.py``.
"""

import math
import sys
import time

import pytest

from somborkit import oracle
from somborkit.extremal import (
    FamilySpec,
    admissible_bridge_counts,
    build_pnk,
    build_split_join,
    f_value,
    min_bridges_bound,
    split_shift_gain,
)
from somborkit.graph import Graph, build_cycle, remove_edge
from somborkit.invariants import ABS_TOL, STRICT_MARGIN, sombor
from somborkit.structure import are_isomorphic
from somborkit.transforms import (
    AlphaWitness,
    BetaWitness,
    DeltaWitness,
    GammaWitness,
    KINDS,
    TauWitness,
    alpha_switch,
    beta_switch,
    delta_switch,
    gamma_switch,
    lemma_trials,
    tau_switch,
)

r = math.sqrt


@pytest.fixture
def announce(acceptance_lines):
    def _announce(number: int, ok: bool, detail: str) -> None:
        line = f"CRITERION {number:>2} {'PASS' if ok else 'FAIL'}: {detail}"
        acceptance_lines.append(line)
        print(line)

    return _announce


def _bridge_reports(parallelism):
    return [
        oracle.verify_min_bridges(n, k, parallelism)
        for n in (4, 5, 6, 7)
        for k in admissible_bridge_counts(n)
    ]


def _connectivity_reports(parallelism):
    return [oracle.verify_max_connectivity(n, k, parallelism) for n in (4, 5, 6) for k in range(1, n)]


def test_criterion_01_bridge_minimum(announce):
    t0 = time.perf_counter()
    reps = _bridge_reports(1)
    elapsed = time.perf_counter() - t0
    bad = [
        (rep.n, rep.k) for rep in reps
        if not (
            rep.status == "certified"
            and abs(rep.achieved_value - min_bridges_bound(rep.n, rep.k)) <= ABS_TOL
            and rep.family_match
            and rep.witness_graphs
        )
    ]
    ok = not bad and elapsed < 120
    announce(1, ok, f"{len(reps) - len(bad)}/{len(reps)} bridge classes certified for n=4..7 in {elapsed:.1f}s; failing {bad}")
    assert ok


def test_criterion_02_empty_class(announce):
    sizes = {n: oracle.verify_min_bridges(n, n - 2).class_size for n in (5, 6, 7)}
    statuses = {n: oracle.verify_min_bridges(n, n - 2).status for n in (5, 6, 7)}
    ok = all(s == 0 for s in sizes.values()) and set(statuses.values()) == {"empty_class"}
    announce(2, ok, f"class sizes for k=n-2: {sizes}")
    assert ok


def test_criterion_03_connectivity_maximum(announce):
    t0 = time.perf_counter()
    reps = _connectivity_reports(1)
    extra = [oracle.verify_max_connectivity(7, k, 1) for k in range(1, 7)]
    elapsed = time.perf_counter() - t0
    bad = [(rep.n, rep.k) for rep in reps + extra if rep.status != "certified" or not rep.family_match]
    ok = not bad and elapsed < 300
    announce(3, ok, f"{len(reps)} classes n=4..6 plus {len(extra)} optional n=7 classes, failing {bad}, {elapsed:.1f}s")
    assert ok


def test_criterion_04_unique_cycle(announce):
    cases = [(n, k) for n in (5, 6, 7) for k in range(n - 2)]
    bad = [(n, k) for n, k in cases if not oracle.verify_unique_cycle_lemma(n, k)]
    announce(4, not bad, f"{len(cases) - len(bad)}/{len(cases)} (n, k) minimiser sets unicyclic with cycle n-k")
    assert not bad


def _worked_instances():
    """(host, switched, expected host SO, expected switched SO) for the four worked examples."""
    tau_host = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)])
    tau = (tau_host, tau_switch(tau_host, TauWitness((0, 1, 2, 3), 1, 4, 5)),
           3 * r(17) + r(20) + r(5), 2 * r(10) + r(13) + r(8) + r(5))
    alpha_host = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
    alpha = (alpha_host, alpha_switch(alpha_host, AlphaWitness((0, 1, 2), (4, 5, 6), (3,))),
             6 * r(13) + 2 * r(8), 6 * r(2) + r(5) + 3 * r(13))
    beta_host = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (1, 3), (0, 4)])
    beta = (beta_host, beta_switch(beta_host, BetaWitness((0, 1, 2), (3,), (4,))),
            r(18) + 2 * r(13) + 2 * r(10), 3 * r(13) + r(8) + r(5))
    delta_host = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
    delta = (delta_host, delta_switch(delta_host, DeltaWitness((0, 1, 2), (), (3,), (4,))),
             2 * r(20) + r(8) + 2 * r(17), 3 * r(13) + r(8) + r(5))
    return {"tau": tau, "alpha": alpha, "beta": beta, "delta": delta}


def test_criterion_05_operation_lemmas(announce):
    worst = {}
    for kind in KINDS:
        recs = lemma_trials(kind, 1000, seed=0)
        assert len(recs) == 1000 and max(x["n"] for x in recs) <= 20
        worst[kind] = min(x["margin"] for x in recs)
    sweep_ok = all(m > STRICT_MARGIN for m in worst.values())

    instance_ok = True
    for kind, (host, out, want_host, want_out) in _worked_instances().items():
        instance_ok &= abs(sombor(host) - want_host) < 5e-7 and abs(sombor(out) - want_out) < 5e-7
        instance_ok &= sombor(host) - sombor(out) > STRICT_MARGIN
    theta = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0)])
    gamma_out = gamma_switch(theta, GammaWitness((0, 1, 2, 3), (4,), 2))
    gamma_gap = sombor(theta) - sombor(gamma_out)
    gamma_ok = abs(gamma_gap - (6 * r(13) - 5 * r(8))) <= ABS_TOL and are_isomorphic(gamma_out, build_cycle(5))

    ok = sweep_ok and instance_ok and gamma_ok
    margins = ", ".join(f"{k} {v:.6f}" for k, v in worst.items())
    announce(5, ok, f"min margins over 1000 trials: {margins}; worked instances ok={instance_ok}; "
                    f"gamma gap {gamma_gap:.12f} vs 6*sqrt13-5*sqrt8 ok={gamma_ok}")
    assert ok


def test_criterion_06_edge_deletion(announce):
    checked = 0
    worst = math.inf
    for n in range(2, 7):
        for g in oracle.enumerate_connected(n):
            so = sombor(g)
            for u, v in g.edges():
                worst = min(worst, so - sombor(remove_edge(g, u, v)))
                checked += 1
    ok = worst > STRICT_MARGIN
    announce(6, ok, f"{checked} (graph, edge) pairs for n<=6, smallest decrease {worst:.6f}")
    assert ok


def test_criterion_07_f_function(announce):
    gains = 0
    worst_gain = math.inf
    identities = 0
    worst_err = 0.0
    for n in range(3, 31):
        for k in range(1, n - 1):
            for k2 in range(1, (n - k) // 2 + 1):
                k1 = n - k - k2
                if k2 >= 2:
                    worst_gain = min(worst_gain, split_shift_gain(n, k, k1, k2))
                    gains += 1
                if n <= 12:
                    g = build_split_join(FamilySpec("split_join", n, k, k1, k2))
                    worst_err = max(worst_err, abs(f_value(n, k, k1, k2) - sombor(g)))
                    identities += 1
    ok = worst_gain > 0 and worst_err <= ABS_TOL
    announce(7, ok, f"{gains} shift gains (min {worst_gain:.6f}); {identities} f/SO identities (max err {worst_err:.2e})")
    assert ok


def test_criterion_08_pnk_closed_form(announce):
    worst = 0.0
    branches = set()
    for n in range(3, 31):
        for k in admissible_bridge_counts(n):
            worst = max(worst, abs(sombor(build_pnk(n, k)) - min_bridges_bound(n, k)))
            branches.add("k=0" if k == 0 else "k=n-1" if k == n - 1 else "k=1" if k == 1 else "2<=k<=n-3")
    ok = worst <= ABS_TOL and len(branches) == 4
    announce(8, ok, f"max |SO - bound| = {worst:.2e} over n<=30, branches {sorted(branches)}")
    assert ok


def test_criterion_09_enumeration(announce):
    counts = {n: sum(1 for _ in oracle.enumerate_connected(n)) for n in (3, 4, 5)}
    partition = {n: sum(c.count for c in oracle.scan_classes(n, "bridges")) for n in (3, 4, 5)}
    ok = counts == {3: 4, 4: 38, 5: 728} and partition == counts
    announce(9, ok, f"connected counts {counts}; bridge-class sums {partition}")
    assert ok


def test_criterion_10_determinism(announce):
    serial = [rep.to_json() for rep in _bridge_reports(1) + _connectivity_reports(1)]
    parallel = [rep.to_json() for rep in _bridge_reports(8) + _connectivity_reports(8)]
    ok = serial == parallel
    announce(10, ok, f"{len(serial)} reports bit-identical at parallelism 1 and 8: {ok}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
