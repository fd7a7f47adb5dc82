import math

import numpy as np

from arbpack.digraph import build, complete, empty, validate_packing
from arbpack.flow import RootedNetwork
from arbpack.frank import tau_exact
from arbpack.io import format_packing_table, parse_packing_table
from arbpack.lambda_stat import compute_lambda
from arbpack.packer import (
    INFEASIBLE,
    PACKED,
    UNKNOWN,
    Budget,
    RootMultiplicity,
    edmonds_feasible,
    forced_roots,
    max_pack,
    pack,
)
from arbpack.random_model import sample

from conftest import random_digraphs
from oracles import brute_tau


def brute_flow(D, mult, t):
    """Max flow s -> t by enumerating s-side vertex sets (min-cut oracle, n <= 10)."""
    n = D.n
    best = None
    others = [v for v in range(n) if v != t]
    for mask in range(1 << len(others)):
        side = {others[i] for i in range(len(others)) if mask >> i & 1}
        value = sum(mult[v] for v in range(n) if v not in side)
        value += sum(1 for u, v in D.arcs() if u in side and v not in side)
        best = value if best is None else min(best, value)
    return best


def test_flow_against_cut_enumeration():
    rng = np.random.default_rng(3)
    for D in random_digraphs(80, (2, 8), seed=21):
        mult = rng.integers(0, 3, size=D.n).tolist()
        net = RootedNetwork(D, mult)
        for t in range(D.n):
            assert net.max_flow(t, 10**6)[0] == brute_flow(D, mult, t)


def test_flow_cancels_flow_on_first_arc():
    # the second augmenting path must undo the unit sent along arc 0 = (0, 2)
    D = build(5, [(0, 2), (0, 3), (1, 2), (2, 4), (3, 0), (3, 1), (3, 2), (3, 4), (4, 2), (4, 3)])
    mult = (1, 1, 0, 0, 0)
    net = RootedNetwork(D, mult)
    for t in range(5):
        assert net.max_flow(t, 2)[0] == min(2, brute_flow(D, mult, t))
    out = pack(D, 2)
    assert out.status == PACKED and validate_packing(D, out.packing)


def test_forced_roots_examples(c3, star4):
    fr = forced_roots(c3, 1)
    assert fr.lower == (0, 0, 0) and fr.free == 1 and fr.feasible
    assert not forced_roots(empty(2), 1).feasible
    fr = forced_roots(star4, 2)
    assert fr.lower == (2, 1, 1, 1) and fr.forced == 5 and not fr.feasible


def test_forced_roots_match_lambda_inequality():
    for D in random_digraphs(300, (2, 12), seed=22):
        lam = compute_lambda(D).value
        for k in range(lam + 3):
            assert forced_roots(D, k).feasible == (k <= lam or _ineq(D, k))


def _ineq(D, k):
    return sum(max(0, k - int(d)) for d in D.in_degrees) <= k


def test_edmonds_examples(c3, k4):
    assert edmonds_feasible(c3, RootMultiplicity((1, 0, 0)))
    two_cycles = build(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    verdict = edmonds_feasible(two_cycles, (1, 0, 0, 0))
    assert not verdict
    assert verdict.deficit_vertex == 2 and verdict.cut_capacity == 0
    assert verdict.cut_side == {2, 3}
    assert edmonds_feasible(k4, (1, 1, 1, 1))


def test_pack_examples(c3, k3, star4):
    out = pack(c3, 1)
    assert out.status == PACKED and len(out.packing) == 1
    assert validate_packing(c3, out.packing)
    out = pack(k3, 3)
    assert out.status == PACKED
    used = {a for T in out.packing.arborescences for a in T.arcs()}
    assert used == k3.arc_set
    assert pack(star4, 2).status == INFEASIBLE


def test_pack_zero_and_single_vertex():
    out = pack(complete(3), 0)
    assert out.status == PACKED and len(out.packing) == 0
    assert pack(empty(1), 3).status == PACKED


def test_pack_infeasible_beyond_forced_roots():
    # two 2-cycles: forced roots are fine for k=1 but no root reaches both halves
    two_cycles = build(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    out = pack(two_cycles, 1)
    assert out.status == INFEASIBLE
    assert "root assignments" in out.reason


def test_pack_unknown_when_budget_disallows_proof():
    two_cycles = build(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    out = pack(two_cycles, 1, Budget(restarts=1, exhaustive_limit=3))
    assert out.status == UNKNOWN


def test_max_pack_examples(c3):
    res = max_pack(c3)
    assert res.k == 1 and res.outcome.status == PACKED and res.equals_lambda
    res = max_pack(empty(2))
    assert res.k == 0 and res.outcome.status == PACKED


def test_max_pack_regression_n64():
    # D(64, 2 log 64 / 63) with seed 7: lambda = 4 and the packer reaches it
    D = sample(64, 2 * math.log(64) / 63, 7)
    res = max_pack(D)
    assert (D.m, res.lam, res.k) == (516, 4, 4)
    assert validate_packing(D, res.outcome.packing)


def test_soundness_fuzz():
    for D in random_digraphs(400, (2, 14), seed=23):
        lam = compute_lambda(D).value
        for k in range(lam + 2):
            out = pack(D, k)
            if out.status == PACKED:
                assert len(out.packing) == k
                assert validate_packing(D, out.packing)
            else:
                assert k > 0


def test_agreement_with_oracle():
    for D in random_digraphs(500, (2, 8), seed=24):
        res = max_pack(D)
        t = tau_exact(D).tau
        assert res.k == t <= res.lam
        assert validate_packing(D, res.outcome.packing)


def test_agreement_with_brute_force_packing():
    for D in random_digraphs(120, (2, 4), seed=25):
        assert max_pack(D).k == brute_tau(D.n, D.arc_set)


def test_round_trip_through_table_format():
    for D in random_digraphs(50, (2, 8), seed=26):
        res = max_pack(D)
        back = parse_packing_table(format_packing_table(res.outcome.packing), D)
        assert validate_packing(D, back)
        assert len(back) == res.k


def test_determinism():
    D = sample(80, 0.08, 3)
    a = pack(D, compute_lambda(D).value, Budget(seed=5))
    b = pack(D, compute_lambda(D).value, Budget(seed=5))
    assert a.status == b.status
    assert a.packing.arborescences == b.packing.arborescences
