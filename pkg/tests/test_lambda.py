import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arbpack.degree_stats import histogram
from arbpack.digraph import build, complete, empty
from arbpack.errors import DegenerateWarning
from arbpack.lambda_stat import claim44_bound, compute_lambda, lambda_from_counts

from conftest import random_digraphs
from oracles import brute_lambda


def test_lambda_c3(c3):
    res = compute_lambda(c3)
    assert (res.value, res.violating_ell, res.lhs_at_violation) == (1, 2, 3)


def test_lambda_two_isolated_vertices():
    res = compute_lambda(empty(2))
    assert (res.value, res.violating_ell, res.lhs_at_violation) == (0, 1, 2)


def test_lambda_k3():
    # l=3: (3-2)*3 = 3 <= 3; l=4: (4-2)*3 = 6 > 4
    assert brute_lambda([2, 2, 2]) == 3
    res = compute_lambda(complete(3))
    assert (res.value, res.violating_ell, res.lhs_at_violation) == (3, 4, 6)


def test_lambda_k2():
    assert brute_lambda([1, 1]) == 2
    assert compute_lambda(complete(2)).value == 2


def test_lambda_single_vertex_is_degenerate():
    with pytest.warns(DegenerateWarning):
        res = compute_lambda(empty(1))
    assert res.value == 0 and res.degenerate


def test_lambda_matches_brute_scan():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateWarning)
        for D in random_digraphs(1000, (2, 25), seed=1):
            assert compute_lambda(D).value == brute_lambda(D.in_degrees.tolist())


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=2, max_size=40))
def test_certificate_invariants(degrees):
    counts = np.bincount(degrees).tolist()
    n = len(degrees)
    res = lambda_from_counts(counts, n, sum(degrees))
    assert res.value == brute_lambda(degrees)
    assert res.violating_ell == res.value + 1
    lhs = sum(res.violating_ell - d for d in degrees if d < res.violating_ell)
    assert lhs == res.lhs_at_violation > res.violating_ell
    for ell in range(res.value + 1):
        assert sum(ell - d for d in degrees if d < ell) <= ell


def test_claim44_examples(c3, star4):
    assert claim44_bound(c3, 1) and compute_lambda(c3).value == 1
    assert not claim44_bound(complete(5), 0)
    assert claim44_bound(star4, 1)
    assert brute_lambda(star4.in_degrees.tolist()) == 1 == compute_lambda(star4).value


def test_claim44_universal():
    for D in random_digraphs(2000, (2, 12), seed=2):
        lam = compute_lambda(D).value
        hist = histogram(D)
        for k in range(D.n):
            if hist[k] > k + 1:
                assert claim44_bound(D, k)
                assert lam <= k


def test_lambda_monotone_under_arc_insertion():
    rng = np.random.default_rng(5)
    for _ in range(60):
        n = int(rng.integers(2, 15))
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        order = rng.permutation(len(pairs))
        arcs = []
        prev = compute_lambda(empty(n)).value
        for i in order[: int(rng.integers(1, len(pairs) + 1))]:
            arcs.append(pairs[i])
            cur = compute_lambda(build(n, arcs)).value
            assert cur >= prev
            prev = cur
