import math
import warnings

import mpmath
import numpy as np
import pytest

from arbpack.degree_stats import (
    F,
    delta_in,
    delta_out,
    delta_star,
    expected_Yk,
    histogram,
    invert_F,
    light_report,
)
from arbpack.digraph import complete, empty
from arbpack.errors import DegenerateWarning, OutOfDomainError, OutOfRangeError
from arbpack.lambda_stat import compute_lambda

from conftest import random_digraphs

# 100 * 0.9535**99 at 40 digits (mpmath)
EY0_100 = 0.8969103607092587113227989225667997284085
# root of 1 - a + a log a = 1/2 by 200-step mpmath bisection at 40 digits
ALPHA_HALF = 0.1866823088508370421242242183396352975013


def mp_expected(n, p, k):
    mpmath.mp.dps = 40
    p = mpmath.mpf(p)
    return n * mpmath.binomial(n - 1, k) * p**k * (1 - p) ** (n - 1 - k)


def test_histograms(c3, star4):
    assert histogram(c3).as_dict() == {1: 3}
    assert delta_in(c3) == 1
    assert histogram(star4).as_dict() == {0: 1, 1: 3}
    assert delta_in(star4) == 0
    assert histogram(empty(5)).as_dict() == {0: 5}
    assert delta_out(star4) == 0


def test_histogram_sums_to_n():
    for D in random_digraphs(200, (1, 30), seed=3):
        assert sum(histogram(D).counts) == D.n


def test_expected_yk_edges():
    assert expected_Yk(50, 0.0, 0) == 50
    assert expected_Yk(50, 1.0, 49) == 50
    with pytest.raises(OutOfRangeError):
        expected_Yk(50, 0.5, 50)


def test_expected_yk_pinned():
    assert expected_Yk(100, 0.0465, 0) == pytest.approx(EY0_100, rel=1e-9)


@pytest.mark.parametrize(
    "n, p, k",
    [(10, 0.3, 4), (1000, 0.007, 2), (10**5, 1e-4, 3), (10**6, 2e-5, 15), (10**6, 0.5, 500000)],
)
def test_expected_yk_matches_arbitrary_precision(n, p, k):
    assert expected_Yk(n, p, k) == pytest.approx(float(mp_expected(n, p, k)), rel=1e-9)


def test_delta_star_n100():
    p = math.log(100) / 99
    assert mp_expected(100, p, 0) < 1 <= mp_expected(100, p, 1)
    assert delta_star(100, p) == 1


def test_delta_star_zero_when_ey0_large():
    assert expected_Yk(100, 0.01, 0) >= 1
    assert delta_star(100, 0.01) == 0


def test_delta_star_degenerate():
    with pytest.warns(DegenerateWarning):
        assert delta_star(10, 0.0) == 0
    with pytest.warns(DegenerateWarning):
        assert delta_star(10, 1.0) == 9


def test_expected_ratio():
    # E Y_{k-1} / E Y_k = k (1 - p) / ((n - k) p); pinned with mpmath at n=1000, k=2
    n, k = 1000, 2
    p = math.log(n) / (n - 1)
    exact = 0.2878157564604866905968455511006603054189
    assert expected_Yk(n, p, k - 1) / expected_Yk(n, p, k) == pytest.approx(exact, rel=1e-9)
    # asymptotic form k / ((n-1) p) agrees to leading order
    assert exact == pytest.approx(k / ((n - 1) * p), rel=0.01)


def test_delta_star_nondecreasing_in_p():
    n = 500
    ps = np.linspace(0.001, 0.3, 150)
    stars = [delta_star(n, float(p)) for p in ps]
    assert all(a <= b for a, b in zip(stars, stars[1:]))


def test_F_values():
    assert F(1.0) == 0.0
    assert abs(F(1e-9) - 1) < 1e-7
    xs = np.linspace(1e-6, 1, 500)
    vals = [F(float(x)) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    with pytest.raises(OutOfDomainError):
        F(0.0)


def test_invert_F():
    assert abs(invert_F(0.5) - ALPHA_HALF) < 1e-10
    for target in (0.01, 0.3, 0.9, 0.999):
        assert abs(F(invert_F(target)) - target) < 1e-10
    with pytest.raises(OutOfDomainError):
        invert_F(1.0)
    with pytest.raises(OutOfDomainError):
        invert_F(0.0)


def test_light_report_empty():
    rep = light_report(empty(3), 0.1, 0.5)
    assert rep.in_light == {0, 1, 2}
    assert rep.adjacent_in_pairs == 0 and rep.shared_in_neighbor_pairs == 0


def test_light_report_complete():
    rep = light_report(complete(4), 0.01, 0.5)
    assert rep.in_light == set(range(4))
    assert rep.adjacent_in_pairs == 6
    assert rep.shared_in_neighbor_pairs == 6
    assert rep.in_conflicts == 6


def test_light_report_c3(c3):
    rep = light_report(c3, 0.1, 0.1)
    assert rep.in_light == {0, 1, 2}
    assert rep.adjacent_in_pairs == 3
    assert rep.shared_in_neighbor_pairs == 0
    assert rep.in_conflicts == 3


def test_light_report_counts_recomputable():
    for D in random_digraphs(60, (3, 15), seed=8):
        rep = light_report(D, 0.2, 0.3)
        light = sorted(rep.in_light)
        adj = shared = conf = 0
        for i, u in enumerate(light):
            for v in light[i + 1 :]:
                a = D.has_arc(u, v) or D.has_arc(v, u)
                s = bool(set(D.in_adj[u]) & set(D.in_adj[v]))
                adj += a
                shared += s
                conf += a or s
        assert (rep.adjacent_in_pairs, rep.shared_in_neighbor_pairs, rep.in_conflicts) == (
            adj,
            shared,
            conf,
        )


def test_light_report_domain(c3):
    with pytest.raises(OutOfDomainError):
        light_report(c3, 0.0, 0.5)
    with pytest.raises(OutOfDomainError):
        light_report(c3, 0.1, 0.0)


def test_lambda_at_least_min_in_degree():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateWarning)
        for D in random_digraphs(500, (1, 20), seed=4):
            assert compute_lambda(D).value >= delta_in(D)
