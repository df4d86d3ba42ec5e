import math

import pytest

from eistrace import bounds
from eistrace.chars import primitive_characters
from eistrace.kernels import parity_ok

from oracles import exact_error_term


def test_sigma_ratio_shape():
    v = bounds.sigma_ratio(3, 13, 1)
    assert v > 0
    # increasing D shrinks the bound
    assert bounds.sigma_ratio(3, 13, 5) < v
    with pytest.raises(ValueError):
        bounds.sigma_ratio(13, 3, 1)


def test_zeta_ratio_domain():
    assert bounds.zeta_ratio(30, 3, 1) > 0
    with pytest.raises(ValueError):
        bounds.zeta_ratio(12, 6, 1)  # l > (K-2)/2


def test_error_bounds_decay_in_weight():
    for name in ("E", "R", "Rprime", "scriptE", "scriptR", "scriptRprime"):
        prev = None
        for K in range(20, 61, 4):
            v = bounds.bound_eval(name, K=K, n=1, D=1)
            if prev is not None:
                assert v < prev
            prev = v


def test_error_bounds_grow_in_n():
    for name in ("E", "scriptE"):
        v1 = bounds.bound_eval(name, K=20, n=1, D=3)
        v2 = bounds.bound_eval(name, K=20, n=2, D=3)
        assert v2 > v1


def test_bound_eval_rejects_bad_hypotheses():
    with pytest.raises(ValueError):
        bounds.bound_eval("E", K=7, n=1, D=1)
    with pytest.raises(ValueError):
        bounds.bound_eval("E", K=20, n=0, D=1)
    with pytest.raises(ValueError):
        bounds.bound_eval("nope", K=20, n=1, D=1)


def test_exact_error_terms_dominated_sample():
    # spot sample; the acceptance suite sweeps the full documented grid
    for K, D, l in ((16, 1, 4), (24, 3, 5), (28, 5, 6)):
        for chi in primitive_characters(D):
            if not parity_ok(l, chi):
                continue
            for n in (1, 2, 3):
                for name in ("E", "scriptE"):
                    exact = abs(exact_error_term(name, K, l, chi, n).embed())
                    assert exact <= bounds.bound_eval(name, K=K, n=n, D=D) + 1e-9


def test_det_lower_bounds():
    assert bounds.det_lb_M([4]) == 1.0
    # two weights: (3/4) * 2^(l2-1)
    assert bounds.det_lb_M([4, 6]) == pytest.approx(0.75 * 2 ** 5)
    assert bounds.det_lb_N([4, 6]) == pytest.approx(1.5 * 2 ** 5)
    assert bounds.det_lb_P(4, 5, 2) == pytest.approx(2 ** 5 / 5)
    assert bounds.det_lb_Q(4, 5, 2) == pytest.approx(2 ** 6 / 5)


def test_f_env_and_budget():
    assert bounds.f_env(0.0, 5) == 0.0
    assert bounds.f_env(0.1, 2) == pytest.approx(1.1 ** 2 - 1)
    with pytest.raises(ValueError):
        bounds.f_env(-0.1, 2)
    # budget shrinks with dimension
    assert bounds.perturbation_budget(2) > bounds.perturbation_budget(3)
    assert bounds.perturbation_budget(1) == 1.0


def test_epsilon_maeda_limiting_value():
    # at the tightest threshold configuration K - 2 = 10 D (K = 12, D = 1)
    # the bound sits near 0.65; larger thresholds are strictly smaller
    assert bounds.epsilon_maeda(12, 1) == pytest.approx(0.65, abs=0.01)
    assert bounds.epsilon_maeda(32, 3) < bounds.epsilon_maeda(12, 1)
    # safely below 1 beyond the threshold, decreasing in K
    assert bounds.epsilon_maeda(20, 1) < bounds.epsilon_maeda(14, 1) < 1
    with pytest.raises(ValueError):
        bounds.epsilon_maeda(13, 1)


def test_min_weight_maeda():
    r = bounds.min_weight("maeda", D=1)
    assert r["found"] and r["K"] <= 12 and r["value"] < 1
    r3 = bounds.min_weight("maeda", D=3)
    assert r3["found"] and r3["K"] <= 32


def test_min_weight_aggregates():
    r = bounds.min_weight("asym_product", j=1, D=1, tol=0.5)
    assert r["found"]
    # once found, the aggregate is below tolerance
    assert bounds.aggregate_product(r["K"], 1, 1) < 0.5
    rb = bounds.min_weight("asym_bracket", j=1, D=1, tol=0.5)
    assert rb["found"]
    bad = bounds.min_weight("asym_product", j=1, D=1, tol=-1)
    assert not bad["found"]


def test_min_weight_unknown_predicate():
    with pytest.raises(ValueError):
        bounds.min_weight("mystery", D=1)
