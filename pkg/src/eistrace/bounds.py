"""Floating-point evaluators for the explicit inequalities controlling the
kernel coefficients, plus threshold search and the quadratic-twist
non-vanishing criterion.

Everything here is double precision; the exact counterparts live in the
exact/kernels modules and are compared against these bounds in the test
suite.  Zeta values come from mpmath.
"""

import math

import mpmath

E_CONST = math.e
PI = math.pi


def _zeta(s):
    return float(mpmath.zeta(s))


def sigma_ratio(l, k, D):
    """Upper bound for |sigma_{l-1,chi}(0) / sigma_{k-1,chibar}(0)|:

    6 ((l-1)/(k-1))^(l-1/2) (2 pi e / ((k-1) D))^(k-l), for k >= l >= 2.
    """
    if not 2 <= l <= k:
        raise ValueError("requires k >= l >= 2")
    return (
        6.0
        * ((l - 1) / (k - 1)) ** (l - 0.5)
        * (2 * PI * E_CONST / ((k - 1) * D)) ** (k - l)
    )


def zeta_ratio(K, l, D):
    """Upper bound for |2 sigma_{l-1,chi}(0) / zeta(1-K)|:

    2 ((l-1) D / (K-1))^(l-1/2) (2 pi e / (K-1))^(K-l), for 3 <= l <= (K-2)/2.
    """
    if not 3 <= l <= (K - 2) // 2:
        raise ValueError("requires 3 <= l <= (K-2)/2")
    return (
        2.0
        * ((l - 1) * D / (K - 1)) ** (l - 0.5)
        * (2 * PI * E_CONST / (K - 1)) ** (K - l)
    )


def _central_power(K, n, D):
    return (PI * E_CONST * n * n / ((K - 2) * D)) ** ((K - 1) / 2)


def _central_power_script(K, n, D):
    return (PI * E_CONST * D * n * n / (K - 2)) ** ((K - 1) / 2)


def bound_E(K, n, D):
    """Convolution error in the product expansion: 9.25 (pi e n^2 / ((K-2) D))^((K-1)/2)."""
    return 9.25 * _central_power(K, n, D)


def bound_R(K, n, D):
    """First convolution error in the bracket expansion; same shape as E."""
    return 9.25 * _central_power(K, n, D)


def bound_Rprime(K, n, D):
    """Second convolution error in the bracket expansion: 18.5 x the same power."""
    return 18.5 * _central_power(K, n, D)


def bound_scriptE(K, n, D):
    """Split-modulus error in the product expansion: 16 (pi e D n^2 / (K-2))^((K-1)/2)."""
    return 16.0 * _central_power_script(K, n, D)


def bound_scriptR(K, n, D):
    """First split-modulus error in the bracket expansion; same shape as scriptE."""
    return 16.0 * _central_power_script(K, n, D)


def bound_scriptRprime(K, n, D):
    """Second split-modulus error in the bracket expansion: 31 x the same power."""
    return 31.0 * _central_power_script(K, n, D)


def det_lb_M(ells):
    """Vandermonde lower bound for the unperturbed weight-indexed product
    matrix: (3/4)^(n(n-1)/2) prod_{i=2}^n 2^((i-1)(l_i-1))."""
    n = len(ells)
    value = 0.75 ** (n * (n - 1) / 2)
    for i in range(2, n + 1):
        value *= 2.0 ** ((i - 1) * (ells[i - 1] - 1))
    return value


def det_lb_N(ells):
    """Same for the bracket matrix, with prefactor (3/2)^(n(n-1)/2)."""
    n = len(ells)
    value = 1.5 ** (n * (n - 1) / 2)
    for i in range(2, n + 1):
        value *= 2.0 ** ((i - 1) * (ells[i - 1] - 1))
    return value


def det_lb_P(l, D, n):
    """Vandermonde lower bound for the character-indexed product matrix:
    (2^(l+1) / D)^(n(n-1)/2)."""
    return (2.0 ** (l + 1) / D) ** (n * (n - 1) / 2)


def det_lb_Q(l, D, n):
    """Same for the bracket matrix: (2^(l+2) / D)^(n(n-1)/2)."""
    return (2.0 ** (l + 2) / D) ** (n * (n - 1) / 2)


def f_env(M, n):
    """Envelope of the perturbation function prod(1+x_i) - 1 under |x_i| <= M."""
    if M < 0:
        raise ValueError("requires M >= 0")
    return (1.0 + M) ** n - 1.0


def perturbation_budget(n):
    """Threshold on f_env below which the perturbed Vandermonde matrices
    stay nonsingular: (1/n!) (3/4)^(n(n-1)/2) 2^(1-n)."""
    return 0.75 ** (n * (n - 1) / 2) * 2.0 ** (1 - n) / math.factorial(n)


def bound_eval(name, **params):
    """Evaluate a named bound; raises ValueError naming any violated
    hypothesis.  Names: sigma_ratio, zeta_ratio, E, R, Rprime, scriptE,
    scriptR, scriptRprime, det_lb_M, det_lb_N, det_lb_P, det_lb_Q, f_env."""
    if name == "sigma_ratio":
        return sigma_ratio(params["l"], params["k"], params["D"])
    if name == "zeta_ratio":
        return zeta_ratio(params["K"], params["l"], params["D"])
    if name in ("E", "R", "Rprime", "scriptE", "scriptR", "scriptRprime"):
        K, n, D = params["K"], params["n"], params["D"]
        if K < 8 or K % 2:
            raise ValueError("requires even K >= 8")
        if n < 1:
            raise ValueError("requires n >= 1")
        fn = {
            "E": bound_E,
            "R": bound_R,
            "Rprime": bound_Rprime,
            "scriptE": bound_scriptE,
            "scriptR": bound_scriptR,
            "scriptRprime": bound_scriptRprime,
        }[name]
        return fn(K, n, D)
    if name == "det_lb_M":
        return det_lb_M(params["ells"])
    if name == "det_lb_N":
        return det_lb_N(params["ells"])
    if name == "det_lb_P":
        return det_lb_P(params["l"], params["D"], params["n"])
    if name == "det_lb_Q":
        return det_lb_Q(params["l"], params["D"], params["n"])
    if name == "f_env":
        return f_env(params["M"], params["n"])
    raise ValueError(f"unknown bound {name!r}")


def epsilon_maeda(K, D):
    """Upper bound for the relative error in the central product-kernel
    coefficient a_{K,K/2,chi}(1) = 2 sigma_{K/2-1,chi}(0) (1 + eps), chi the
    quadratic character mod D.

    Two summands: a split-modulus convolution term and a zeta-ratio term,
    both with base pi e D / (K-2) so that the limiting configuration
    K - 2 = 10 D evaluates to about 0.65.
    """
    if K % 2 or K // 2 < 3:
        raise ValueError("requires even K with K/2 >= 3")
    k = K // 2
    base = PI * E_CONST * D / (K - 2)
    term1 = (
        _zeta(k - 1) ** 2
        * _zeta(K - 1)
        / (math.sqrt(E_CONST) * (2 - _zeta(k)))
        * base ** ((K - 1) / 2)
    )
    term2 = (
        E_CONST
        * _zeta(k)
        / (2 * math.sqrt(2 * PI))
        * math.sqrt(3 / D)
        * base ** k
    )
    return term1 + term2


def aggregate_product(K, j, D):
    """Sum of the non-constant terms in the normalized product-coefficient
    expansion at n = 2^j, maximized over the admissible l range."""
    worst = 0.0
    for l in range(3, (K - 2) // 2 + 1):
        k = K - l
        total = (
            sigma_ratio(l, k, D) * 4 * 2.0 ** ((k - l) * j)
            + zeta_ratio(K, l, D) * 4 * 2.0 ** ((K - l) * j)
            + bound_E(K, 2 ** j, D) * 2 * 2.0 ** (-(l - 1) * j)
            + bound_scriptE(K, 2 ** j, D) * 2 * 2.0 ** (-(l - 1) * j)
            + sigma_ratio(l, k, D)
            + zeta_ratio(K, l, D)
            + bound_scriptE(K, 1, D)
        )
        worst = max(worst, total)
    return worst


def aggregate_bracket(K, j, D):
    """Same for the normalized bracket coefficients at n = 2^j."""
    worst = 0.0
    for l in range(3, (K - 4) // 2 + 1):
        k = K - 2 - l
        ratio = sigma_ratio(l, k, D) * l / k
        total = (
            ratio * 4 * 2.0 ** ((k - l) * j)
            + bound_R(K, 2 ** j, D) * 2.0 ** (-j) * 2 * 2.0 ** (-(l - 1) * j)
            + bound_Rprime(K, 2 ** j, D) * 2.0 ** (-j) * 2 * 2.0 ** (-(l - 1) * j)
            + bound_scriptR(K, 2 ** j, D) * 2.0 ** (-j) * 2 * 2.0 ** (-(l - 1) * j)
            + bound_scriptRprime(K, 2 ** j, D) * 2.0 ** (-j) * 2 * 2.0 ** (-(l - 1) * j)
            + ratio
            + bound_scriptR(K, 1, D)
            + bound_scriptRprime(K, 1, D)
        )
        worst = max(worst, total)
    return worst


def min_weight(predicate, cap=2000, **params):
    """Smallest even K satisfying a bound predicate, by linear scan.

    predicate: "asym_product" or "asym_bracket" with params j, D, tol
    (aggregate of the expansion's non-constant bound terms < tol), or
    "maeda" with param D (epsilon_maeda < 1).  Returns {found, K, value}
    with found = False when the cap is reached.
    """
    if predicate in ("asym_product", "asym_bracket"):
        j, D, tol = params["j"], params["D"], params["tol"]
        if tol <= 0:
            return {"found": False, "K": None, "value": None}
        agg = aggregate_product if predicate == "asym_product" else aggregate_bracket
        start = 8 if predicate == "asym_product" else 10
        for K in range(start, cap + 1, 2):
            value = agg(K, j, D)
            if value < tol:
                return {"found": True, "K": K, "value": value}
        return {"found": False, "K": None, "value": None}
    if predicate == "maeda":
        D = params["D"]
        for K in range(6, cap + 1, 2):
            value = epsilon_maeda(K, D)
            if value < 1:
                return {"found": True, "K": K, "value": value}
        return {"found": False, "K": None, "value": None}
    raise ValueError(f"unknown predicate {predicate!r}")
