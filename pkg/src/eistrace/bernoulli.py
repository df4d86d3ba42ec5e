"""Bernoulli numbers, Bernoulli polynomials and their twisted variants.

All results are exact: plain Bernoulli numbers are Rational, twisted ones are
Cyclotomic at the order of the twisting character.  Convention: B_1 = -1/2
for the plain numbers; the twist by the trivial character mod 1 therefore has
B_{1,triv} = +1/2, coming from the shifted argument in the defining sum.
"""

from functools import lru_cache

from .exact import Cyclotomic, Rational


@lru_cache(maxsize=None)
def bernoulli_number(n):
    """B_n with B_1 = -1/2, by the standard recurrence."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return Rational(1)
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    total = Rational(0)
    binom = 1
    for k in range(n):
        total += binom * bernoulli_number(k)
        binom = binom * (n + 1 - k) // (k + 1)
    return -total / (n + 1)


def bernoulli_polynomial(n, x):
    """B_n(x) evaluated exactly at a Rational x."""
    x = Rational(x)
    total = Rational(0)
    binom = 1
    xpow = Rational(1)
    # B_n(x) = sum_k C(n,k) B_{n-k} x^k
    for k in range(n + 1):
        total += binom * bernoulli_number(n - k) * xpow
        binom = binom * (n - k) // (k + 1)
        xpow *= x
    return total


def twisted_bernoulli(n, chi):
    """B_{n,chi} = D^(n-1) sum_{a=1}^{D} chi(a) B_n(a/D), D = modulus."""
    D = chi.modulus
    total = Cyclotomic.zero(chi.order)
    for a in range(1, D + 1):
        v = chi(a)
        if not v.is_zero():
            total = total + v * bernoulli_polynomial(n, Rational(a, D))
    return Rational(D) ** (n - 1) * total


def zeta_negative(K):
    """zeta(1-K) = -B_K / K for even K >= 2 (exact Rational)."""
    return -bernoulli_number(K) / K


def sigma_zero(k, chi):
    """Constant term sigma_{k-1,chi}(0) = -B_{k,chi} / (2k)."""
    return twisted_bernoulli(k, chi) * Rational(-1, 2 * k)
