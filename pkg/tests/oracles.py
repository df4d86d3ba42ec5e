"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive: direct sums, brute-force divisor
loops, formal power series built from first principles.  None of it shares
code paths with the implementations under test beyond the Cyclotomic
number type itself.
"""

import math
from fractions import Fraction

from eistrace.chars import trivial_character
from eistrace.exact import Cyclotomic, Rational
from eistrace.kernels import _modulus_splits, split_character


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_sigma_classical(w, n):
    return Rational(sum(d ** w for d in naive_divisors(n)))


def naive_sigma_twisted(w, chi, n):
    total = Cyclotomic.zero(1)
    for d in naive_divisors(n):
        total = total + chi(d) * Rational(d ** w)
    return total


def naive_sigma_double(w, chi1, chi2, n):
    if n == 0:
        raise ValueError("constant term handled separately")
    total = Cyclotomic.zero(1)
    for d1 in naive_divisors(n):
        v = chi1(d1) * chi2(n // d1)
        if not v.is_zero():
            total = total + v * Rational(d1 ** w)
    return total


def bernoulli_gf(n, chi):
    """B_{n,chi} from the generating function

        sum_{a=1}^{D} chi(a) t e^{at} / (e^{Dt} - 1) = sum_n B_{n,chi} t^n / n!

    expanded as an exact formal power series and divided term by term.
    """
    D = chi.modulus
    terms = n + 2
    # numerator sum_a chi(a) t e^{at}: coefficient of t^j is
    # sum_a chi(a) a^(j-1) / (j-1)!  for j >= 1
    num = [Cyclotomic.zero(1)]
    for j in range(1, terms + 1):
        c = Cyclotomic.zero(1)
        fact = Rational(1, math.factorial(j - 1))
        for a in range(1, D + 1):
            v = chi(a)
            if not v.is_zero():
                c = c + v * (Rational(a ** (j - 1)) * fact)
        num.append(c)
    # denominator e^(Dt) - 1: coefficient of t^j is D^j / j!
    den = [Rational(D ** j, math.factorial(j)) for j in range(terms + 1)]
    # both have valuation 1; divide t out and do series division
    f = [Cyclotomic.zero(1)] * terms
    for j in range(terms):
        acc = num[j + 1]
        for i in range(j):
            acc = acc - f[i] * den[j - i + 1]
        f[j] = acc / den[1]
    return f[n] * Rational(math.factorial(n))


def naive_bernoulli(n):
    """B_n (B_1 = -1/2) straight from the defining recurrence over Fraction."""
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += Fraction(math.comb(m + 1, k)) * b[k]
        b[m] = -acc / (m + 1)
    return b[n]


def naive_gauss_sum(chi):
    """G(chi) = sum_a chi(a) zeta_D^a in the cyclotomic field of order
    lcm(D, ord chi)."""
    D = chi.modulus
    m = math.lcm(D, chi.order)
    total = Cyclotomic.zero(m)
    for a in range(1, D + 1):
        v = chi(a)
        if not v.is_zero():
            total = total + v * Cyclotomic.root_of_unity(m, (m // D) * a)
    return total


# --- exact error terms of the coefficient expansions --------------------------


def _sigma0(w, chi):
    # constant term of the twisted Eisenstein expansion, -B_{w+1,chi}/(2(w+1))
    from eistrace.bernoulli import sigma_zero

    return sigma_zero(w + 1, chi)


def exact_error_term(name, K, l, chi, n):
    """The exact finite sums whose embedded moduli the floating bounds must
    dominate.  Product expansion: E (same-modulus convolution), scriptE
    (split-modulus part), with k = K - l.  Bracket expansion: R, Rprime,
    scriptR, scriptRprime, with k = K - 2 - l."""
    from eistrace.qforms import sigma_double, sigma_twisted

    k = K - l if name in ("E", "scriptE") else K - 2 - l
    chib = chi.conj()
    inv0 = _sigma0(k - 1, chib).inv()
    if name in ("E", "R", "Rprime"):
        total = Cyclotomic.zero(1)
        for a1 in range(1, n):
            s1 = sigma_twisted(l - 1, chi, a1)
            if s1.is_zero():
                continue
            s2 = sigma_twisted(k - 1, chib, n - a1)
            if s2.is_zero():
                continue
            if name == "E":
                total = total + s1 * s2
            elif name == "R":
                total = total + a1 * (s1 * s2)
            else:
                total = total + (n - a1) * (s1 * s2)
        if name == "Rprime":
            total = total * Rational(-l, k)
        return inv0 * total
    if name in ("scriptE", "scriptR", "scriptRprime"):
        total = Cyclotomic.zero(1)
        for D1, D2 in _modulus_splits(chi.modulus):
            if D2 == 1:
                continue
            chi1, chi2 = split_character(chi, D1)
            chi1b, chi2b = chi1.conj(), chi2.conj()
            inner = Cyclotomic.zero(1)
            for a1 in range(n * D2 + 1):
                a2 = n * D2 - a1
                if name == "scriptE":
                    w = 1
                elif name == "scriptR":
                    w = a1
                else:
                    w = a2
                if w == 0:
                    continue
                s1 = sigma_double(l - 1, chi1, chi2b, a1)
                if s1.is_zero():
                    continue
                s2 = sigma_double(k - 1, chi1b, chi2, a2)
                if s2.is_zero():
                    continue
                inner = inner + w * (s1 * s2)
            scale = (Rational(chi2b.parity()) if name == "scriptE"
                     else Rational(chi2b.parity(), D2))
            total = total + scale * inner
        if name == "scriptRprime":
            total = total * Rational(-l, k)
        return inv0 * total
    raise ValueError(f"unknown error term {name!r}")
