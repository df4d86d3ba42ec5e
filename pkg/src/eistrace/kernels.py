"""Fourier coefficients of the trace kernel cusp forms.

Two families of weight-K level-one cusp forms, accessed purely through exact
Fourier coefficients:

* product kernel: cuspidal projection of the trace of a product of two
  twisted Eisenstein series of weights l and k = K - l;
* bracket kernel: trace of the first Rankin-Cohen bracket of twisted
  Eisenstein series of weights l and k = K - 2 - l (already cuspidal).

Each comes as a closed-form convolution over the factorizations D = D1 * D2
of the twisting modulus (the primary implementation) and as a slower
q-series construction used for cross-checking: build the double Eisenstein
series, multiply or bracket, apply the U_{D2} operator, and sum with the
chi2bar(-1) weights.
"""

import math
from functools import lru_cache

from .bernoulli import sigma_zero, zeta_negative
from .chars import DirichletCharacter, trivial_character
from .exact import Cyclotomic, Rational, factorize
from .qforms import (
    QSeries,
    cusp_basis,
    coeff_count,
    dim_cusp,
    eisenstein_double,
    rc_bracket,
    sigma_classical,
    sigma_double,
)


def split_character(chi, D1):
    """Restrict chi mod D = D1 * D2 to the pair (chi1 mod D1, chi2 mod D2).

    For square-free D the character factors over the prime components; chi
    must be primitive for the components to be primitive.
    """
    D = chi.modulus
    if D % D1:
        raise ValueError("D1 must divide the modulus")
    D2 = D // D1
    if math.gcd(D1, D2) != 1:
        raise ValueError("factorization must be coprime")
    e1, e2 = [], []
    for e, p in zip(chi.exponents, chi.primes):
        if D1 % p == 0:
            e1.append(e)
        else:
            e2.append(e)
    return (
        DirichletCharacter(D1, tuple(e1)) if D1 > 1 else trivial_character(),
        DirichletCharacter(D2, tuple(e2)) if D2 > 1 else trivial_character(),
    )


def _modulus_splits(D):
    """All ordered factorizations D = D1 * D2 of a square-free modulus."""
    primes = sorted(factorize(D)) if D > 1 else []
    out = []
    for mask in range(1 << len(primes)):
        D1 = 1
        for i, p in enumerate(primes):
            if mask >> i & 1:
                D1 *= p
        out.append((D1, D // D1))
    return out


@lru_cache(maxsize=None)
def _sigma_double_cached(w, chi1, chi2, n):
    return sigma_double(w, chi1, chi2, n)


def product_weights(K):
    """Admissible lower weights l for the product kernel of weight K:
    3 <= l <= (K-2)/2, plus l = K/2."""
    ells = list(range(3, (K - 2) // 2 + 1))
    if K // 2 >= 3:
        ells.append(K // 2)
    return ells


def bracket_weights(K):
    """Admissible lower weights l for the bracket kernel of weight K:
    3 <= l <= (K-4)/2."""
    return list(range(3, (K - 4) // 2 + 1))


def parity_ok(l, chi):
    """The kernels require chi(-1) = (-1)^l."""
    return chi.parity() == (-1) ** l


def check_spec(K, l, chi, kind):
    """Validate a kernel spec; raises ValueError naming the violation."""
    if K % 2:
        raise ValueError("weight K must be even")
    valid = product_weights(K) if kind == "product" else bracket_weights(K)
    if l not in valid:
        raise ValueError(f"l={l} out of range for {kind} kernel of weight {K}")
    if not parity_ok(l, chi):
        raise ValueError(f"parity violation: chi(-1) != (-1)^{l}")


def trace_product_coeff(K, l, chi, n):
    """Coefficient of q^n in the traced product of Eisenstein series:

    sum over D = D1 D2 of chi2bar(-1) times
    sum_{a1 + a2 = n D2} sigma_{l-1,chi1,chi2bar}(a1) sigma_{k-1,chi1bar,chi2}(a2)
    with k = K - l.
    """
    k = K - l
    trace = Cyclotomic.zero(1)
    for D1, D2 in _modulus_splits(chi.modulus):
        chi1, chi2 = split_character(chi, D1)
        chi1b, chi2b = chi1.conj(), chi2.conj()
        inner = Cyclotomic.zero(1)
        for a1 in range(n * D2 + 1):
            s1 = _sigma_double_cached(l - 1, chi1, chi2b, a1)
            if s1.is_zero():
                continue
            s2 = _sigma_double_cached(k - 1, chi1b, chi2, n * D2 - a1)
            if s2.is_zero():
                continue
            inner = inner + s1 * s2
        trace = trace + chi2b.parity() * inner
    return trace


@lru_cache(maxsize=None)
def _eisenstein_correction(K, l, chi):
    """Multiplier of G_K removed by the cuspidal projection."""
    c0 = sigma_zero(l, chi) * sigma_zero(K - l, chi.conj())
    return 2 * c0 / zeta_negative(K)


def f_coeff(K, l, chi, n):
    """Coefficient a_{K,l,chi}(n) of the cuspidal projection of the traced
    product; exactly 0 at n = 0."""
    if n == 0:
        return Cyclotomic.zero(1)
    correction = _eisenstein_correction(K, l, chi)
    return trace_product_coeff(K, l, chi, n) - correction * sigma_classical(K - 1, n)


def trace_bracket_coeff(K, l, chi, n):
    """Coefficient b_{K,l,chi}(n) of the traced bracket, k = K - 2 - l:

    sum over D = D1 D2 of chi2bar(-1) D2^{-1} times
    sum_{a1 + a2 = n D2} sigma_{l-1,chi1,chi2bar}(a1) sigma_{k-1,chi1bar,chi2}(a2)
    (l a2 - k a1).
    """
    k = K - 2 - l
    total = Cyclotomic.zero(1)
    for D1, D2 in _modulus_splits(chi.modulus):
        chi1, chi2 = split_character(chi, D1)
        chi1b, chi2b = chi1.conj(), chi2.conj()
        inner = Cyclotomic.zero(1)
        for a1 in range(n * D2 + 1):
            a2 = n * D2 - a1
            weight = l * a2 - k * a1
            if weight == 0:
                continue
            s1 = _sigma_double_cached(l - 1, chi1, chi2b, a1)
            if s1.is_zero():
                continue
            s2 = _sigma_double_cached(k - 1, chi1b, chi2, a2)
            if s2.is_zero():
                continue
            inner = inner + weight * (s1 * s2)
        total = total + Rational(chi2b.parity(), D2) * inner
    return total


def raw_coeff(K, l, chi, n, kind):
    """Dispatch to a_{K,l,chi}(n) or b_{K,l,chi}(n)."""
    if kind == "product":
        return f_coeff(K, l, chi, n)
    return trace_bracket_coeff(K, l, chi, n)


@lru_cache(maxsize=None)
def _first_coeff(K, l, chi, kind):
    return raw_coeff(K, l, chi, 1, kind)


def kernel_product(K, l, chi, n):
    """Normalized coefficient a-hat(n) = a(n) / a(1)."""
    first = _first_coeff(K, l, chi, "product")
    if first.is_zero():
        raise ZeroDivisionError("degenerate kernel: a(1) = 0")
    return f_coeff(K, l, chi, n) / first


def kernel_bracket(K, l, chi, n):
    """Normalized coefficient b-hat(n) = b(n) / b(1)."""
    first = _first_coeff(K, l, chi, "bracket")
    if first.is_zero():
        raise ZeroDivisionError("degenerate kernel: b(1) = 0")
    return trace_bracket_coeff(K, l, chi, n) / first


def coeff_table(K, l, chi, kind, count):
    """Coefficients n = 1..count of the chosen kernel, as a plain record."""
    check_spec(K, l, chi, kind)
    values = [raw_coeff(K, l, chi, n, kind) for n in range(1, count + 1)]
    return {
        "kind": kind,
        "weight": K,
        "ell": l,
        "modulus": chi.modulus,
        "char": chi.label(),
        "values": values,
    }


def normalize(table):
    """Attach normalized values a(n)/a(1); flags the degenerate a(1) = 0
    case instead of skipping it."""
    out = dict(table)
    values = table["values"]
    if not values or values[0].is_zero():
        out["degenerate"] = True
        return out
    inv = values[0].inv()
    out["normalized"] = [v * inv for v in values]
    out["degenerate"] = False
    return out


# --- series-based oracle ------------------------------------------------------


def trace_product_series(K, l, chi, precision):
    """Traced-product coefficients 0..precision-1 via explicit q-series."""
    k = K - l
    total = None
    for D1, D2 in _modulus_splits(chi.modulus):
        chi1, chi2 = split_character(chi, D1)
        f = eisenstein_double(l, chi1, chi2.conj(), precision * D2)
        g = eisenstein_double(k, chi1.conj(), chi2, precision * D2)
        piece = (f * g).u_operator(D2).truncate(precision)
        piece = piece.scale(Rational(chi2.conj().parity()))
        total = piece if total is None else total + piece
    return total


def f_coeff_series(K, l, chi, precision):
    """Cuspidal-projection coefficients 0..precision-1 via q-series."""
    trace = trace_product_series(K, l, chi, precision)
    correction = _eisenstein_correction(K, l, chi)
    out = [Cyclotomic.zero(1)]
    for n in range(1, precision):
        out.append(trace.coeffs[n] - correction * sigma_classical(K - 1, n))
    return QSeries(out)


def trace_bracket_series(K, l, chi, precision):
    """Traced-bracket coefficients 0..precision-1 via Rankin-Cohen series."""
    k = K - 2 - l
    total = None
    for D1, D2 in _modulus_splits(chi.modulus):
        chi1, chi2 = split_character(chi, D1)
        f = eisenstein_double(l, chi1, chi2.conj(), precision * D2)
        g = eisenstein_double(k, chi1.conj(), chi2, precision * D2)
        piece = rc_bracket(f, g, l, k, 1).u_operator(D2).truncate(precision)
        piece = piece.scale(Rational(chi2.conj().parity(), D2))
        total = piece if total is None else total + piece
    return total


# --- cuspidality ---------------------------------------------------------------


def cuspidality_certificate(K, l, chi, kind):
    """Certify that the kernel's coefficient vector lies in the span of the
    level-one cusp space S_K.

    Solves exactly for coordinates in the echelonized basis (pivots at
    q^1..q^dim) and checks the remaining coefficients through the
    determining count floor(K/12) + 1.
    """
    check_spec(K, l, chi, kind)
    count = coeff_count(K)
    values = [raw_coeff(K, l, chi, n, kind) for n in range(1, count + 1)]
    d = dim_cusp(K)
    if d == 0:
        in_span = all(v.is_zero() for v in values)
        through = 0
        for v in values:
            if not v.is_zero():
                break
            through += 1
        return {"in_span": in_span, "residual_zero_through": through}
    basis = cusp_basis(K, count + 1)
    # echelon pivots at q^1..q^d give the coordinates directly
    coords = values[:d]
    residual_through = 0
    in_span = True
    for n in range(1, count + 1):
        recon = Cyclotomic.zero(1)
        for i in range(d):
            if not coords[i].is_zero():
                recon = recon + coords[i] * basis[i][n]
        if (values[n - 1] - recon).is_zero():
            if in_span:
                residual_through = n
        else:
            in_span = False
    return {"in_span": in_span, "residual_zero_through": residual_through}


def kernel_coefficients(K, l, chi, count, kind="product", normalized=False):
    """First `count` coefficients (n = 1..count), raw or normalized."""
    table = coeff_table(K, l, chi, kind, count)
    if not normalized:
        return table["values"]
    table = normalize(table)
    if table["degenerate"]:
        raise ZeroDivisionError("degenerate kernel: first coefficient is 0")
    return table["normalized"]
