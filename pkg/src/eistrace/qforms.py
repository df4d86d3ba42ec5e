"""Truncated q-expansions with exact cyclotomic coefficients.

A QSeries holds coefficients c[0..N] of sum c[n] q^n; arithmetic truncates to
the shorter precision.  Also provides the twisted divisor sums, the single
and double Eisenstein series built from them, Rankin-Cohen brackets, the
U_m decimation operator, and a small toolkit for weight-K level-one forms
(dimension formulas, echelonized cusp basis).
"""

import math
from functools import lru_cache

from .bernoulli import sigma_zero, zeta_negative
from .chars import trivial_character
from .exact import Cyclotomic, Rational, divisors


class QSeries:
    """Truncated power series in q with Cyclotomic (or Rational) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)

    @property
    def precision(self):
        """Number of known coefficients (exponents 0 .. precision-1)."""
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        n = min(len(self.coeffs), len(other.coeffs))
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other):
        n = min(len(self.coeffs), len(other.coeffs))
        return QSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n = min(len(self.coeffs), len(other.coeffs))
            a, b = self.coeffs, other.coeffs
            out = []
            for k in range(n):
                acc = a[0] * b[k]
                for i in range(1, k + 1):
                    ai = a[i]
                    if ai:
                        acc = acc + ai * b[k - i]
                out.append(acc)
            return QSeries(out)
        return QSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def scale(self, factor):
        return QSeries([c * factor for c in self.coeffs])

    def derivative_normalized(self, r=1):
        """(q d/dq)^r: multiplies the n-th coefficient by n^r."""
        return QSeries([c * (n ** r) for n, c in enumerate(self.coeffs)])

    def u_operator(self, m):
        """U_m decimation: coefficient at n becomes coefficient at m n."""
        return QSeries(self.coeffs[::m])

    def truncate(self, n):
        return QSeries(self.coeffs[:n])

    def __eq__(self, other):
        n = min(len(self.coeffs), len(other.coeffs))
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n))

    __hash__ = None

    def __repr__(self):
        return f"QSeries({self.coeffs!r})"


# --- divisor sums ----------------------------------------------------------


def sigma_classical(w, n):
    """sigma_w(n) = sum of d^w over divisors d of n (Rational)."""
    return Rational(sum(d ** w for d in divisors(n)))


def sigma_twisted(w, chi, n):
    """sigma_{w,chi}(n) = sum_{d|n} chi(d) d^w.

    For n = 0 returns the constant term -B_{w+1,chi} / (2(w+1)).
    """
    if n == 0:
        return sigma_zero(w + 1, chi)
    total = Cyclotomic.zero(chi.order)
    for d in divisors(n):
        v = chi(d)
        if not v.is_zero():
            total = total + v * (Rational(d) ** w)
    return total


def sigma_double(w, chi1, chi2, n):
    """sigma_{w,chi1,chi2}(n) = sum_{d1 d2 = n} chi1(d1) chi2(d2) d1^w.

    The n = 0 value is 0 when chi2 is non-trivial-modulus, otherwise the
    single-twist constant term for chi1.
    """
    if n == 0:
        if chi2.modulus != 1:
            return Cyclotomic.zero(1)
        return sigma_zero(w + 1, chi1)
    m = math.lcm(chi1.order, chi2.order)
    total = Cyclotomic.zero(m)
    for d1 in divisors(n):
        v1 = chi1(d1)
        if v1.is_zero():
            continue
        v2 = chi2(n // d1)
        if v2.is_zero():
            continue
        total = total + v1 * v2 * (Rational(d1) ** w)
    return total


# --- Eisenstein series ------------------------------------------------------


def eisenstein_level1(K, precision):
    """G_K = zeta(1-K)/2 + sum_n sigma_{K-1}(n) q^n, rational coefficients."""
    coeffs = [Cyclotomic.from_rational(zeta_negative(K) / 2)]
    for n in range(1, precision):
        coeffs.append(Cyclotomic.from_rational(sigma_classical(K - 1, n)))
    return QSeries(coeffs)


@lru_cache(maxsize=None)
def _eisenstein_double_cached(weight, chi1, chi2, precision):
    coeffs = [sigma_double(weight - 1, chi1, chi2, 0)]
    if not isinstance(coeffs[0], Cyclotomic):
        coeffs[0] = Cyclotomic.from_rational(coeffs[0])
    for n in range(1, precision):
        coeffs.append(sigma_double(weight - 1, chi1, chi2, n))
    return QSeries(coeffs)


def eisenstein_double(weight, chi1, chi2, precision):
    """Eisenstein series with coefficients sigma_{weight-1,chi1,chi2}(n)."""
    return _eisenstein_double_cached(weight, chi1, chi2, precision)


def eisenstein_twisted(weight, chi, precision):
    """Single-twist Eisenstein series: coefficients sigma_{weight-1,chi}(n)."""
    return eisenstein_double(weight, chi, trivial_character(), precision)


# --- Rankin-Cohen -----------------------------------------------------------


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rc_bracket(f, g, a, b, e):
    """Rankin-Cohen bracket [f, g]_e of series of weights a and b:

    sum_r (-1)^r C(e+a-1, e-r) C(e+b-1, r) f^(r) g^(e-r),
    with f^(r) the normalized derivative (q d/dq)^r.
    """
    n = min(f.precision, g.precision)
    out = None
    for r in range(e + 1):
        c = binomial(e + a - 1, e - r) * binomial(e + b - 1, r)
        if c == 0:
            continue
        term = (f.derivative_normalized(r) * g.derivative_normalized(e - r)).truncate(n)
        if r % 2:
            c = -c
        term = term.scale(Rational(c))
        out = term if out is None else out + term
    return out if out is not None else QSeries([Cyclotomic.zero(1)] * n)


# --- level-one toolkit --------------------------------------------------------


def dim_modular(K):
    """dim M_K(SL_2(Z)) for even K >= 0."""
    if K < 0 or K % 2:
        return 0
    if K % 12 == 2:
        return K // 12
    return K // 12 + 1


def dim_cusp(K):
    """dim S_K(SL_2(Z)) for even K."""
    if K < 4:
        return 0
    return max(dim_modular(K) - 1, 0)


def coeff_count(K):
    """Number of coefficients determining a form of weight K: K//12 + 1."""
    return K // 12 + 1


def _normalized_e4(precision):
    coeffs = [Rational(1)] + [240 * sigma_classical(3, n) for n in range(1, precision)]
    return QSeries([Cyclotomic.from_rational(c) for c in coeffs])


def _normalized_e6(precision):
    coeffs = [Rational(1)] + [-504 * sigma_classical(5, n) for n in range(1, precision)]
    return QSeries([Cyclotomic.from_rational(c) for c in coeffs])


def delta_series(precision):
    """Discriminant form Delta = (E4^3 - E6^2) / 1728."""
    e4 = _normalized_e4(precision)
    e6 = _normalized_e6(precision)
    diff = e4 * e4 * e4 - e6 * e6
    return diff.scale(Rational(1, 1728))


def cusp_basis(K, precision=None):
    """Echelonized basis of S_K(SL_2(Z)): forms f_i = q^i + O(q^(d+1)),
    i = 1..d, d = dim S_K.  Built from products E4^a E6^b Delta^c."""
    d = dim_cusp(K)
    if d == 0:
        return []
    if precision is None:
        precision = d + 2
    e4 = _normalized_e4(precision)
    e6 = _normalized_e6(precision)
    delta = delta_series(precision)
    # spanning set: Delta^c * E4^a * E6^b with 4a + 6b + 12c = K, c >= 1
    spanning = []
    for c in range(1, K // 12 + 1):
        rem = K - 12 * c
        for b in (0, 1):
            if (rem - 6 * b) % 4 == 0 and rem - 6 * b >= 0:
                a = (rem - 6 * b) // 4
                f = QSeries([Cyclotomic.from_rational(1)] + [Cyclotomic.zero(1)] * (precision - 1))
                for _ in range(c):
                    f = f * delta
                for _ in range(a):
                    f = f * e4
                for _ in range(b):
                    f = f * e6
                spanning.append(f)
                break
        if len(spanning) == d:
            break
    # echelonize on coefficients q^1 .. q^d
    basis = list(spanning)
    for i in range(d):
        piv = next(j for j in range(i, d) if not basis[j][i + 1].is_zero())
        basis[i], basis[piv] = basis[piv], basis[i]
        inv = basis[i][i + 1].inv()
        basis[i] = basis[i] * inv
        for j in range(d):
            if j != i and not basis[j][i + 1].is_zero():
                basis[j] = basis[j] - basis[j][i + 1] * basis[i]
    return basis
