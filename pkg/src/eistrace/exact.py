"""Exact rational and cyclotomic arithmetic.

Rationals are arbitrary-precision (gmpy2.mpq when available, otherwise
fractions.Fraction) and serialize as "p/q" strings.  Cyclotomic numbers are
represented by their order m and the phi(m) coefficients of the canonical
representative modulo the m-th cyclotomic polynomial.

The polynomial convolution/reduction hot loop lives in a compiled extension
(eistrace._core) with a pure-Python fallback (eistrace._core_py).  Set the
environment variable EISTRACE_PURE_PYTHON=1 to force the fallback.
"""

import json
import math
import os
from functools import lru_cache

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

if os.environ.get("EISTRACE_PURE_PYTHON"):
    from . import _core_py as _core

    BACKEND = "python"
else:
    try:
        from . import _core
        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as _core

        BACKEND = "python"

ZERO = Rational(0)
ONE = Rational(1)

_SCALAR_TYPES = (int, type(ZERO))
try:
    from fractions import Fraction as _Fraction

    _SCALAR_TYPES = _SCALAR_TYPES + (_Fraction,)
except ImportError:  # pragma: no cover
    pass


def _is_scalar(x):
    return isinstance(x, _SCALAR_TYPES)


def rational_to_str(x):
    """Serialize an exact rational as "p/q" (q omitted when 1)."""
    x = Rational(x)
    n, d = x.numerator, x.denominator
    if d == 1:
        return str(n)
    return f"{n}/{d}"


def rational_from_str(s):
    """Parse "p/q" or "p" into an exact rational."""
    if "/" in s:
        p, q = s.split("/")
        return Rational(int(p), int(q))
    return Rational(int(s))


def totient(m):
    """Euler phi function."""
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def divisors(m):
    """Sorted list of positive divisors of m."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def factorize(m):
    """Prime factorization as a dict {p: exponent}."""
    out = {}
    n = m
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _poly_divmod_exact(num, den):
    """Quotient of num / den in Q[x] assuming exact divisibility.

    Coefficient lists are constant-term first; den must be nonzero with
    leading coefficient a unit.
    """
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    q = [ZERO] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            c = c / lead
            q[i - dd] = c
            for j, dj in enumerate(den):
                if dj:
                    num[i - dd + j] = num[i - dd + j] - c * dj
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Computed by dividing x^m - 1 by the cyclotomic polynomials of the proper
    divisors of m.
    """
    if m == 1:
        return (Rational(-1), ONE)
    # x^m - 1
    poly = [ZERO] * (m + 1)
    poly[0] = Rational(-1)
    poly[m] = ONE
    for d in divisors(m):
        if d < m:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_tail(m):
    """Low-order coefficients of the (monic) m-th cyclotomic polynomial."""
    return list(cyclotomic_polynomial(m)[:-1])


@lru_cache(maxsize=None)
def _embed_root_powers(m, deg):
    """(cos, sin) pairs for exp(2*pi*i*k/m), k = 0..deg-1."""
    step = 2.0 * math.pi / m
    return [(math.cos(step * k), math.sin(step * k)) for k in range(deg)]


class Cyclotomic:
    """Element of the m-th cyclotomic field, reduced mod the m-th
    cyclotomic polynomial.

    coeffs has exactly phi(m) entries (Rational), constant term first, so
    the element is sum(coeffs[i] * zeta_m**i).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None, *, _raw=False):
        self.order = order
        deg = totient(order)
        if coeffs is None:
            self.coeffs = [ZERO] * deg
            return
        if _raw:
            self.coeffs = coeffs
            return
        coeffs = [Rational(c) for c in coeffs]
        if len(coeffs) > deg:
            # fold exponents >= m first, then reduce mod the minimal polynomial
            if len(coeffs) > order:
                folded = [ZERO] * order
                for i, c in enumerate(coeffs):
                    if c:
                        folded[i % order] = folded[i % order] + c
                coeffs = folded
            tail = _phi_tail(order)
            if len(coeffs) > deg:
                coeffs = _core.poly_reduce(coeffs, tail)
        while len(coeffs) < deg:
            coeffs.append(ZERO)
        self.coeffs = coeffs

    # --- constructors -------------------------------------------------

    @staticmethod
    def zero(order=1):
        return Cyclotomic(order)

    @staticmethod
    def from_rational(x, order=1):
        z = Cyclotomic(order)
        z.coeffs[0] = Rational(x)
        return z

    @staticmethod
    def root_of_unity(order, exponent=1):
        """zeta_order ** exponent."""
        exponent %= order
        deg = totient(order)
        if exponent < deg:
            z = Cyclotomic(order)
            z.coeffs[exponent] = ONE
            return z
        coeffs = [ZERO] * (exponent + 1)
        coeffs[exponent] = ONE
        return Cyclotomic(order, coeffs)

    # --- order changes --------------------------------------------------

    def promote(self, new_order):
        """Rewrite at a larger order (new_order must be a multiple)."""
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise ValueError(f"{new_order} is not a multiple of {self.order}")
        k = new_order // self.order
        coeffs = [ZERO] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                coeffs[i * k] = c
        return Cyclotomic(new_order, coeffs)

    def demote(self):
        """Smallest-order representation of the same number.

        Tries each divisor d of the order in increasing order and solves the
        exact linear system expressing the element in powers of zeta_d.
        """
        if not any(self.coeffs):
            return Cyclotomic.zero(1)
        for d in divisors(self.order):
            if d == self.order:
                break
            cand = self._try_order(d)
            if cand is not None:
                return cand
        return self

    def _try_order(self, d):
        k = self.order // d
        degd = totient(d)
        # basis vectors: promote zeta_d^i to the current order
        target = list(self.coeffs)
        cols = []
        for i in range(degd):
            z = Cyclotomic.root_of_unity(d, i).promote(self.order)
            cols.append(z.coeffs)
        # solve cols * x = target by Gaussian elimination (exact)
        n = len(target)
        aug = [[cols[j][r] for j in range(degd)] + [target[r]] for r in range(n)]
        row = 0
        pivots = []
        for col in range(degd):
            piv = next((r for r in range(row, n) if aug[r][col]), None)
            if piv is None:
                return None
            aug[row], aug[piv] = aug[piv], aug[row]
            pv = aug[row][col]
            aug[row] = [a / pv for a in aug[row]]
            for r in range(n):
                if r != row and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
            pivots.append((row, col))
            row += 1
        # consistency: remaining rows must have zero RHS
        for r in range(row, n):
            if aug[r][degd]:
                return None
        sol = [ZERO] * degd
        for r, c in pivots:
            sol[c] = aug[r][degd]
        return Cyclotomic(d, sol)

    def _common(self, other):
        if isinstance(other, Cyclotomic):
            if self.order == other.order:
                return self, other
            m = math.lcm(self.order, other.order)
            return self.promote(m), other.promote(m)
        return self, Cyclotomic.from_rational(other, self.order)

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Cyclotomic) and other.order == self.order:
            return Cyclotomic(
                self.order,
                [a + b for a, b in zip(self.coeffs, other.coeffs)],
                _raw=True,
            )
        if not isinstance(other, Cyclotomic):
            if not _is_scalar(other):
                return NotImplemented
            c = list(self.coeffs)
            c[0] = c[0] + Rational(other)
            return Cyclotomic(self.order, c, _raw=True)
        a, b = self._common(other)
        return a + b

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs], _raw=True)

    def __sub__(self, other):
        if isinstance(other, Cyclotomic):
            return self + (-other)
        if not _is_scalar(other):
            return NotImplemented
        return self + (-Rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                a, b = self._common(other)
                return a * b
            prod = _core.poly_mul(self.coeffs, other.coeffs, ZERO)
            deg = len(self.coeffs)
            if len(prod) > deg:
                prod = _core.poly_reduce(prod, _phi_tail(self.order))
            while len(prod) < deg:
                prod.append(ZERO)
            return Cyclotomic(self.order, prod, _raw=True)
        if not _is_scalar(other):
            return NotImplemented
        f = Rational(other)
        return Cyclotomic(self.order, [c * f for c in self.coeffs], _raw=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        result = Cyclotomic.from_rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm in
        Q[x] against the order's cyclotomic polynomial."""
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        # trim trailing zeros for the Euclid loop
        a = list(cyclotomic_polynomial(self.order))
        b = list(self.coeffs)
        while b and not b[-1]:
            b.pop()
        # maintain s*self = r (mod Phi_m)
        s0, s1 = [ZERO], [ONE]
        r0, r1 = a, b
        while True:
            if len(r1) == 1:
                c = r1[0]
                inv_coeffs = [x / c for x in s1]
                return Cyclotomic(self.order, inv_coeffs)
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            t = _poly_sub(s0, _core.poly_mul(q, s1, ZERO))
            s0, s1 = s1, t

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            return self * other.inv()
        if not _is_scalar(other):
            return NotImplemented
        return self * (ONE / Rational(other))

    def __rtruediv__(self, other):
        return self.inv() * other

    def conj(self):
        """Complex conjugate: zeta^i -> zeta^(m-i)."""
        m = self.order
        coeffs = [ZERO] * m
        for i, c in enumerate(self.coeffs):
            if c:
                coeffs[(m - i) % m] = coeffs[(m - i) % m] + c
        return Cyclotomic(m, coeffs)

    # --- predicates and conversions --------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def embed(self):
        """Complex value at zeta_m = exp(2*pi*i/m), double precision."""
        roots = _embed_root_powers(self.order, len(self.coeffs))
        re = im = 0.0
        for c, (cr, ci) in zip(self.coeffs, roots):
            if c:
                f = float(c.numerator) / float(c.denominator)
                re += f * cr
                im += f * ci
        return complex(re, im)

    def __eq__(self, other):
        if not isinstance(other, Cyclotomic):
            if not _is_scalar(other):
                return NotImplemented
            if self.is_rational():
                return self.coeffs[0] == Rational(other)
            return False
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(any(self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(rational_to_str(c))
                else:
                    terms.append(f"({rational_to_str(c)})*z{self.order}^{i}")
        return " + ".join(terms) if terms else "0"

    # --- serialization ----------------------------------------------------

    def to_json(self):
        return {
            "order": self.order,
            "coeffs": [rational_to_str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        coeffs = [rational_from_str(s) for s in obj["coeffs"]]
        return Cyclotomic(obj["order"], coeffs)


def _poly_divmod(num, den):
    """Full quotient/remainder division in Q[x], constant term first."""
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [ZERO], num
    q = [ZERO] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            c = c / lead
            q[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] = num[i - dd + j] - c * dj
    rem = num[:dd]
    while rem and not rem[-1]:
        rem.pop()
    if not rem:
        rem = [ZERO]
    return q, rem


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [ZERO] * (n - len(a))
    b = b + [ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
