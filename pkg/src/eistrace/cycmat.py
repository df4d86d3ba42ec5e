"""Exact matrices of kernel coefficients and their determinants.

Four certificate matrices with normalized entries at powers of two:

* build_matrix("M", ...)  M[i][j] = a-hat_{K, l_i, chi}(2^(j-1))
* build_matrix("N", ...)  N[i][j] = b-hat_{K, l_i, chi}(2^(j-1))
* build_matrix("P", ...)  P[i][j] = a-hat_{K, l, chi_i}(2^(j-1))
* build_matrix("Q", ...)  Q[i][j] = b-hat_{K, l, chi_i}(2^(j-1))

and four scan matrices with raw entries at consecutive n = 1..size:

* build_conjecture_matrix("C1", ...)  rows over l_i, a coefficients
* build_conjecture_matrix("C2", ...)  rows over l_i, b coefficients
* build_conjecture_matrix("C3", ...)  rows over chi_i, a coefficients
* build_conjecture_matrix("C4", ...)  rows over chi_i, b coefficients

Determinants use fraction-free Bareiss elimination over the cyclotomic
field with an exact zero test.
"""

from .exact import Cyclotomic
from .kernels import (
    check_spec,
    f_coeff,
    kernel_bracket,
    kernel_product,
    trace_bracket_coeff,
)
from .qforms import dim_cusp


def build_matrix(which, K, chi_or_list, ell_or_list):
    """Normalized certificate matrix M, N, P or Q (see module docstring).

    M/N take a single character and a list of weights; P/Q take a single
    weight and a list of characters whose values at 2 must be pairwise
    distinct.
    """
    if which in ("M", "N"):
        chi, ells = chi_or_list, list(ell_or_list)
        kind = "product" if which == "M" else "bracket"
        fn = kernel_product if which == "M" else kernel_bracket
        for l in ells:
            check_spec(K, l, chi, kind)
        return [[fn(K, l, chi, 2 ** j) for j in range(len(ells))] for l in ells]
    if which in ("P", "Q"):
        chis, l = list(chi_or_list), ell_or_list
        kind = "product" if which == "P" else "bracket"
        fn = kernel_product if which == "P" else kernel_bracket
        for chi in chis:
            check_spec(K, l, chi, kind)
        _require_distinct_at_two(chis)
        return [[fn(K, l, chi, 2 ** j) for j in range(len(chis))] for chi in chis]
    raise ValueError(f"unknown matrix kind {which!r}")


def build_conjecture_matrix(which, K, chi_or_list, ell_or_list, n=None):
    """Raw-coefficient scan matrix C1..C4 with columns at n = 1..size.

    The size may not exceed dim S_K (rows beyond the cusp dimension are
    forced dependent).
    """
    if which in ("C1", "C2"):
        chi, idx = chi_or_list, list(ell_or_list)
        kind = "product" if which == "C1" else "bracket"
        rows = [(chi, l) for l in idx]
    elif which in ("C3", "C4"):
        chis, l = list(chi_or_list), ell_or_list
        kind = "product" if which == "C3" else "bracket"
        rows = [(chi, l) for chi in chis]
    else:
        raise ValueError(f"unknown matrix kind {which!r}")
    size = len(rows) if n is None else n
    if size > dim_cusp(K):
        raise ValueError(f"size {size} exceeds dim S_{K} = {dim_cusp(K)}")
    if size != len(rows):
        raise ValueError("row count must equal column count")
    fn = f_coeff if kind == "product" else trace_bracket_coeff
    for chi, l in rows:
        check_spec(K, l, chi, kind)
    return [[fn(K, l, chi, j) for j in range(1, size + 1)] for chi, l in rows]


def _require_distinct_at_two(chis):
    seen = []
    for chi in chis:
        v = chi(2)
        if any(v == w for w in seen):
            raise ValueError("characters must take pairwise distinct values at 2")
        seen.append(v)


def determinant(matrix):
    """Exact determinant via fraction-free Bareiss elimination.

    Entries may be Cyclotomic or Rational; divisions in the Bareiss step
    are exact.  Rows are swapped to the first nonzero pivot; a fully zero
    pivot column makes the determinant zero.
    """
    n = len(matrix)
    if n == 0:
        return Cyclotomic.from_rational(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    a = [[_lift(x) for x in row] for row in matrix]
    sign = 1
    prev = Cyclotomic.from_rational(1)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            return Cyclotomic.zero(1)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
            a[i][k] = Cyclotomic.zero(1)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant_cofactor(matrix):
    """Cofactor-expansion determinant, for cross-checking small matrices."""
    n = len(matrix)
    if n == 0:
        return Cyclotomic.from_rational(1)
    if n == 1:
        return _lift(matrix[0][0])
    total = Cyclotomic.zero(1)
    for j in range(n):
        entry = _lift(matrix[0][j])
        if entry.is_zero():
            continue
        minor = [[matrix[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = entry * determinant_cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _lift(x):
    return x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x)


def is_nonsingular(matrix):
    return not determinant(matrix).is_zero()
