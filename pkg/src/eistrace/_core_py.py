"""Pure-Python polynomial kernels backing the cyclotomic arithmetic.

Mirrors the API of the compiled extension eistrace._core.  Coefficients are
arbitrary exact scalars (gmpy2.mpq / Fraction / int); only ring operations
are used.
"""


def poly_mul(a, b, zero):
    """Convolution of two coefficient lists (constant term first)."""
    la = len(a)
    lb = len(b)
    out = [zero] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def poly_reduce(c, phi_tail):
    """Reduce c modulo the monic polynomial x^d + phi_tail(x), d = len(phi_tail).

    phi_tail holds the low-order coefficients (constant first) of the modulus;
    the leading coefficient 1 is implied.  c is consumed; the remainder of
    length d is returned.
    """
    d = len(phi_tail)
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i]
        if t:
            base = i - d
            for j in range(d):
                pj = phi_tail[j]
                if pj:
                    c[base + j] = c[base + j] - t * pj
    return c[:d]
