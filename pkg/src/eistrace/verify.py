"""Verification harness: convolution identities, zero-space checks,
cuspidality sweeps, conjecture scans, and the quadratic-twist
non-vanishing criterion.

Every task returns a report dict {task, params, status, witnesses,
timing_ms} with status in {"verified", "counterexample", "degenerate",
"error"}.  Witness values are serialized exactly (Cyclotomic JSON, "p/q"
strings); reports are deterministic for fixed parameters.
"""

import itertools
import time
from concurrent.futures import ProcessPoolExecutor

from . import bounds
from .bernoulli import bernoulli_number, twisted_bernoulli
from .chars import primitive_characters, quadratic_character, trivial_character
from .cycmat import build_conjecture_matrix, determinant
from .exact import Cyclotomic, Rational, divisors
from .kernels import (
    bracket_weights,
    f_coeff,
    parity_ok,
    product_weights,
    trace_bracket_coeff,
)
from .bernoulli import sigma_zero
from .qforms import dim_cusp, sigma_double

# pairs (l, k) with l + k = K, 3 <= l <= K/2 and dim S_K = 0
PRODUCT_PAIRS = (
    (3, 3),
    (3, 5),
    (3, 7),
    (3, 11),
    (4, 4),
    (4, 6),
    (4, 10),
    (5, 5),
    (5, 9),
    (7, 7),
)

# pairs (l, k) with l + k = K - 2, 3 <= l <= (K-4)/2 and dim S_K = 0
BRACKET_PAIRS = ((3, 5), (3, 9), (4, 8), (5, 7))


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _report(task, params, status, witnesses, t0):
    return {
        "task": task,
        "params": params,
        "status": status,
        "witnesses": witnesses,
        "timing_ms": int((time.monotonic() - t0) * 1000),
    }


def product_identity_sides(l, k, chi, p):
    """LHS/RHS of the product convolution identity at the prime p:

    sum_{n=1}^{p} sigma_{l-1,1,chibar}(n) sigma_{k-1,1,chi}(p-n)
      = chi(-1) (B_{k,chibar}/(2k) + B_{l,chi}/(2l)
                 - K B_{k,chibar} B_{l,chi} / (2 k l B_K)),  K = l + k.
    """
    one = trivial_character()
    chib = chi.conj()
    lhs = Cyclotomic.zero(1)
    for n in range(1, p + 1):
        s1 = sigma_double(l - 1, one, chib, n)
        if s1.is_zero():
            continue
        s2 = sigma_double(k - 1, one, chi, p - n)
        if s2.is_zero():
            continue
        lhs = lhs + s1 * s2
    K = l + k
    bk = twisted_bernoulli(k, chib)
    bl = twisted_bernoulli(l, chi)
    rhs = (
        bk * Rational(1, 2 * k)
        + bl * Rational(1, 2 * l)
        - Rational(K) / (2 * k * l * bernoulli_number(K)) * (bk * bl)
    ) * chi.parity()
    return lhs, rhs


def bracket_identity_sides(l, k, chi, p):
    """LHS/RHS of the bracket convolution identity at the prime p:

    sum_{n=1}^{p} sigma_{l-1,1,chibar}(n) sigma_{k-1,1,chi}(p-n) (l(p-n) - kn)
      = chi(-1) p (B_{l,chi} - B_{k,chibar}) / 2.
    """
    one = trivial_character()
    chib = chi.conj()
    lhs = Cyclotomic.zero(1)
    for n in range(1, p + 1):
        weight = l * (p - n) - k * n
        if weight == 0:
            continue
        s1 = sigma_double(l - 1, one, chib, n)
        if s1.is_zero():
            continue
        s2 = sigma_double(k - 1, one, chi, p - n)
        if s2.is_zero():
            continue
        lhs = lhs + weight * (s1 * s2)
    bl = twisted_bernoulli(l, chi)
    bk = twisted_bernoulli(k, chi.conj())
    rhs = (bl - bk) * Rational(chi.parity() * p, 2)
    return lhs, rhs


def verify_identities_product(p):
    """Check all product convolution identities for every primitive
    character mod p of the matching parity."""
    t0 = time.monotonic()
    if not _is_prime(p) or p == 2:
        return _report("identities_product", {"p": p}, "error",
                       [{"error": "p must be an odd prime"}], t0)
    witnesses = []
    ok = True
    for l, k in PRODUCT_PAIRS:
        want = (-1) ** l
        for chi in primitive_characters(p, parity=want):
            lhs, rhs = product_identity_sides(l, k, chi, p)
            passed = (lhs - rhs) == 0
            ok = ok and passed
            witnesses.append({
                "pair": [l, k],
                "char": chi.label(),
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json() if isinstance(rhs, Cyclotomic) else str(rhs),
                "equal": passed,
            })
    status = "verified" if ok else "counterexample"
    return _report("identities_product", {"p": p}, status, witnesses, t0)


def verify_identities_bracket(p):
    """Check all bracket convolution identities for every primitive
    character mod p of the matching parity."""
    t0 = time.monotonic()
    if not _is_prime(p) or p == 2:
        return _report("identities_bracket", {"p": p}, "error",
                       [{"error": "p must be an odd prime"}], t0)
    witnesses = []
    ok = True
    for l, k in BRACKET_PAIRS:
        want = (-1) ** l
        for chi in primitive_characters(p, parity=want):
            lhs, rhs = bracket_identity_sides(l, k, chi, p)
            passed = (lhs - rhs) == 0
            ok = ok and passed
            witnesses.append({
                "pair": [l, k],
                "char": chi.label(),
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json() if isinstance(rhs, Cyclotomic) else str(rhs),
                "equal": passed,
            })
    status = "verified" if ok else "counterexample"
    return _report("identities_bracket", {"p": p}, status, witnesses, t0)


def verify_zero_space(K, D, n_max):
    """All kernel coefficients vanish when dim S_K = 0."""
    t0 = time.monotonic()
    if dim_cusp(K) != 0:
        return _report("zero_space", {"K": K, "D": D, "n_max": n_max}, "error",
                       [{"error": f"dim S_{K} is nonzero"}], t0)
    witnesses = []
    ok = True
    for chi in primitive_characters(D):
        for kind, weights, fn in (
            ("product", product_weights(K), f_coeff),
            ("bracket", bracket_weights(K), trace_bracket_coeff),
        ):
            for l in weights:
                if not parity_ok(l, chi):
                    continue
                bad = [n for n in range(1, n_max + 1)
                       if not fn(K, l, chi, n).is_zero()]
                ok = ok and not bad
                witnesses.append({
                    "kind": kind, "ell": l, "char": chi.label(),
                    "all_zero": not bad, "nonzero_at": bad,
                })
    status = "verified" if ok else "counterexample"
    return _report("zero_space", {"K": K, "D": D, "n_max": n_max}, status,
                   witnesses, t0)


def _odd_squarefree(limit):
    from .chars import is_valid_modulus

    return [D for D in range(1, limit + 1) if is_valid_modulus(D)]


def _index_selections(candidates, size, exhaustive_cap=4):
    """ell-subsets (or character subsets) to test: all subsets when the
    cusp dimension is small, sliding windows otherwise."""
    if size == 0 or len(candidates) < size:
        return []
    if size <= exhaustive_cap:
        return list(itertools.combinations(candidates, size))
    return [tuple(candidates[i:i + size])
            for i in range(len(candidates) - size + 1)]


def _scan_cell(args):
    which, K, D, selection, l = args
    if which in ("C1", "C2"):
        chi_label, ells = selection
        from .chars import DirichletCharacter

        chi = (DirichletCharacter.from_label(D, chi_label) if D > 1
               else trivial_character())
        m = build_conjecture_matrix(which, K, chi, list(ells))
    else:
        from .chars import DirichletCharacter

        chis = [DirichletCharacter.from_label(D, lab) if D > 1
                else trivial_character() for lab in selection]
        m = build_conjecture_matrix(which, K, chis, l)
    det = determinant(m)
    return {"K": K, "D": D, "selection": selection, "ell": l,
            "det_zero": det.is_zero(), "det": det.to_json()}


def scan_conjectures(which, K_max, D_max, jobs=1):
    """Non-singularity scan of the raw-coefficient matrices over all even
    K <= K_max and odd square-free D <= D_max.

    Selection policy: with d = dim S_K, rows are all d-subsets of the
    admissible weights (C1/C2) or characters (C3/C4) when d <= 4, sliding
    windows otherwise.
    """
    t0 = time.monotonic()
    if which not in ("C1", "C2", "C3", "C4"):
        return _report("scan", {"which": which}, "error",
                       [{"error": f"unknown matrix {which}"}], t0)
    cells = []
    for K in range(12, K_max + 1, 2):
        d = dim_cusp(K)
        if d == 0:
            continue
        for D in _odd_squarefree(D_max):
            chars = primitive_characters(D)
            if which in ("C1", "C2"):
                weights = product_weights(K) if which == "C1" else bracket_weights(K)
                if which == "C1":
                    weights = [l for l in weights if l <= (K - 2) // 2]
                for chi in chars:
                    valid = [l for l in weights if parity_ok(l, chi)]
                    for sel in _index_selections(valid, d):
                        cells.append((which, K, D, (chi.label(), sel), None))
            else:
                weights = product_weights(K) if which == "C3" else bracket_weights(K)
                if which == "C3":
                    weights = [l for l in weights if l <= (K - 2) // 2]
                for l in weights:
                    labels = [c.label() for c in chars if parity_ok(l, c)]
                    for sel in _index_selections(labels, d):
                        cells.append((which, K, D, sel, l))
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            witnesses = list(pool.map(_scan_cell, cells))
    else:
        witnesses = [_scan_cell(c) for c in cells]
    ok = all(not w["det_zero"] for w in witnesses)
    status = "verified" if ok else "counterexample"
    return _report("scan", {"which": which, "K_max": K_max, "D_max": D_max},
                   status, witnesses, t0)


def maeda_scan(D_max, K_cap):
    """Non-vanishing of the central coefficient a_{K,K/2,chi}(1) for the
    quadratic character mod D, K from max(12, 10D+2) to K_cap, under the
    sign hypothesis (-1)^(K/2) chi(-1) > 0."""
    t0 = time.monotonic()
    witnesses = []
    ok = True
    for D in _odd_squarefree(D_max):
        chi = quadratic_character(D)
        for K in range(max(12, 10 * D + 2), K_cap + 1, 2):
            if (-1) ** (K // 2) * chi.parity() <= 0:
                witnesses.append({"K": K, "D": D, "skipped": "sign hypothesis"})
                continue
            a1 = f_coeff(K, K // 2, chi, 1)
            nonzero = not a1.is_zero()
            ok = ok and nonzero
            s0 = sigma_zero(K // 2, chi)
            eps = a1 / (2 * s0) - 1
            eps_mod = abs(eps.embed())
            bound = bounds.epsilon_maeda(K, D)
            ok = ok and eps_mod <= bound
            witnesses.append({
                "K": K, "D": D, "a1_nonzero": nonzero,
                "eps_modulus": eps_mod, "eps_bound": bound,
                "bound_below_one": bound < 1,
            })
    status = "verified" if ok else "counterexample"
    return _report("maeda", {"D_max": D_max, "K_cap": K_cap}, status,
                   witnesses, t0)
