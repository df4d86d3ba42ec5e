"""Dirichlet characters of odd square-free modulus.

A character mod D = p1*...*pr (odd primes, ascending) is stored as the tuple
of exponents (e_1, ..., e_r) with chi_p(g_p) = zeta_{p-1}^{e_p}, where g_p is
the least primitive root mod p.  Values are exact Cyclotomic numbers at the
order of the character.
"""

import math
from functools import lru_cache

from .exact import Cyclotomic, factorize


def is_valid_modulus(D):
    """True for odd square-free positive D (the trivial modulus 1 counts)."""
    if D < 1 or D % 2 == 0 and D != 1:
        return False
    if D == 1:
        return True
    return all(e == 1 for e in factorize(D).values())


@lru_cache(maxsize=None)
def least_primitive_root(p):
    """Smallest primitive root modulo an odd prime p."""
    fac = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _dlog_table(p):
    """Discrete logs base the least primitive root: a -> log(a) mod p-1."""
    g = least_primitive_root(p)
    table = {}
    x = 1
    for k in range(p - 1):
        table[x] = k
        x = x * g % p
    return table


class DirichletCharacter:
    """Character mod odd square-free D, given by per-prime exponents."""

    __slots__ = ("modulus", "primes", "exponents")

    def __init__(self, modulus, exponents=()):
        if not is_valid_modulus(modulus):
            raise ValueError(f"modulus must be odd and square-free, got {modulus}")
        self.modulus = modulus
        self.primes = sorted(factorize(modulus)) if modulus > 1 else []
        exponents = tuple(exponents)
        if len(exponents) != len(self.primes):
            raise ValueError("need one exponent per prime factor")
        for e, p in zip(exponents, self.primes):
            if not 0 <= e <= p - 2:
                raise ValueError(f"exponent {e} out of range for prime {p}")
        self.exponents = exponents

    # --- basic invariants -------------------------------------------------

    @property
    def order(self):
        """Multiplicative order of the character."""
        o = 1
        for e, p in zip(self.exponents, self.primes):
            o = math.lcm(o, (p - 1) // math.gcd(e, p - 1))
        return o

    def is_trivial(self):
        return all(e == 0 for e in self.exponents)

    def is_primitive(self):
        """Primitive iff no component is trivial (square-free modulus)."""
        return all(e != 0 for e in self.exponents)

    def conductor(self):
        """Product of the primes with nontrivial component."""
        c = 1
        for e, p in zip(self.exponents, self.primes):
            if e:
                c *= p
        return c

    def parity(self):
        """chi(-1) as +1 or -1.

        Per prime, -1 = g^((p-1)/2), so the component contributes
        zeta_{p-1}^(e(p-1)/2) = (-1)^e.
        """
        return -1 if sum(self.exponents) % 2 else 1

    def is_quadratic(self):
        """Real-valued and nontrivial: chi^2 trivial, chi not."""
        return self.order == 2

    def conj(self):
        """Complex conjugate character."""
        exps = tuple(
            (p - 1 - e) % (p - 1) if e else 0
            for e, p in zip(self.exponents, self.primes)
        )
        return DirichletCharacter(self.modulus, exps)

    # --- labels -------------------------------------------------------------

    def label(self):
        """Mixed-radix integer label: primes ascending, radix p-1 each."""
        idx = 0
        for e, p in zip(self.exponents, self.primes):
            idx = idx * (p - 1) + e
        return idx

    @staticmethod
    def from_label(modulus, label):
        primes = sorted(factorize(modulus)) if modulus > 1 else []
        exps = []
        for p in reversed(primes):
            exps.append(label % (p - 1))
            label //= p - 1
        if label:
            raise ValueError("label out of range")
        return DirichletCharacter(modulus, tuple(reversed(exps)))

    # --- evaluation ---------------------------------------------------------

    def __call__(self, n):
        """chi(n) as a Cyclotomic of order self.order (0 if gcd(n, D) > 1)."""
        n %= self.modulus if self.modulus > 1 else 1
        if self.modulus == 1:
            return Cyclotomic.from_rational(1)
        if math.gcd(n, self.modulus) != 1:
            return Cyclotomic.zero(1)
        N = 1
        for p in self.primes:
            N = math.lcm(N, p - 1)
        E = 0
        for e, p in zip(self.exponents, self.primes):
            k = _dlog_table(p)[n % p]
            E += e * k * (N // (p - 1))
        E %= N
        o = self.order
        # E is divisible by N/o, so the value lives at order o
        return Cyclotomic.root_of_unity(o, E * o // N)

    def gauss_sum(self):
        """G(chi) = sum_a chi(a) zeta_D^a at order lcm(D, order)."""
        D = self.modulus
        m = math.lcm(D, self.order) if D > 1 else 1
        total = Cyclotomic.zero(m)
        for a in range(1, D + 1):
            v = self(a)
            if not v.is_zero():
                total = total + v * Cyclotomic.root_of_unity(m, a * (m // D))
        return total

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter({self.modulus}, {self.exponents})"

    def to_json(self):
        return {"modulus": self.modulus, "exponents": list(self.exponents)}

    @staticmethod
    def from_json(obj):
        return DirichletCharacter(obj["modulus"], tuple(obj["exponents"]))


def trivial_character():
    """The character mod 1 (identically 1 on all integers)."""
    return DirichletCharacter(1)


def all_characters(modulus):
    """All characters mod the given odd square-free modulus, by label order."""
    if modulus == 1:
        return [trivial_character()]
    primes = sorted(factorize(modulus))
    count = 1
    for p in primes:
        count *= p - 1
    return [DirichletCharacter.from_label(modulus, i) for i in range(count)]


def primitive_characters(modulus, parity=None, order=None):
    """Primitive characters mod modulus, optionally filtered by parity
    (+1/-1) and exact order."""
    out = []
    for chi in all_characters(modulus):
        if not chi.is_primitive():
            continue
        if parity is not None and chi.parity() != parity:
            continue
        if order is not None and chi.order != order:
            continue
        out.append(chi)
    return out


def quadratic_character(modulus):
    """The unique primitive quadratic character mod an odd square-free
    modulus (trivial character for modulus 1)."""
    if modulus == 1:
        return trivial_character()
    primes = sorted(factorize(modulus))
    return DirichletCharacter(modulus, tuple((p - 1) // 2 for p in primes))
