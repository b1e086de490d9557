"""Finite-field side: multiplicative characters of F_p, Jacobi sums, the
normalized binomial of characters, and the all-quadratic-character Gaussian
hypergeometric series with exact integer extraction of p^n * (n+1)Fn(lambda).

Character sums are evaluated in complex doubles; every externally visible
value is an integer recovered by rounding, guarded by a residual bound.
Two zero conventions coexist deliberately:

* direct evaluation extends characters to all of F_p with chi(0) = 0 for
  nontrivial chi and epsilon(0) = 1;
* inside Jacobi sums every character (the trivial one included) counts 0
  at 0, so J(eps, eps) = p - 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exactnum import is_odd_prime
from .padic_gamma import rhs_vanhamme


class RoundingResidualTooLarge(ArithmeticError):
    """Character sum too far from an integer; p is past the float budget."""


def legendre(a: int, p: int) -> int:
    """Quadratic character of a mod p via Euler's criterion: one of -1, 0, 1."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _least_primitive_root(p: int) -> int:
    prime_divisors = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_divisors):
            return g
    raise ArithmeticError(f"no primitive root found mod {p}")  # unreachable


class CharacterTable:
    """Discrete-log table of F_p^* over its least primitive root.

    Immutable after construction; one instance per prime, freely shareable.
    """

    def __init__(self, p: int):
        if not is_odd_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        self.p = p
        self.g = _least_primitive_root(p)
        log = [0] * p  # log[0] never read
        x = 1
        for k in range(p - 1):
            log[x] = k
            x = x * self.g % p
        self.log = log
        step = 2.0 * math.pi / (p - 1)
        self.roots = [
            complex(math.cos(step * k), math.sin(step * k)) for k in range(p - 1)
        ]

    def char(self, t: int) -> "MultChar":
        return MultChar(self, t % (self.p - 1))

    @property
    def epsilon(self) -> "MultChar":
        return self.char(0)

    @property
    def phi(self) -> "MultChar":
        return self.char((self.p - 1) // 2)


@dataclass(frozen=True, eq=False)
class MultChar:
    """Multiplicative character chi with chi(g) = exp(2*pi*i*t/(p-1))."""

    table: CharacterTable
    t: int

    @property
    def is_trivial(self) -> bool:
        return self.t == 0

    def __call__(self, a: int) -> complex:
        a %= self.table.p
        if a == 0:
            return complex(1.0) if self.is_trivial else complex(0.0)
        return self.table.roots[self.t * self.table.log[a] % (self.table.p - 1)]

    def conjugate(self) -> "MultChar":
        return MultChar(self.table, (-self.t) % (self.table.p - 1))

    def __mul__(self, other: "MultChar") -> "MultChar":
        if other.table is not self.table:
            raise ValueError("characters live on different tables")
        return MultChar(self.table, (self.t + other.t) % (self.table.p - 1))


def char_eval(chi: MultChar, a: int) -> complex:
    """chi(a) with the zero extension: chi(0) = 0 unless chi is trivial."""
    return chi(a)


def jacobi_sum(chi: MultChar, lam: MultChar) -> complex:
    """Sum of chi(a) lam(1-a) over a in F_p.

    Every character counts 0 at 0 here, the trivial one included, so only
    a outside {0, 1} contribute and J(eps, eps) = p - 2.
    """
    tab = chi.table
    if lam.table is not tab:
        raise ValueError("characters live on different tables")
    p = tab.p
    log = tab.log
    roots = tab.roots
    order = p - 1
    t1 = chi.t
    t2 = lam.t
    total = complex(0.0)
    for a in range(2, p):
        total += roots[(t1 * log[a] + t2 * log[p + 1 - a]) % order]
    return total


def greene_binom(top: MultChar, bottom: MultChar) -> complex:
    """Normalized Jacobi sum bottom(-1)/p * J(top, conj(bottom))."""
    if bottom.table is not top.table:
        raise ValueError("characters live on different tables")
    return bottom(-1) / top.table.p * jacobi_sum(top, bottom.conjugate())


@lru_cache(maxsize=64)
def _table(p: int) -> CharacterTable:
    return CharacterTable(p)


def gaussian_nFn_phi(p: int, n: int, lam: int, tol: float = 1e-3) -> int:
    """The exact integer p^n * (n+1)Fn(lam) for the all-quadratic series.

    Evaluates p/(p-1) times the sum over all characters chi of
    greene_binom(phi*chi, chi)^(n+1) * chi(lam), scales by p^n, and rounds;
    the pre-rounding residual must stay below tol.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    tab = _table(p)
    if lam % p == 0:
        # the series factor chi(lam) follows the Jacobi-sum convention
        # (every character counts 0 at 0), so the whole sum vanishes
        return 0
    phi_t = (p - 1) // 2
    total = complex(0.0)
    for t in range(p - 1):
        chi = tab.char(t)
        b = greene_binom(tab.char(phi_t + t), chi)
        total += b ** (n + 1) * chi(lam)
    # fixed order: sum first, then the exact p^(n+1)/(p-1) scale
    scaled = total * p ** (n + 1) / (p - 1)
    nearest = round(scaled.real)
    residual = max(abs(scaled.real - nearest), abs(scaled.imag))
    if residual >= tol:
        raise RoundingResidualTooLarge(
            f"residual {residual:.3e} >= {tol:.1e} at p={p}, n={n}"
        )
    return nearest


def corollary5_check(p: int, m: int = 3, tol: float = 1e-3) -> bool:
    """True iff p^3 * 3F2(1) matches -p/gamma_p(3/4)^4 (or 0) mod p^m."""
    pm = p**m
    lhs = p * gaussian_nFn_phi(p, 2, 1, tol) % pm
    return lhs == rhs_vanhamme(p, m).value
