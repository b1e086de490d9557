"""The p-adic Gamma function at integers and at p-integral rationals.

gamma_p(n) for an integer n >= 0 is (-1)^n times the product of all j < n
coprime to p.  A p-integral rational x is handled through the least
nonnegative integer congruent to x mod p^m; by continuity the result is
correct mod p^m whatever approximating sequence is used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

import numpy as np

from .exactnum import Rational, Residue, check_modulus


class NotPIntegral(ArithmeticError):
    """Argument has negative p-adic valuation."""


_NP_MODULUS_LIMIT = 1 << 31  # pairwise int64 products must not overflow
_NP_MIN_LENGTH = 1 << 14


def _unit_product_py(n: int, p: int, pm: int) -> int:
    """Product of 1 <= j < n with p coprime to j, mod pm (bignum path)."""
    acc = 1
    prod = math.prod
    step = 64
    for lo in range(0, n, p):
        hi = min(lo + p, n)
        for a in range(lo + 1, hi, step):
            acc = acc * prod(range(a, min(a + step, hi))) % pm
    return acc


def _unit_product_np(n: int, p: int, pm: int) -> int:
    """Same product, vectorized.  Requires pm < 2**31."""
    acc = 1
    rows = max(1, (1 << 22) // p)
    block = rows * p
    aligned = n - n % p
    for lo in range(0, aligned, block):
        hi = min(lo + block, aligned)
        # rows start at multiples of p; dropping column 0 drops exactly
        # the multiples of p (and j = 0 in the first row)
        arr = np.ascontiguousarray(
            np.arange(lo, hi, dtype=np.int64).reshape(-1, p)[:, 1:]
        ).ravel()
        if n > pm:
            arr %= pm
        while arr.size > 1:
            if arr.size & 1:
                acc = acc * int(arr[-1]) % pm
                arr = arr[:-1]
            arr = arr[0::2] * arr[1::2] % pm
        if arr.size:
            acc = acc * int(arr[0]) % pm
    for j in range(max(aligned, 1), n):
        if j % p:
            acc = acc * j % pm
    return acc


def _unit_product(n: int, p: int, pm: int) -> int:
    if n <= 2:
        return 1 % pm
    if pm < _NP_MODULUS_LIMIT and _NP_MIN_LENGTH <= n < (1 << 62):
        return _unit_product_np(n, p, pm)
    return _unit_product_py(n, p, pm)


def gamma_p_int(n: int, p: int, m: int) -> Residue:
    """gamma_p at a nonnegative integer, as its defining signed product."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pm = check_modulus(p, m)
    core = _unit_product(n, p, pm)
    if n % 2:
        core = -core
    return Residue(core, p, m)


def product_bound(x: Union[Rational, int], p: int, m: int) -> int:
    """Number of factors (bound) in the defining product used for x mod p^m.

    Exposed so that any faster evaluation scheme can be checked against the
    plain product of this length.
    """
    pm = check_modulus(p, m)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPIntegral(f"{x} is not p-integral at p={p}")
    return x.numerator * pow(x.denominator, -1, pm) % pm


def gamma_p_rational(x: Union[Rational, int], p: int, m: int) -> Residue:
    """gamma_p at a p-integral rational (integers pass straight through)."""
    n = product_bound(x, p, m)
    return gamma_p_int(n, p, m)


def rhs_vanhamme(p: int, m: int = 3) -> Residue:
    """-p / gamma_p(3/4)^4 mod p^m when p = 1 mod 4, else 0.

    The leading factor p means gamma_p(3/4) is only needed mod p^(m-1);
    the returned residue is exactly the full-precision value mod p^m.
    """
    check_modulus(p, m)
    if p % 4 == 3:
        return Residue(0, p, m)
    prec = max(m - 1, 1)
    g = gamma_p_rational(Fraction(3, 4), p, prec)
    u = pow(g.value, -4, p**prec)
    return Residue(-p * u, p, m)
