"""Classical hypergeometric side: Pochhammer symbols, half-integer binomials,
exact terminating pFq sums, the well-poised 6F5(-1) -> 3F2(1) transformation,
and double-precision partial sums of the two 1/pi-type series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactnum import Rational

RationalLike = Union[Rational, int]


class LowerParamPole(ArithmeticError):
    """A lower parameter hits 0 or a negative integer inside the sum range."""


class ParameterPole(ArithmeticError):
    """Excluded parameter configuration for the well-poised transformation."""


class PoleAtNonpositiveInteger(ArithmeticError):
    """Gamma limit requested at a nonpositive integer."""


def pochhammer(a: RationalLike, n: int) -> Rational:
    """Rising factorial a(a+1)...(a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def binom_half(k: int) -> Rational:
    """Binomial coefficient with top -1/2: (-1)^k (1/2)_k / k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Fraction(1)
    for j in range(1, k + 1):
        out *= Fraction(-(2 * j - 1), 2 * j)
    return out


def central_binom_identity_check(j: int) -> bool:
    """True iff C(2j, j) = 2^(2j) (-1)^j * binom(-1/2, j) exactly."""
    return math.comb(2 * j, j) == 2 ** (2 * j) * (-1) ** j * binom_half(j)


@dataclass(frozen=True)
class HypergeomSpec:
    """Parameters of a pFq series: upper a_1..a_p, lower b_1..b_q, argument z."""

    upper: tuple
    lower: tuple
    z: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        object.__setattr__(self, "z", Fraction(self.z))


def _poch_hits_zero(b: Fraction, n_terms: int) -> bool:
    # (b)_k = 0 for some k <= n_terms iff b in {0, -1, ..., -(n_terms-1)}
    return b.denominator == 1 and 0 >= b > -n_terms


def hypergeom_terminating(spec: HypergeomSpec) -> Rational:
    """Exact value of a terminating pFq as a finite rational sum.

    Some upper parameter must be a nonpositive integer; the sum runs to the
    smallest such termination index.
    """
    stops = [-int(a) for a in spec.upper if a.denominator == 1 and a <= 0]
    if not stops:
        raise ValueError("no upper parameter terminates the series")
    n_stop = min(stops)
    for b in spec.lower:
        if _poch_hits_zero(b, n_stop):
            raise LowerParamPole(f"lower parameter {b} is a pole within k<={n_stop}")
    total = Fraction(0)
    num = Fraction(1)
    den = Fraction(1)
    zk = Fraction(1)
    fact = 1
    for k in range(n_stop + 1):
        if k:
            for a in spec.upper:
                num *= a + (k - 1)
            for b in spec.lower:
                den *= b + (k - 1)
            zk *= spec.z
            fact *= k
        total += num / den * zk / fact
    return total


def whipple_check(
    a: RationalLike, c: RationalLike, d: RationalLike, e: RationalLike, m: int
) -> bool:
    """Exact check of the terminating well-poised transformation with f = -m.

    The 6F5 at -1 with parameter row (a, 1+a/2, c, d, e, -m) must equal
    (1+a)_m / (1+a-e)_m times the 3F2 at 1 with upper row (1+a-c-d, e, -m).
    The Gamma-factor prefactor has been rewritten as that Pochhammer ratio
    via Gamma(x+1) = x*Gamma(x), which is what keeps both sides rational.
    """
    if m < 1:
        raise ValueError("m must be positive")
    a, c, d, e = Fraction(a), Fraction(c), Fraction(d), Fraction(e)
    f = Fraction(-m)
    lhs_lower = (a / 2, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f)
    rhs_lower = (1 + a - c, 1 + a - d)
    for b in lhs_lower + rhs_lower:
        if _poch_hits_zero(b, m):
            raise ParameterPole(f"lower parameter {b} is a pole within k<={m}")
    for g in (1 + a, 1 + a - e + m):
        if g.denominator == 1 and g <= 0:
            raise ParameterPole(f"{g} is a nonpositive integer")
    lhs = hypergeom_terminating(
        HypergeomSpec((a, 1 + a / 2, c, d, e, f), lhs_lower, Fraction(-1))
    )
    prefactor = pochhammer(1 + a, m) / pochhammer(1 + a - e, m)
    rhs = prefactor * hypergeom_terminating(
        HypergeomSpec((1 + a - c - d, e, f), rhs_lower, Fraction(1))
    )
    return lhs == rhs


def ramanujan_partial_sum(n_terms: int) -> float:
    """Partial sum of sum_k (4k+1) binom(-1/2,k)^5 through k = n_terms."""
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    s = 0.0
    b = 1.0
    for k in range(n_terms + 1):
        if k:
            b *= -(2 * k - 1) / (2 * k)
        s += (4 * k + 1) * b**5
    return s


def ramanujan_target() -> float:
    """2 / Gamma(3/4)^4, the limit of the series above."""
    return 2.0 / math.gamma(0.75) ** 4


def entry20_partial_sum(n_terms: int) -> float:
    """Partial sum of sum_k (-1)^k (6k+1) 4^-k binom(-1/2,k)^3."""
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    s = 0.0
    b = 1.0
    q = 1.0
    sign = 1
    for k in range(n_terms + 1):
        if k:
            b *= -(2 * k - 1) / (2 * k)
            q *= 0.25
            sign = -sign
        s += sign * (6 * k + 1) * q * b**3
    return s


def entry20_target() -> float:
    """4/pi, the limit of the alternating series above."""
    return 4.0 / math.pi


def gamma_limit_approx(x: RationalLike, n_steps: int) -> float:
    """K-th term of the limit K! K^(x-1) / (x)_K defining Gamma(x)."""
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    x = Fraction(x)
    if x.denominator == 1 and x <= 0:
        raise PoleAtNonpositiveInteger(f"Gamma has a pole at {x}")
    xf = float(x)
    acc = float(n_steps) ** (xf - 1.0)
    for j in range(1, n_steps + 1):
        acc *= j / (xf + j - 1)
    return acc


def reflection_check(x: float, rel_tol: float = 1e-10) -> bool:
    """True iff Gamma(x)Gamma(1-x) matches pi/sin(pi*x) to rel_tol."""
    if float(x).is_integer():
        raise ValueError("x must not be an integer")
    lhs = math.gamma(x) * math.gamma(1.0 - x)
    rhs = math.pi / math.sin(math.pi * x)
    return abs(lhs - rhs) / abs(rhs) < rel_tol
