"""Dense polynomials with exact coefficients, plus the differentiation and
coefficient bookkeeping around P(z) = d/dz[ z ((z+1)...(z+m))^3 ] and its
second-derivative companion Q(z) = (z/2) d^2/dz^2[ z ((z+1)...(z+m))^3 ]."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Coefficient = Union[int, Fraction]


class RatPoly:
    """Dense polynomial; coefficient list indexed by degree, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Coefficient) -> "RatPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Coefficient:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPoly(out)

    def scaled(self, c: Coefficient) -> "RatPoly":
        return RatPoly(tuple(c * x for x in self.coeffs))

    def shifted(self, k: int) -> "RatPoly":
        """Multiply by z**k."""
        if not self.coeffs:
            return RatPoly()
        return RatPoly((0,) * k + self.coeffs)

    def derivative(self, order: int = 1) -> "RatPoly":
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(k * cs[k] for k in range(1, len(cs)))
        return RatPoly(cs)

    def div_linear(self, r: Coefficient) -> "RatPoly":
        """Exact quotient by (z + r); the remainder must vanish."""
        if not self.coeffs:
            return RatPoly()
        out = [0] * (len(self.coeffs) - 1)
        carry = self.coeffs[-1]
        for k in range(len(self.coeffs) - 2, -1, -1):
            out[k] = carry
            carry = self.coeffs[k] - r * carry
        if carry != 0:
            raise ArithmeticError(f"(z + {r}) does not divide this polynomial")
        return RatPoly(out)

    def __call__(self, x: Coefficient) -> Coefficient:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def pochhammer_poly(m: int) -> RatPoly:
    """(z+1)(z+2)...(z+m), the rising factorial of z+1 as a polynomial."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = RatPoly((1,))
    for r in range(1, m + 1):
        out = out * RatPoly((r, 1))
    return out


def derivative(f: RatPoly, order: int = 1) -> RatPoly:
    """Formal derivative of order 1 or 2."""
    return f.derivative(order)


def p_poly(p: int) -> RatPoly:
    """d/dz [ z * pochhammer_poly((p-1)/2)^3 ]; integer coefficients."""
    m = (p - 1) // 2
    f = pochhammer_poly(m)
    return (f * f * f).shifted(1).derivative()


def q_poly(p: int) -> RatPoly:
    """(z/2) * d^2/dz^2 [ z * pochhammer_poly((p-1)/2)^3 ].

    Divisible by z with integer coefficients (k(k-1) is always even).
    """
    m = (p - 1) // 2
    f = pochhammer_poly(m)
    q = (f * f * f).shifted(1).derivative(2).shifted(1).scaled(Fraction(1, 2))
    coeffs = []
    for c in q.coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError("half-integer coefficient in Q")
        coeffs.append(int(c))
    return RatPoly(coeffs)


def p_identity_check(p: int) -> bool:
    """True iff P(z) factors as F^3 * [1 + 3z * sum_r 1/(z+r)] with F the
    rising-factorial polynomial, i.e. P = F^3 + 3z F^2 sum_r prod_{s!=r}(z+s)."""
    m = (p - 1) // 2
    f = pochhammer_poly(m)
    partial = RatPoly()
    for r in range(1, m + 1):
        partial = partial + f.div_linear(r)
    rhs = f * f * f + (f * f * partial).shifted(1).scaled(3)
    return p_poly(p) == rhs


def coefficient_facts_check(p: int) -> bool:
    """Coefficient facts tying P, Q and the cube of the rising factorial:
    p | a_{p-1} for both, a_0(P) = ((p-1)/2)!^3, a_0(Q) = 0, and the z^{p-1}
    coefficient of F^3 equals a_{p-1}(P)/p and 2 a_{p-1}(Q)/(p(p-1))."""
    m = (p - 1) // 2
    big_p = p_poly(p)
    big_q = q_poly(p)
    if not (big_p.is_integral() and big_q.is_integral()):
        return False
    f = pochhammer_poly(m)
    cube_coeff = (f * f * f).coefficient(p - 1)
    ap1_p = big_p.coefficient(p - 1)
    ap1_q = big_q.coefficient(p - 1)
    return (
        ap1_p % p == 0
        and big_p.coefficient(0) == math.factorial(m) ** 3
        and ap1_q % p == 0
        and big_q.coefficient(0) == 0
        and cube_coeff == Fraction(ap1_p, p)
        and cube_coeff == Fraction(2 * ap1_q, p * (p - 1))
    )


def exp_sum_check(p: int, k: int) -> bool:
    """True iff sum_{j=1}^{p-1} j^k is -1 mod p when (p-1) | k, else 0 mod p."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = sum(pow(j, k, p) for j in range(1, p)) % p
    expected = (p - 1) if k % (p - 1) == 0 else 0
    return total == expected


def _eval_mod(coeffs_mod: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs_mod):
        acc = (acc * x + c) % p
    return acc


def lemma_sum_checks(p: int) -> bool:
    """The mod-p sum facts that finish both vanishing lemmas:
    sum P(j) over 1..p-1 is -((p-1)/2)!^3; the head ((p-1)/2)!^3 + sum over
    1..(p-1)/2 vanishes; P(j) = 0 for (p-1)/2 < j < p; and sum Q(j) = 0."""
    m = (p - 1) // 2
    pc = [int(c) % p for c in p_poly(p).coeffs]
    qc = [int(c) % p for c in q_poly(p).coeffs]
    mf3 = pow(math.factorial(m) % p, 3, p)
    vals = [_eval_mod(pc, j, p) for j in range(1, p)]
    return (
        sum(vals) % p == (-mf3) % p
        and (mf3 + sum(vals[:m])) % p == 0
        and all(v == 0 for v in vals[m:])
        and sum(_eval_mod(qc, j, p) for j in range(1, p)) % p == 0
    )
