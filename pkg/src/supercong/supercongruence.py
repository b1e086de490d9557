"""Truncated Van Hamme sums, the harmonic-sum quantities X/Y/Z at
(lambda, n) = (1, 2), the specialized well-poised transformation with
conjugate-paired parameters, and the per-prime verification records.

Every truncated sum has two interchangeable evaluation routes: exact
Rational accumulation reduced once at the end, and per-term residue
accumulation (valid because every denominator in range is a p-unit;
the test suite asserts the two agree).  Residue comparisons are exact
integer equality throughout, never tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rational, Residue, check_modulus, residue_from_rational
from .gaussian_hg import gaussian_nFn_phi, legendre
from .padic_gamma import gamma_p_rational, rhs_vanhamme

#: Statement ids understood by the sweep front end.
STATEMENTS = (
    "vanhamme_a",
    "vanhamme_b",
    "lemma1",
    "lemma2",
    "prop3",
    "thm_os",
    "cor5",
    "whipple_inst",
)

_METHODS = ("exact", "modular")


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of one congruence check at one prime."""

    statement: str
    p: int
    lhs: Residue
    rhs: Residue
    passed: bool

    @property
    def modulus(self) -> int:
        return self.lhs.modulus


def _record(statement: str, p: int, lhs: Residue, rhs: Residue) -> VerificationRecord:
    return VerificationRecord(statement, p, lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class XYZResult:
    """The three harmonic-sum quantities of one prime, at the precisions
    they are consumed at: X and Y mod p, Z mod p^3."""

    x_mod_p: Residue
    y_mod_p: Residue
    z_mod_p3: Residue

    def __post_init__(self) -> None:
        if not (self.x_mod_p.p == self.y_mod_p.p == self.z_mod_p3.p):
            raise ValueError("X, Y, Z must share one prime")
        if (self.x_mod_p.m, self.y_mod_p.m, self.z_mod_p3.m) != (1, 1, 3):
            raise ValueError("precisions must be (1, 1, 3)")

    @property
    def p(self) -> int:
        return self.x_mod_p.p


def xyz_quantities(p: int) -> XYZResult:
    """X, Y and Z at one prime, bundled."""
    return XYZResult(x_quantity(p), y_quantity(p), z_quantity(p))


@dataclass(frozen=True)
class HarmonicCache:
    """Prefix list of generalized harmonic sums H_0 .. H_n of one order."""

    order: int
    values: tuple

    @classmethod
    def build(cls, order: int, upto: int) -> "HarmonicCache":
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        vals = [Fraction(0)]
        for n in range(1, upto + 1):
            vals.append(vals[-1] + Fraction(1, n**order))
        return cls(order, tuple(vals))


def harmonic(i: int, n: int) -> Rational:
    """H_n of order i: sum of 1/j^i for j = 1..n, with H_0 = 0."""
    if i not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(Fraction(1, j**i) for j in range(1, n + 1))


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}")


def _inverses(n: int, pm: int) -> list:
    """Modular inverses of 1..n mod pm (all are p-units for n < p)."""
    return [0] + [pow(i, -1, pm) for i in range(1, n + 1)]


# ---------------------------------------------------------------------------
# truncated Van Hamme sums


def lhs_vanhamme(p: int, m: int = 3, method: str = "exact") -> Residue:
    """Sum of (4k+1) binom(-1/2,k)^5 for k <= (p-1)/2, reduced mod p^m.

    Every denominator is a power of 2, a p-unit for odd p.
    """
    _check_method(method)
    pm = check_modulus(p, m)
    half = (p - 1) // 2
    if method == "exact":
        total = Fraction(0)
        b = Fraction(1)
        for k in range(half + 1):
            if k:
                b *= Fraction(-(2 * k - 1), 2 * k)
            total += (4 * k + 1) * b**5
        return residue_from_rational(total, p, m)
    # binom(-1/2,k)^5 = (-1)^k C(2k,k)^5 / 1024^k
    inv = _inverses(half, pm)
    inv1024 = pow(1024, -1, pm)
    c = 1
    qk = 1
    total = 0
    sign = 1
    for k in range(half + 1):
        if k:
            c = c * (2 * (2 * k - 1)) % pm * inv[k] % pm
            qk = qk * inv1024 % pm
            sign = -sign
        total = (total + sign * (4 * k + 1) * pow(c, 5, pm) * qk) % pm
    return Residue(total, p, m)


def lhs_vanhamme_b(p: int, m: int = 4, method: str = "exact") -> Residue:
    """Sum of (-1)^k (6k+1) 4^-k binom(-1/2,k)^3 for k <= (p-1)/2 mod p^m."""
    _check_method(method)
    pm = check_modulus(p, m)
    half = (p - 1) // 2
    if method == "exact":
        total = Fraction(0)
        b = Fraction(1)
        for k in range(half + 1):
            if k:
                b *= Fraction(-(2 * k - 1), 2 * k)
            total += Fraction((-1) ** k * (6 * k + 1), 4**k) * b**3
        return residue_from_rational(total, p, m)
    # the signs cancel: (-1)^k 4^-k binom(-1/2,k)^3 = C(2k,k)^3 / 256^k
    inv = _inverses(half, pm)
    inv256 = pow(256, -1, pm)
    c = 1
    qk = 1
    total = 0
    for k in range(half + 1):
        if k:
            c = c * (2 * (2 * k - 1)) % pm * inv[k] % pm
            qk = qk * inv256 % pm
        total = (total + (6 * k + 1) * pow(c, 3, pm) * qk) % pm
    return Residue(total, p, m)


def rhs_vanhamme_b(p: int, m: int = 4) -> Residue:
    """-p / gamma_p(1/2)^2 mod p^m; the p factor lets gamma run at m-1."""
    check_modulus(p, m)
    prec = max(m - 1, 1)
    g = gamma_p_rational(Fraction(1, 2), p, prec)
    u = pow(g.value, -2, p**prec)
    return Residue(-p * u, p, m)


# ---------------------------------------------------------------------------
# the X / Y / Z quantities at (lambda, n) = (1, 2)
#
# X and Y are carried in their reduced binom(-1/2,j)^3 form, which determines
# them at the precision they are consumed at (mod p as lemma statements, and
# mod p^2 for the pY term of the decomposition check).  The common weight is
# binom(-1/2,j)^3 (-1)^{3j} = C(2j,j)^3 / 64^j.


def _weights_exact(half: int):
    w = Fraction(1)
    for j in range(half + 1):
        if j:
            w *= Fraction((2 * j - 1) ** 3, 8 * j**3)
        yield j, w


def _x_sum(p: int) -> Rational:
    """Exact rational value of the reduced X quantity."""
    m = (p - 1) // 2
    h1 = HarmonicCache.build(1, p - 1).values
    h2 = HarmonicCache.build(2, p - 1).values
    total = Fraction(0)
    for j, w in _weights_exact(m):
        d1 = h1[m + j] - h1[j]
        d2 = h2[m + j] - h2[j]
        total += w * (3 * j * d1 + Fraction(9, 2) * j * j * d1 * d1 - Fraction(3, 2) * j * j * d2)
    return total


def _y_sum(p: int) -> Rational:
    """Exact rational value of the reduced Y quantity."""
    m = (p - 1) // 2
    h1 = HarmonicCache.build(1, p - 1).values
    total = Fraction(0)
    for j, w in _weights_exact(m):
        d1 = h1[m + j] - h1[j]
        dmid = h1[m + j] - h1[m - j]
        total += w * (1 + 3 * j * d1 - Fraction(3, 2) * j * dmid)
    return total


def _harmonic_tables_mod(p: int, pm: int, need_second: bool):
    inv = _inverses(p - 1, pm)
    h1 = [0] * p
    for n in range(1, p):
        h1[n] = (h1[n - 1] + inv[n]) % pm
    h2 = None
    if need_second:
        h2 = [0] * p
        for n in range(1, p):
            h2[n] = (h2[n - 1] + inv[n] * inv[n]) % pm
    return inv, h1, h2


def _xy_mod(p: int, pm: int, want_x: bool) -> int:
    """Per-term residue accumulation of the reduced X or Y sum mod pm."""
    m = (p - 1) // 2
    inv, h1, h2 = _harmonic_tables_mod(p, pm, want_x)
    inv8 = pow(8, -1, pm)
    half3 = 3 * pow(2, -1, pm) % pm  # 3/2
    half9 = 9 * pow(2, -1, pm) % pm  # 9/2
    w = 1
    total = 0
    for j in range(m + 1):
        if j:
            w = w * pow((2 * j - 1) * inv[j] % pm, 3, pm) % pm * inv8 % pm
        d1 = (h1[m + j] - h1[j]) % pm
        if want_x:
            d2 = (h2[m + j] - h2[j]) % pm
            bracket = (3 * j * d1 + half9 * j * j * d1 * d1 - half3 * j * j * d2) % pm
        else:
            dmid = (h1[m + j] - h1[m - j]) % pm
            bracket = (1 + 3 * j * d1 - half3 * j * dmid) % pm
        total = (total + w * bracket) % pm
    return total


def x_quantity(p: int, method: str = "modular") -> Residue:
    """The reduced X quantity mod p (expected 0 at every odd prime)."""
    _check_method(method)
    check_modulus(p, 1)
    if method == "exact":
        return residue_from_rational(_x_sum(p), p, 1)
    return Residue(_xy_mod(p, p, True), p, 1)


def y_quantity(p: int, method: str = "modular") -> Residue:
    """The reduced Y quantity mod p (expected 0 at every odd prime)."""
    _check_method(method)
    check_modulus(p, 1)
    if method == "exact":
        return residue_from_rational(_y_sum(p), p, 1)
    return Residue(_xy_mod(p, p, False), p, 1)


def z_quantity(p: int, m: int = 3, method: str = "exact") -> Residue:
    """Sum of C(2j,j)^3 / 64^j for j <= (p-1)/2 mod p^m.

    The 16^(-3j/2) weight of the defining sum resolves to 64^-j;
    equivalently this is the sum of (-1)^j binom(-1/2,j)^3.
    """
    _check_method(method)
    pm = check_modulus(p, m)
    half = (p - 1) // 2
    if method == "exact":
        total = Fraction(0)
        for j, w in _weights_exact(half):
            total += w
        return residue_from_rational(total, p, m)
    inv = _inverses(half, pm)
    inv8 = pow(8, -1, pm)
    w = 1
    total = 0
    for j in range(half + 1):
        if j:
            w = w * pow((2 * j - 1) * inv[j] % pm, 3, pm) % pm * inv8 % pm
        total = (total + w) % pm
    return Residue(total, p, m)


# ---------------------------------------------------------------------------
# verification records


def vanhamme_verify(p: int, m: int = 3) -> VerificationRecord:
    """The mod-p^3 congruence between the truncated quintic sum and the
    p-adic Gamma value (zero in the 3 mod 4 branch)."""
    return _record("vanhamme_a", p, lhs_vanhamme(p, m), rhs_vanhamme(p, m))


def vanhamme_b_verify(p: int, m: int = 4) -> VerificationRecord:
    """The conjectural mod-p^4 companion congruence; failures are findings
    to report, never asserted impossible."""
    return _record("vanhamme_b", p, lhs_vanhamme_b(p, m), rhs_vanhamme_b(p, m))


def lemma1_check(p: int) -> VerificationRecord:
    """Y vanishes mod p."""
    return _record("lemma1", p, y_quantity(p), Residue(0, p, 1))


def lemma2_check(p: int) -> VerificationRecord:
    """X vanishes mod p."""
    return _record("lemma2", p, x_quantity(p), Residue(0, p, 1))


def prop3_check(p: int) -> VerificationRecord:
    """Truncated quintic sum vs phi(-1) * p * Z mod p^3."""
    lhs = lhs_vanhamme(p, 3)
    rhs = Residue(legendre(-1, p) * p * z_quantity(p, 3).value, p, 3)
    return _record("prop3", p, lhs, rhs)


def theorem_os_check(p: int, tol: float = 1e-3) -> VerificationRecord:
    """p^2 * 3F2(1) against phi(-1) [p^2 X + p Y + Z] mod p^3.

    The p-power prefactors set the precision each reduced quantity is
    needed at: X mod p, Y mod p^2, Z mod p^3.
    """
    check_modulus(p, 3)
    f2 = gaussian_nFn_phi(p, 2, 1, tol)
    lhs = Residue(f2, p, 3)
    x1 = _xy_mod(p, p, True)
    y2 = _xy_mod(p, p * p, False)
    z3 = z_quantity(p, 3).value
    rhs = Residue(legendre(-1, p) * (p * p * x1 + p * y2 + z3), p, 3)
    return _record("thm_os", p, lhs, rhs)


def cor5_check(p: int, m: int = 3, tol: float = 1e-3) -> VerificationRecord:
    """p^3 * 3F2(1) = p * (p^2 * 3F2(1)) against the Gamma branch mod p^m."""
    lhs = Residue(p * gaussian_nFn_phi(p, 2, 1, tol), p, m)
    return _record("cor5", p, lhs, rhs_vanhamme(p, m))


# ---------------------------------------------------------------------------
# Pochhammer-pair congruences

POCH_CONGRUENCE_IDS = (
    "poch_shift_square",  # shifted binomial pair vs binom(-1/2,k)^2, mod p^2
    "poch_shift_linear",  # binom(-1/2,k)(-1)^k vs (k+1)_{(p-1)/2}/((p-1)/2)!, mod p
    "poch_conj_quartic",  # conjugate-paired ratio vs binom(-1/2,k)^4, mod p^4
    "poch_real_square",  # real-pair ratio vs binom(-1/2,k)^2, mod p^2
)


def poch_congruence_checks(p: int) -> list:
    """All four Pochhammer-pair congruences for 0 <= k <= (p-1)/2.

    Returns one record per (identity, k); every ratio in sight is a p-unit,
    so the residue reductions are well defined at the stated precisions.
    """
    m = (p - 1) // 2
    mfact = math.factorial(m)
    quarter = Fraction(p * p, 4)
    half = Fraction(1, 2)
    records = []
    bk = Fraction(1)  # binom(-1/2, k)
    shift_num = 1  # C(m+k, k) * C(m, k)
    conj_num = Fraction(1)  # prod ((r+1/2)^2 + p^2/4)((r+1/2)^2 - p^2/4)
    conj_den = Fraction(1)  # prod ((r+1)^2 + p^2/4)((r+1)^2 - p^2/4)
    real_num = Fraction(1)  # prod ((r+1/2)^2 - p^2/4)
    real_den = Fraction(1)  # prod ((r+1)^2 + p^2/4)
    for k in range(m + 1):
        if k:
            bk *= Fraction(-(2 * k - 1), 2 * k)
            shift_num = math.comb(m + k, k) * math.comb(m, k)
            r = k - 1
            plus = (r + half) ** 2 + quarter
            minus = (r + half) ** 2 - quarter
            dplus = (r + 1) ** 2 + quarter
            dminus = (r + 1) ** 2 - quarter
            conj_num *= plus * minus
            conj_den *= dplus * dminus
            real_num *= minus
            real_den *= dplus
        poch_tail = Fraction(
            math.prod(range(k + 1, k + m + 1)), mfact
        )
        sign = -1 if k % 2 else 1
        pairs = (
            ("poch_shift_square", 2, Fraction(shift_num), sign * bk * bk),
            ("poch_shift_linear", 1, sign * bk, poch_tail),
            ("poch_conj_quartic", 4, conj_num / conj_den, bk**4),
            ("poch_real_square", 2, real_num / real_den, bk * bk),
        )
        for name, mm, lhs_q, rhs_q in pairs:
            records.append(
                _record(
                    name,
                    p,
                    residue_from_rational(lhs_q, p, mm),
                    residue_from_rational(rhs_q, p, mm),
                )
            )
    return records


# ---------------------------------------------------------------------------
# the specialized well-poised transformation instance


def whipple_instance_terms(p: int):
    """Per-term values of both sides of the specialized transformation.

    The parameters come in complex-conjugate pairs (1/2 +- ip/2 and their
    lower partners 1 -+ ip/2) and in real mirror pairs (1/2 +- p/2 against
    1 -+ p/2); multiplying each pair together makes every term an exact
    rational.  Both sides terminate at k = (p-1)/2 because (1/2 - p/2)_k
    vanishes beyond that index.
    """
    m = (p - 1) // 2
    half = Fraction(1, 2)
    quarter_p2 = Fraction(p * p, 4)
    lhs_terms = []
    rhs_terms = []
    poch_half = Fraction(1)  # (1/2)_k
    ratio_54_14 = Fraction(1)  # (5/4)_k / (1/4)_k = 4k+1, kept as a product
    conj_cd = Fraction(1)  # (1/2+ip/2)_k (1/2-ip/2)_k
    conj_cd_low = Fraction(1)  # (1-ip/2)_k (1+ip/2)_k
    pair_ef = Fraction(1)  # (1/2+p/2)_k (1/2-p/2)_k
    pair_ef_low = Fraction(1)  # (1-p/2)_k (1+p/2)_k
    fact = 1
    sign = 1
    for k in range(m + 1):
        if k:
            r = k - 1
            poch_half *= half + r
            ratio_54_14 *= (Fraction(5, 4) + r) / (Fraction(1, 4) + r)
            conj_cd *= (r + half) ** 2 + quarter_p2
            conj_cd_low *= (r + 1) ** 2 + quarter_p2
            pair_ef *= (r + half) ** 2 - quarter_p2
            pair_ef_low *= (r + 1) ** 2 - quarter_p2
            fact *= k
            sign = -sign
        lhs_terms.append(
            sign * poch_half * ratio_54_14 * conj_cd * pair_ef
            / (conj_cd_low * pair_ef_low * fact)
        )
        rhs_terms.append(poch_half * pair_ef / (conj_cd_low * fact))
    return lhs_terms, rhs_terms


def whipple_instance_check(p: int) -> VerificationRecord:
    """Exact equality LHS = phi(-1) * p * RHS for the specialized instance.

    The pass flag is decided by exact rational equality, not a congruence;
    the record carries both sides reduced mod p^4 for reporting.
    """
    lhs_terms, rhs_terms = whipple_instance_terms(p)
    lhs = sum(lhs_terms)
    rhs = legendre(-1, p) * p * sum(rhs_terms)
    rec = VerificationRecord(
        "whipple_inst",
        p,
        residue_from_rational(lhs, p, 4),
        residue_from_rational(rhs, p, 4),
        lhs == rhs,
    )
    return rec
