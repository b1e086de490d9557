"""Classical hypergeometric machinery: exact Pochhammer/binomial identities,
terminating sums, the well-poised transformation, and float series."""

import math
import random
from fractions import Fraction

import pytest

from supercong.classical_hg import (
    HypergeomSpec,
    LowerParamPole,
    ParameterPole,
    PoleAtNonpositiveInteger,
    binom_half,
    central_binom_identity_check,
    entry20_partial_sum,
    entry20_target,
    gamma_limit_approx,
    hypergeom_terminating,
    pochhammer,
    ramanujan_partial_sum,
    ramanujan_target,
    reflection_check,
    whipple_check,
)


def test_pochhammer_examples():
    rng = random.Random(3)
    for _ in range(20):
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        assert pochhammer(a, 0) == 1
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    for k in range(11):
        assert pochhammer(Fraction(5, 4), k) / pochhammer(Fraction(1, 4), k) == 4 * k + 1


def test_pochhammer_recurrence():
    rng = random.Random(4)
    for _ in range(200):
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        n = rng.randint(0, 12)
        assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)


def test_binom_half_examples():
    assert binom_half(0) == 1
    assert binom_half(1) == Fraction(-1, 2)
    assert binom_half(2) == Fraction(3, 8)  # (-1/2)(-3/2)/2!


def test_binom_half_pochhammer_form():
    for k in range(31):
        assert binom_half(k) == (-1) ** k * pochhammer(Fraction(1, 2), k) / math.factorial(k)


def test_central_binom_identity():
    assert central_binom_identity_check(0)
    assert math.comb(4, 2) == 16 * Fraction(3, 8)
    assert central_binom_identity_check(2)
    assert all(central_binom_identity_check(j) for j in range(1, 51))


def test_hypergeom_terminating_zero_upper():
    rng = random.Random(6)
    for _ in range(20):
        upper = (Fraction(0), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        lower = (Fraction(rng.randint(1, 9), rng.randint(1, 5)),)
        z = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        assert hypergeom_terminating(HypergeomSpec(upper, lower, z)) == 1


def test_hypergeom_terminating_two_terms():
    rng = random.Random(7)
    for _ in range(50):
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        c = Fraction(rng.randint(1, 9), rng.randint(1, 7))
        z = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        got = hypergeom_terminating(HypergeomSpec((Fraction(-1), b), (c,), z))
        assert got == 1 - b * z / c


def test_hypergeom_terminating_pole_detection():
    with pytest.raises(LowerParamPole):
        hypergeom_terminating(
            HypergeomSpec((Fraction(-3), Fraction(1)), (Fraction(-1),), Fraction(1))
        )
    # a pole past the termination index is harmless
    value = hypergeom_terminating(
        HypergeomSpec((Fraction(-1), Fraction(1)), (Fraction(-5),), Fraction(1))
    )
    assert value == 1 - Fraction(1, -5)
    with pytest.raises(ValueError):
        hypergeom_terminating(HypergeomSpec((Fraction(1, 2),), (), Fraction(1)))


def test_whipple_example():
    assert whipple_check(1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), 2)


def test_whipple_prefactor_pole():
    # e = 1 + a makes (1+a-e)_m vanish
    with pytest.raises(ParameterPole):
        whipple_check(1, Fraction(1, 2), Fraction(1, 3), 2, 2)


def _whipple_pole(a, c, d, e, m):
    for b in (a / 2, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a + m):
        if b.denominator == 1 and 0 >= b > -m:
            return True
    for g in (1 + a, 1 + a - e + m):
        if g.denominator == 1 and g <= 0:
            return True
    return False


def _random_whipple_tuples(seed, count, max_abs=12, max_m=8):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        a, c, d, e = (
            Fraction(rng.randint(-max_abs, max_abs), rng.randint(1, max_abs))
            for _ in range(4)
        )
        m = rng.randint(1, max_m)
        if _whipple_pole(a, c, d, e, m):
            continue
        found.append((a, c, d, e, m))
    return found


def test_whipple_random_sample():
    for a, c, d, e, m in _random_whipple_tuples(20250810, 40):
        assert whipple_check(a, c, d, e, m)


def test_whipple_c_d_symmetry():
    for a, c, d, e, m in _random_whipple_tuples(99, 15):
        assert whipple_check(a, c, d, e, m) == whipple_check(a, d, c, e, m)


def test_ramanujan_partial_sum_examples():
    assert ramanujan_partial_sum(0) == 1.0
    assert ramanujan_partial_sum(1) == float(Fraction(27, 32))  # 1 - 5/32
    assert ramanujan_partial_sum(1) == 0.84375


def test_ramanujan_terms_alternate_and_decay():
    previous_sum = ramanujan_partial_sum(1)
    previous_gap = None
    for n in range(2, 60):
        current = ramanujan_partial_sum(n)
        gap = current - previous_sum
        assert gap * (-1) ** n > 0  # terms alternate in sign
        if previous_gap is not None:
            assert abs(gap) < previous_gap
        previous_gap = abs(gap)
        previous_sum = current


def test_entry20_partial_sum_examples():
    assert entry20_partial_sum(0) == 1.0
    assert entry20_partial_sum(1) == 1.21875  # 1 + 7/32
    assert abs(entry20_partial_sum(60) - entry20_target()) < 1e-12


def test_targets():
    assert abs(ramanujan_target() - 2 / math.gamma(0.75) ** 4) == 0
    assert abs(entry20_target() - 4 / math.pi) == 0


def test_gamma_limit_examples():
    for k in (1, 10, 1000):
        assert gamma_limit_approx(1, k) == 1.0
    assert abs(gamma_limit_approx(2, 1000) - 1.0) < 1e-2
    assert abs(gamma_limit_approx(Fraction(3, 4), 10**6) - 1.2254) < 1e-3
    with pytest.raises(PoleAtNonpositiveInteger):
        gamma_limit_approx(0, 10)
    with pytest.raises(PoleAtNonpositiveInteger):
        gamma_limit_approx(-3, 10)


def test_reflection_examples():
    assert reflection_check(0.5)
    assert reflection_check(0.25)
    assert reflection_check(-0.3)
    with pytest.raises(ValueError):
        reflection_check(2.0)
