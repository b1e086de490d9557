"""Core congruence machinery: truncated sums, X/Y/Z, decomposition checks,
the specialized well-poised instance, and the Pochhammer-pair congruences."""

import math
from fractions import Fraction

import pytest

from supercong.classical_hg import binom_half
from supercong.exactnum import residue_from_rational
from supercong.gaussian_hg import legendre
from supercong.supercongruence import (
    HarmonicCache,
    STATEMENTS,
    cor5_check,
    harmonic,
    lemma1_check,
    lemma2_check,
    lhs_vanhamme,
    lhs_vanhamme_b,
    poch_congruence_checks,
    prop3_check,
    rhs_vanhamme_b,
    theorem_os_check,
    vanhamme_b_verify,
    vanhamme_verify,
    whipple_instance_check,
    whipple_instance_terms,
    x_quantity,
    y_quantity,
    z_quantity,
    _x_sum,
    _y_sum,
)

PRIMES_TO_50 = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def test_harmonic_examples():
    assert harmonic(1, 0) == 0
    assert harmonic(1, 3) == Fraction(11, 6)
    assert harmonic(2, 2) == Fraction(5, 4)


def test_harmonic_cache_invariants():
    for order in (1, 2):
        cache = HarmonicCache.build(order, 40)
        assert cache.values[0] == 0
        for n in range(1, 41):
            assert cache.values[n] - cache.values[n - 1] == Fraction(1, n**order)
            assert cache.values[n] == harmonic(order, n)


def test_lhs_vanhamme_examples():
    # p = 3: 1 - 5/32 = 27/32, with 3-adic valuation 3
    assert sum((4 * k + 1) * binom_half(k) ** 5 for k in range(2)) == Fraction(27, 32)
    assert lhs_vanhamme(3, 3).value == 0
    # p = 5: exact sum 29835/32768
    assert sum((4 * k + 1) * binom_half(k) ** 5 for k in range(3)) == Fraction(29835, 32768)
    assert lhs_vanhamme(5, 3).value == 95
    assert lhs_vanhamme(7, 3).value == 0


def test_lhs_vanhamme_b_examples():
    # p = 3: exact sum 1 + 7/32 = 39/32
    exact = sum(
        Fraction((-1) ** k * (6 * k + 1), 4**k) * binom_half(k) ** 3 for k in range(2)
    )
    assert exact == Fraction(39, 32)
    assert lhs_vanhamme_b(3).value == 39 * pow(32, -1, 81) % 81 == 24
    # summand denominators stay p-units through k = (p-1)/2
    for p in (3, 5, 13):
        k = (p - 1) // 2
        term = Fraction((-1) ** k * (6 * k + 1), 4**k) * binom_half(k) ** 3
        assert term.denominator % p != 0


def test_rhs_vanhamme_b_and_the_p3_finding():
    # the mod-p^4 companion congruence holds at 5 but genuinely fails at 3,
    # where the two sides agree only mod p^3
    assert rhs_vanhamme_b(3).value == 78
    rec3 = vanhamme_b_verify(3)
    assert not rec3.passed
    assert (rec3.lhs.value - rec3.rhs.value) % 27 == 0
    rec5 = vanhamme_b_verify(5)
    assert rec5.passed
    assert rec5.lhs.value == rec5.rhs.value == 5


def test_gamma_half_square_observed_sign():
    # the implementation never assumes a sign for gamma_p(1/2)^2; this pins
    # the computed one for the record
    from supercong.padic_gamma import gamma_p_rational

    for p in (3, 5, 7, 13, 29):
        g = gamma_p_rational(Fraction(1, 2), p, 3)
        assert (g * g).value == (-legendre(-1, p)) % p**3


def test_rhs_vanhamme_b_agrees_with_full_precision_gamma():
    # the shipped path runs gamma at precision m-1; the leading p factor
    # makes that exact, which this full-precision oracle pins down
    for p in (3, 5, 13):
        pm = p**4
        n = (pm + 1) // 2  # representative of 1/2 mod p^4
        acc = 1
        for j in range(1, n):
            if j % p:
                acc = acc * j % pm
        g = (-acc) % pm if n % 2 else acc
        expect = (-p) * pow(g * g % pm, -1, pm) % pm
        assert rhs_vanhamme_b(p, 4).value == expect


def test_x_quantity():
    # hand value at p = 3: j=1 contributes (1/8)(3/2 + 9/8 - 3/8) = 9/32
    assert _x_sum(3) == Fraction(9, 32)
    assert x_quantity(3).value == 0
    assert x_quantity(5).value == 0
    assert x_quantity(5, method="exact").value == 0
    # the j = 0 bracket vanishes identically
    assert _x_sum(3) == Fraction(9, 32)  # no j=0 contribution


def test_y_quantity():
    # hand value at p = 3: 1 + (1/8)(1 + 3/2 - 9/4) = 33/32
    assert _y_sum(3) == Fraction(33, 32)
    assert y_quantity(3).value == 0
    assert y_quantity(7).value == 0
    assert y_quantity(7, method="exact").value == 0


def test_telescoped_middle_term():
    for p in (5, 7, 13):
        m = (p - 1) // 2
        h1 = HarmonicCache.build(1, p - 1).values
        for j in range(m + 1):
            expect = sum(Fraction(4 * p, p * p - (2 * r + 1) ** 2) for r in range(j))
            assert h1[m + j] - h1[m - j] == expect


def test_z_quantity():
    assert z_quantity(3).value == residue_from_rational(Fraction(9, 8), 3, 3).value == 18
    # equivalence with the alternating binom(-1/2,j)^3 form, exactly
    for p in PRIMES_TO_50:
        m = (p - 1) // 2
        lhs = sum(Fraction(math.comb(2 * j, j) ** 3, 64**j) for j in range(m + 1))
        rhs = sum((-1) ** j * binom_half(j) ** 3 for j in range(m + 1))
        assert lhs == rhs
        assert z_quantity(p).value == residue_from_rational(lhs, p, 3).value
    assert z_quantity(5).value == residue_from_rational(
        sum(Fraction(math.comb(2 * j, j) ** 3, 64**j) for j in range(3)), 5, 3
    ).value


def test_prop3_examples():
    rec3 = prop3_check(3)
    assert rec3.passed and rec3.lhs.value == 0
    # rhs oracle at p = 3: (-1) * 3 * 9/8 = -27/8, which is 0 mod 27
    assert residue_from_rational(Fraction(-27, 8), 3, 3).value == 0
    rec5 = prop3_check(5)
    assert rec5.passed and rec5.lhs.value == rec5.rhs.value == 95


def test_theorem_os_examples():
    for p in (3, 5, 7, 13):
        rec = theorem_os_check(p)
        assert rec.passed, (p, rec)
        assert rec.modulus == p**3


def test_vanhamme_verify_examples():
    rec3 = vanhamme_verify(3)
    assert rec3.passed and rec3.lhs.value == 0 and rec3.modulus == 27
    rec5 = vanhamme_verify(5)
    assert rec5.passed and rec5.lhs.value == 95 and rec5.modulus == 125
    for p in PRIMES_TO_50:
        rec = vanhamme_verify(p)
        assert rec.passed
        assert (rec.rhs.value == 0) == (p % 4 == 3)


def test_cor5_record():
    for p in (3, 5, 13):
        rec = cor5_check(p)
        assert rec.passed and rec.statement == "cor5"


def test_xyz_result_bundle():
    from supercong.supercongruence import XYZResult, xyz_quantities

    bundle = xyz_quantities(7)
    assert bundle.p == 7
    assert bundle.x_mod_p.value == bundle.y_mod_p.value == 0
    assert bundle.z_mod_p3 == z_quantity(7)
    with pytest.raises(ValueError):
        XYZResult(x_quantity(3), y_quantity(5), z_quantity(5))
    with pytest.raises(ValueError):
        XYZResult(x_quantity(5), y_quantity(5), z_quantity(5, 2))


def test_record_invariants():
    for p in (3, 5):
        for rec in (vanhamme_verify(p), prop3_check(p), lemma1_check(p), lemma2_check(p)):
            assert rec.passed == (rec.lhs == rec.rhs)
            assert (rec.lhs.p, rec.lhs.m) == (rec.rhs.p, rec.rhs.m)
            assert rec.statement in STATEMENTS


def test_poch_congruences_small():
    for p in (3, 5, 7, 13):
        records = poch_congruence_checks(p)
        assert len(records) == 4 * ((p - 1) // 2 + 1)
        assert all(rec.passed for rec in records)
    # k = 0 rows are all 1 = 1
    for rec in poch_congruence_checks(5)[:4]:
        assert rec.lhs.value == 1 and rec.rhs.value == 1


def test_poch_congruence_shift_square_spot_value():
    # p = 5, k = 2: C(4,2) C(2,2) = 6 against (3/8)^2 mod 25 - both reduce to 6
    lhs = residue_from_rational(Fraction(math.comb(4, 2) * math.comb(2, 2)), 5, 2)
    rhs = residue_from_rational(binom_half(2) ** 2, 5, 2)
    assert lhs.value == rhs.value == 6


def test_whipple_instance_small():
    for p in (3, 5, 7, 11):
        rec = whipple_instance_check(p)
        assert rec.passed
    # p = 3 is a two-term sum on each side; check the exact sums directly
    lhs_terms, rhs_terms = whipple_instance_terms(3)
    assert len(lhs_terms) == len(rhs_terms) == 2
    assert sum(lhs_terms) == legendre(-1, 3) * 3 * sum(rhs_terms)


def test_whipple_instance_matches_quintic_sum_termwise():
    # each term of the paired 6F5 side reduces to (4k+1) binom(-1/2,k)^5 mod p^4
    for p in (3, 5, 7, 13):
        lhs_terms, _ = whipple_instance_terms(p)
        p4 = p**4
        for k, term in enumerate(lhs_terms):
            target = (4 * k + 1) * binom_half(k) ** 5
            diff = term - target
            assert residue_from_rational(diff, p, 4).value == 0


def test_sine_parity_matches_quadratic_character():
    for p in PRIMES_TO_50:
        assert (-1) ** ((p - 1) // 2) == legendre(-1, p)


def test_exact_vs_modular_accumulation_small():
    for p in (3, 5, 7, 11, 13):
        assert lhs_vanhamme(p, 3, "exact") == lhs_vanhamme(p, 3, "modular")
        assert lhs_vanhamme_b(p, 4, "exact") == lhs_vanhamme_b(p, 4, "modular")
        assert z_quantity(p, 3, "exact") == z_quantity(p, 3, "modular")
        assert x_quantity(p, "exact") == x_quantity(p, "modular")
        assert y_quantity(p, "exact") == y_quantity(p, "modular")


def test_exact_vs_modular_spot_large():
    # spot-check the fast path against the exact one well past the small range
    for p in (97, 199):
        assert x_quantity(p, "exact") == x_quantity(p, "modular")
        assert y_quantity(p, "exact") == y_quantity(p, "modular")
        assert lhs_vanhamme(p, 3, "exact") == lhs_vanhamme(p, 3, "modular")
    assert z_quantity(499, 3, "exact") == z_quantity(499, 3, "modular")
    assert lhs_vanhamme_b(499, 4, "exact") == lhs_vanhamme_b(499, 4, "modular")


def test_y_mod_p_squared_agrees_with_exact():
    # theorem_os_check consumes Y at precision p^2; validate that path
    from supercong.supercongruence import _xy_mod

    for p in (3, 5, 7, 13, 29):
        exact = _y_sum(p)
        pm = p * p
        expect = exact.numerator * pow(exact.denominator, -1, pm) % pm
        assert _xy_mod(p, pm, False) == expect
        exact_x = _x_sum(p)
        expect_x = exact_x.numerator * pow(exact_x.denominator, -1, p) % p
        assert _xy_mod(p, p, True) == expect_x


def test_method_validation():
    with pytest.raises(ValueError):
        lhs_vanhamme(5, 3, "fast")


def test_x_sum_random_p_integrality():
    # the exact reduced forms are p-integral before reduction
    from supercong.exactnum import p_valuation

    for p in (3, 5, 7, 13, 31):
        assert p_valuation(_x_sum(p), p) >= 1
        assert p_valuation(_y_sum(p), p) >= 1
