import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import eis, eis_nonzero
from eisring.eisenstein import (
    BETA,
    ONE,
    RHO,
    UNITS,
    ZERO,
    Eisenstein,
    PrimeKind,
    canonical_associate,
    classify_prime,
    euclid_divmod,
    factorize,
    gcd,
    ideal_member,
    is_primitive,
    primitivity_structure_check,
    round_half_down,
    split_rational_prime,
)
from eisring.errors import BothZero, UnitOrZero, ZeroIdealGenerator, ZeroInput, ZeroModulus

E = Eisenstein


class TestArithmetic:
    def test_product_examples(self):
        assert E(2, 1) * E(1, -1) == E(3, 0)
        assert E(1, -2) * E(2, 3) == E(8, 5)

    def test_rho_is_a_cube_root_of_unity(self):
        assert RHO * RHO == E(-1, -1)
        assert RHO * RHO * RHO == ONE

    def test_int_coercion(self):
        assert 2 * RHO == E(0, 2)
        assert E(1, 1) + 1 == E(2, 1)
        assert 1 - RHO == BETA

    @given(eis())
    def test_additive_inverse(self, x):
        assert x + (-x) == ZERO

    @given(eis(), eis(), eis())
    def test_ring_identities(self, x, y, z):
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)


class TestConjugateAndNorm:
    def test_conjugate_examples(self):
        assert E(2, 3).conjugate() == E(-1, -3)
        assert E(5, 0).conjugate() == E(5, 0)
        assert E(3, 4).conjugate().norm() == E(3, 4).norm() == 13

    @given(eis())
    def test_conjugate_involution(self, x):
        assert x.conjugate().conjugate() == x

    def test_norm_examples(self):
        assert E(2, 3).norm() == 7
        assert E(-6, 5).norm() == 91
        assert ZERO.norm() == 0

    @given(eis(), eis())
    def test_norm_multiplicative(self, x, y):
        assert (x * y).norm() == x.norm() * y.norm()

    @given(eis())
    def test_norm_positive_definite(self, x):
        assert x.norm() >= 0
        assert (x.norm() == 0) == x.is_zero()


class TestAssociates:
    def test_units(self):
        assert set(UNITS) == {E(1, 0), E(-1, 0), E(0, 1), E(0, -1), E(-1, -1), E(1, 1)}
        assert all(u.is_unit() for u in UNITS)

    def test_associates_of_zero(self):
        assert ZERO.associates() == (ZERO,) * 6

    def test_associates_example(self):
        assocs = E(2, 3).associates()
        assert E(3, 1) in assocs
        assert E(1, -2) in assocs
        assert len(set(assocs)) == 6

    def test_canonical_examples(self):
        assert canonical_associate(E(2, 3)) == E(3, 1)
        assert canonical_associate(E(-5, 0)) == E(5, 0)
        assert canonical_associate(E(4, 4)) == E(4, 0)
        assert canonical_associate(ZERO) == ZERO

    @given(eis_nonzero())
    def test_canonical_unique_and_idempotent(self, x):
        canon = canonical_associate(x)
        assert canon.a > 0 and 0 <= canon.b < canon.a
        assert x.associates().count(canon) == 1
        assert canonical_associate(canon) == canon


class TestDivision:
    def test_rounding_rule_halves_go_down(self):
        assert round_half_down(1, 2) == 0
        assert round_half_down(-1, 2) == -1
        assert round_half_down(-3, 2) == -2
        assert round_half_down(3, 2) == 1
        assert round_half_down(4, 7) == 1

    def test_worked_example_rational_modulus(self):
        assert euclid_divmod(E(10, 0), E(-6, 5)) == (E(-1, 0), E(4, 5))

    def test_worked_example_composite_modulus(self):
        assert euclid_divmod(E(10, 1), E(4, 6)) == (E(-1, -2), E(2, 3))

    def test_zero_dividend(self):
        assert euclid_divmod(ZERO, E(4, 6)) == (ZERO, ZERO)

    def test_zero_modulus_rejected(self):
        with pytest.raises(ZeroModulus):
            euclid_divmod(E(1, 0), ZERO)

    @given(eis(), eis_nonzero())
    def test_reconstruction_and_remainder_bound(self, x, y):
        q, r = euclid_divmod(x, y)
        assert q * y + r == x
        assert r.norm() < y.norm()

    @given(eis(), eis_nonzero())
    def test_remainder_never_heavier_than_input(self, x, y):
        # the remainder is the smallest representative of x's class
        _, r = euclid_divmod(x, y)
        assert r.norm() <= x.norm()


class TestGcd:
    def test_gcd_with_zero(self):
        assert gcd(E(8, 5), ZERO) == E(8, 5)
        assert gcd(ZERO, E(-6, 5)) == canonical_associate(E(-6, 5))

    def test_gcd_examples(self):
        assert gcd(E(3, 0), E(1, -1)) == canonical_associate(BETA) == E(2, 1)
        assert gcd(E(8, 5), E(2, 3)) == canonical_associate(E(2, 3)) == E(3, 1)

    def test_both_zero_rejected(self):
        with pytest.raises(BothZero):
            gcd(ZERO, ZERO)

    @given(eis(-40, 40), eis_nonzero(-40, 40))
    def test_gcd_divides_both(self, x, y):
        g = gcd(x, y)
        assert euclid_divmod(y, g)[1].is_zero()
        if not x.is_zero():
            assert euclid_divmod(x, g)[1].is_zero()

    @given(eis_nonzero(-10, 10), eis(-10, 10), eis(-10, 10))
    def test_common_divisor_divides_gcd(self, d, u, v):
        x, y = d * u, d * v
        if x.is_zero() and y.is_zero():
            return
        assert euclid_divmod(gcd(x, y), d)[1].is_zero()


class TestPrimitivity:
    def test_examples(self):
        assert is_primitive(E(-6, 5))
        assert not is_primitive(E(6, 12))
        assert is_primitive(ONE)

    def test_zero_rejected(self):
        with pytest.raises(ZeroInput):
            is_primitive(ZERO)


class TestClassifyPrime:
    def test_ramified(self):
        assert classify_prime(BETA).kind == "type1"

    def test_split(self):
        kind = classify_prime(E(2, 3))
        assert kind.kind == "type2" and kind.q == 7
        assert kind.is_prime

    def test_inert(self):
        assert classify_prime(E(2, 0)) == classify_prime(E(2, 0)).__class__("type3", p=2)
        assert classify_prime(E(5, 0)).p == 5

    def test_composites(self):
        assert classify_prime(E(3, 0)).kind == "not_prime"
        assert classify_prime(E(8, 5)).kind == "not_prime"
        assert not classify_prime(E(4, 6)).is_prime

    def test_units_and_zero_rejected(self):
        for bad in (ZERO, ONE, RHO, -RHO):
            with pytest.raises(UnitOrZero):
                classify_prime(bad)


class TestFactorize:
    def test_three_ramifies(self):
        fact = factorize(E(3, 0))
        assert fact.factors == ((E(2, 1), 2),)
        assert fact.value() == E(3, 0)

    def test_split_product(self):
        # 8+5rho = (1-2rho)(2+3rho) and both factors are associates of 3+rho
        fact = factorize(E(8, 5))
        assert fact.unit == ONE
        assert fact.factors == ((E(3, 1), 2),)

    def test_unit_input(self):
        fact = factorize(ONE)
        assert fact.unit == ONE and fact.factors == ()

    def test_zero_rejected(self):
        with pytest.raises(ZeroInput):
            factorize(ZERO)

    def test_split_prime_search(self):
        for q in (7, 13, 19, 31, 37, 61, 97):
            psi = split_rational_prime(q)
            assert psi.norm() == q
            assert psi == canonical_associate(psi)

    @given(eis_nonzero(-25, 25))
    def test_reconstruction(self, x):
        fact = factorize(x)
        assert fact.value() == x
        assert fact.unit.is_unit()
        primes = [g for g, _ in fact.factors]
        assert len(set(primes)) == len(primes)
        for g in primes:
            assert g == canonical_associate(g)
            assert classify_prime(g).is_prime


class TestStructureCheck:
    def test_examples(self):
        assert primitivity_structure_check(E(-6, 5))
        assert not primitivity_structure_check(E(9, 0))
        assert not primitivity_structure_check(E(4, 6))

    @given(eis_nonzero(-15, 15))
    def test_agrees_with_gcd_form(self, x):
        assert primitivity_structure_check(x) == is_primitive(x)


class TestEqualNormClasses:
    def test_associates_and_conjugates_share_norm(self):
        x = E(7, 3)
        for y in x.associates() + x.conjugate().associates():
            assert y.norm() == x.norm()

    def test_norm_91_splits_into_two_orbit_pairs(self):
        # equal norm does not force an associate relation once two split
        # primes are in play; 91 = 7 * 13 is the smallest such norm
        a, b = E(5, 11), E(-1, 9)
        assert a.norm() == b.norm() == 91
        assert b not in a.associates() + a.conjugate().associates()


class TestIdealMember:
    def test_examples(self):
        assert ideal_member(E(6, -6), 6, E(1, 2))
        assert ideal_member(ZERO, 3, E(2, 1))
        assert not ideal_member(ONE, 1, E(2, 3))

    def test_zero_generator_rejected(self):
        with pytest.raises(ZeroIdealGenerator):
            ideal_member(ONE, 0, E(2, 3))
        with pytest.raises(ZeroIdealGenerator):
            ideal_member(ONE, 3, ZERO)

    @given(eis(-60, 60), st.integers(-5, 5).filter(bool), eis_nonzero(-8, 8))
    def test_agrees_with_remainder(self, x, k, g):
        assert ideal_member(x, k, g) == euclid_divmod(x, g * k)[1].is_zero()
