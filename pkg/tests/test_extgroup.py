import warnings

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from extbloch.field import NumberField
from extbloch.extgroup import (BranchInvalid, ExtGroupError, MultBasis,
                               NotInSubgroup, SymbolicBasis,
                               UnsaturatedBasis, WedgeElement, cover_to_C)


@pytest.fixture(scope="module")
def rationals():
    return NumberField([0, 1])


@pytest.fixture(scope="module")
def basis23(rationals):
    return MultBasis(rationals, [rationals.rational(2),
                                 rationals.rational(3)], saturated=True)


def test_element_arithmetic(basis23):
    a = basis23.element(1, {0: 2})
    b = basis23.element(-3, {0: 1, 1: -1})
    assert a + b == basis23.element(-2, {0: 3, 1: -1})
    assert a - a == basis23.element(0)
    assert 2 * a == basis23.element(2, {0: 4})
    assert (-a).coord(0) == -2
    assert a.coord(-1) == 1
    assert (a + b).coords() == {-1: -2, 0: 3, 1: -1}


def test_iota_and_half(basis23):
    assert basis23.iota() == basis23.element(2)
    assert basis23.iota(3) == basis23.element(6)
    assert basis23.half() + basis23.half() == basis23.iota()


def test_pi_projection(basis23, rationals):
    e = basis23.element(1, {0: 2, 1: -1})
    from fractions import Fraction
    assert e.pi() == rationals.rational(Fraction(-4, 3))
    assert basis23.iota().pi().is_one()


@given(a=st.integers(-8, 8), b=st.integers(-8, 8),
       sign=st.sampled_from([1, -1]))
@settings(max_examples=50, deadline=None)
def test_log_lift_roundtrip(a, b, sign):
    from fractions import Fraction
    rationals = NumberField([0, 1])
    basis = MultBasis(rationals, [rationals.rational(2),
                                  rationals.rational(3)], saturated=True)
    z = rationals.rational(sign * Fraction(2) ** a * Fraction(3) ** b)
    e = basis.log_lift(z)
    assert e.pi() == z
    assert e.coord(0) == a and e.coord(1) == b
    assert e.k == (0 if sign == 1 else 1)


def test_log_lift_rejects_outsiders(basis23, rationals):
    with pytest.raises(NotInSubgroup):
        basis23.log_lift(rationals.rational(5))
    with pytest.raises(NotInSubgroup):
        basis23.log_lift(rationals.zero)


def test_dependent_generators_rejected():
    sqrt2 = NumberField([-2, 0, 1])
    r = sqrt2.element([0, 1])
    with pytest.raises(ExtGroupError):
        MultBasis(sqrt2, [r, r * r * r])  # sqrt2 and 2*sqrt2... dependent
    rationals = NumberField([0, 1])
    with pytest.raises(ExtGroupError):
        MultBasis(rationals, [rationals.rational(2), rationals.rational(4)])


def test_wedge_decision(basis23):
    two = basis23.element(0, {0: 1})
    three = basis23.element(0, {1: 1})
    # antisymmetry: e /\ f + f /\ e = 0
    assert basis23.wedge_is_zero([(1, two, three), (1, three, two)])
    # diagonal with even coefficient vanishes, odd does not
    assert basis23.wedge_is_zero([(2, two, two)])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert not basis23.wedge_is_zero([(1, two, two)])
        assert not basis23.wedge_is_zero([(1, two, three)])


def test_wedge_warns_on_unsaturated_basis(rationals):
    basis = MultBasis(rationals, [rationals.rational(2)])
    e = basis.element(0, {0: 1})
    with pytest.warns(UnsaturatedBasis):
        WedgeElement(basis, [(1, e, e)]).is_zero()


def test_fstar_wedge_uses_torsion_order(basis23):
    # in F* the torsion generator has order 2, so mixed sums count mod 2
    t = basis23.element(1)
    g = basis23.element(0, {0: 1})
    assert basis23.fstar_wedge_is_zero([(2, t, g)])
    assert not basis23.fstar_wedge_is_zero([(1, t, g)])
    # over E the same combination is nonzero
    assert not basis23.wedge_is_zero([(2, t, g)])


def test_symbolic_basis_dedupes_values(rationals):
    basis = SymbolicBasis(rationals)
    a = basis.symbol(rationals.rational(5))
    b = basis.symbol(rationals.rational(5))
    assert a == b
    assert basis.symbol(rationals.one).is_zero()
    assert basis.symbol(rationals.rational(-1)) == basis.element(1)


def test_symbol_signed_ties_negatives(rationals):
    basis = SymbolicBasis(rationals)
    a = basis.symbol_signed(rationals.rational(7))
    b = basis.symbol_signed(rationals.rational(-7))
    assert b - a == basis.element(1)
    assert b.pi() == rationals.rational(-7)


def test_symbolic_pi(rationals):
    basis = SymbolicBasis(rationals)
    a = basis.symbol_signed(rationals.rational(-6))
    assert a.pi() == rationals.rational(-6)


def test_cover_lift_exponentiates(basis23, rationals):
    from fractions import Fraction
    ctx = rationals.embeddings(40)[0]
    lift = cover_to_C(basis23, ctx)
    z = rationals.rational(Fraction(-9, 8))
    e = basis23.log_lift(z)
    with mp.workdps(45):
        val = lift.lift(e)
        assert abs(mp.exp(val) - ctx.evaluate(z)) < mp.mpf(10) ** -35
    assert lift.k_unit % basis23.m == 1 % basis23.m or \
        lift.k_unit % basis23.m == (basis23.m - 1)


def test_cover_branch_validation(basis23, rationals):
    ctx = rationals.embeddings(40)[0]
    with mp.workdps(45):
        # -i*pi is also a logarithm of -1 and stays a covering
        lift = cover_to_C(basis23, ctx, branch=-1j * mp.pi)
        assert lift.k_unit == -1
        with pytest.raises(BranchInvalid):
            cover_to_C(basis23, ctx, branch=mp.mpc(0.5))


def test_explicit_torsion_generator():
    f = NumberField([1, -2, 2, -1, 1])
    x = f.element([0, 1])
    w = x ** 3 + x
    basis = MultBasis(f, [], saturated=True, torsion_gen=w)
    assert basis.element(1).pi() == w
    with pytest.raises(ExtGroupError):
        MultBasis(f, [], torsion_gen=w * w)  # order 3, not 6
