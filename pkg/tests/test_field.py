from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from extbloch.field import (FieldError, NumberField, cos2pi_minpoly,
                            element_in_field, euler_phi, count_real_roots)


@pytest.fixture(scope="module")
def sqrt2():
    return NumberField([-2, 0, 1])


@pytest.fixture(scope="module")
def example_field():
    return NumberField([1, -2, 2, -1, 1])


def test_rationals_need_nonconstant_poly():
    with pytest.raises(FieldError):
        NumberField([1])


def test_repeated_roots_rejected():
    # (x - 1)^2
    with pytest.raises(FieldError):
        NumberField([1, -2, 1])


def test_signatures(sqrt2, example_field):
    assert NumberField([0, 1]).signature == (1, 0)
    assert sqrt2.signature == (2, 0)
    assert example_field.signature == (0, 2)


small_rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12)


@given(a=small_rationals, b=small_rationals, c=small_rationals)
@settings(max_examples=60, deadline=None)
def test_field_arithmetic_is_a_ring(a, b, c):
    nf = NumberField([-2, 0, 1])
    r = nf.element([a, b])
    s = nf.element([b, c])
    t = nf.element([c, a])
    assert r * (s + t) == r * s + r * t
    assert (r + s) * t == t * r + t * s
    assert r - r == nf.zero
    if not r.is_zero():
        assert r * r.inverse() == nf.one


def test_inverse_of_zero(sqrt2):
    with pytest.raises(FieldError):
        sqrt2.zero.inverse()


def test_min_poly_of_generator(example_field):
    assert example_field.gen.min_poly() == example_field.poly


def test_min_poly_of_rational(sqrt2):
    assert sqrt2.rational(Fraction(3, 2)).min_poly() == \
        (Fraction(-3, 2), Fraction(1))


def test_embeddings_evaluate_generator_to_root(example_field):
    for ctx in example_field.embeddings(40):
        val = ctx.evaluate(example_field.gen)
        assert abs(val - ctx.root()) < mp.mpf(10) ** -35


def test_embedding_respects_products(sqrt2):
    a = sqrt2.element([1, 2])
    b = sqrt2.element([-3, 1])
    with mp.workdps(45):
        for ctx in sqrt2.embeddings(40):
            lhs = ctx.evaluate(a * b)
            rhs = ctx.evaluate(a) * ctx.evaluate(b)
            assert abs(lhs - rhs) < mp.mpf(10) ** -35


def test_torsion_detection():
    assert NumberField([0, 1]).torsion[0] == 2
    assert NumberField([-2, 0, 1]).torsion[0] == 2
    m, w = NumberField([1, -2, 2, -1, 1]).torsion
    assert m == 6
    assert (w ** 6).is_one()
    assert not (w ** 3).is_one()
    assert not (w ** 2).is_one()


def test_cos2pi_minpoly_known_values():
    assert cos2pi_minpoly(1) == (Fraction(-2), Fraction(1))
    assert cos2pi_minpoly(2) == (Fraction(2), Fraction(1))
    assert cos2pi_minpoly(3) == (Fraction(1), Fraction(1))
    assert cos2pi_minpoly(4) == (Fraction(0), Fraction(1))
    assert cos2pi_minpoly(6) == (Fraction(-1), Fraction(1))
    # 2cos(2pi/5) = (sqrt(5) - 1)/2 has x^2 + x - 1
    assert cos2pi_minpoly(5) == (Fraction(-1), Fraction(1), Fraction(1))
    # 2cos(pi/4) = sqrt(2)
    assert cos2pi_minpoly(8) == (Fraction(-2), Fraction(0), Fraction(1))


@given(n=st.integers(min_value=1, max_value=60))
@settings(max_examples=40, deadline=None)
def test_cos2pi_minpoly_has_the_right_root(n):
    poly = cos2pi_minpoly(n)
    with mp.workdps(40):
        x = 2 * mp.cos(2 * mp.pi / n)
        acc = mp.mpf(0)
        for c in reversed(poly):
            acc = acc * x + mp.mpf(c.numerator) / mp.mpf(c.denominator)
        assert abs(acc) < mp.mpf(10) ** -30
    assert len(poly) - 1 == max(euler_phi(n) // 2, 1)


def test_euler_phi_small():
    assert [euler_phi(n) for n in range(1, 13)] == \
        [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_count_real_roots():
    # x^3 - 2x: three real roots
    assert count_real_roots((Fraction(0), Fraction(-2),
                             Fraction(0), Fraction(1))) == 3
    # x^2 + 1: none
    assert count_real_roots((Fraction(1), Fraction(0), Fraction(1))) == 0


def test_element_in_field_finds_sqrt2(sqrt2):
    with mp.workdps(48):
        approx = mp.sqrt(2)
    found = element_in_field([-2, 0, 1], approx, sqrt2)
    assert found is not None
    assert found * found == sqrt2.rational(2)


def test_element_in_field_rejects_sqrt3(sqrt2):
    with mp.workdps(48):
        approx = mp.sqrt(3)
    assert element_in_field([-3, 0, 1], approx, sqrt2) is None


def test_substitute_automorphism(sqrt2):
    # x -> -x is the nontrivial automorphism of Q(sqrt 2)
    image = sqrt2.element([0, -1])
    a = sqrt2.element([3, 5])
    b = sqrt2.element([-1, 2])
    assert (a * b).substitute(image) == a.substitute(image) * b.substitute(image)
    assert a.substitute(image).substitute(image) == a
