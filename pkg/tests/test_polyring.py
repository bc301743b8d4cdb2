"""Arithmetic-layer unit and property tests."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macpoly.polyring import (
    DimensionError,
    EvaluationError,
    Monomial,
    MPoly,
    NonPolynomialError,
    QtFactor,
    QtRational,
    divmod_poly,
    exact_div,
    gaussian_binomial,
    one_minus_qt,
    pochhammer_tt,
    t_multinomial,
)


def x(n, i):
    return MPoly.monomial(n, x=tuple(1 if j == i - 1 else 0 for j in range(n)))


def qpoly(n=0):
    return MPoly.monomial(n, q=1)


def tpoly(n=0):
    return MPoly.monomial(n, t=1)


# -- add / mul examples ---------------------------------------------------


def test_add_additive_inverse():
    p = x(1, 1)
    assert (p + (-p)).is_zero()


def test_add_disjoint_supports():
    p = MPoly.one(0) + qpoly()
    r = tpoly()
    total = p + r
    assert total == MPoly(0, {
        Monomial((), 0, 0): 1,
        Monomial((), 1, 0): 1,
        Monomial((), 0, 1): 1,
    })


def test_add_coefficient_doubling():
    p = MPoly.monomial(1, x=(1,), q=1)
    assert p + p == MPoly.monomial(1, x=(1,), q=1, coeff=2)


def test_mul_difference_of_squares():
    assert (MPoly.one(0) - tpoly()) * (MPoly.one(0) + tpoly()) == MPoly.one(0) - MPoly.monomial(0, t=2)


def test_mul_by_zero():
    p = x(2, 1) + qpoly(2) * tpoly(2)
    assert (p * MPoly.zero(2)).is_zero()


def test_square_binomial():
    p = x(2, 1) + x(2, 2)
    expected = (
        MPoly.monomial(2, x=(2, 0))
        + MPoly.monomial(2, x=(1, 1), coeff=2)
        + MPoly.monomial(2, x=(0, 2))
    )
    assert p * p == expected


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        x(1, 1) + x(2, 1)
    with pytest.raises(DimensionError):
        x(1, 1) * x(2, 2)


# -- Pochhammer / Gaussian multinomials ------------------------------------


def test_pochhammer_small():
    assert pochhammer_tt(0) == MPoly.one(0)
    assert pochhammer_tt(1) == MPoly.one(0) - tpoly()
    expected = (
        (MPoly.one(0) - tpoly())
        * (MPoly.one(0) - MPoly.monomial(0, t=2))
        * (MPoly.one(0) - MPoly.monomial(0, t=3))
    )
    assert pochhammer_tt(3) == expected


@pytest.mark.parametrize("m", range(13))
def test_pochhammer_degree_and_constant(m):
    p = pochhammer_tt(m)
    assert p.degree() == m * (m + 1) // 2
    assert p.constant_term() == 1


def test_t_multinomial_examples():
    assert t_multinomial(2, [1, 1]) == MPoly.one(0) + tpoly()
    assert t_multinomial(3, [2, 1]) == MPoly.one(0) + tpoly() + MPoly.monomial(0, t=2)
    for n in range(1, 6):
        assert t_multinomial(n, [n]) == MPoly.one(0)


def test_t_multinomial_bad_parts():
    with pytest.raises(ValueError):
        t_multinomial(4, [2, 1])
    with pytest.raises(ValueError):
        t_multinomial(2, [2, 0])


def multinomial(total, parts):
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


@pytest.mark.parametrize("total", range(1, 9))
def test_t_multinomial_at_t_one(total):
    # every composition of `total` into at most 3 parts
    for a in range(1, total + 1):
        for b in range(0, total - a + 1):
            c = total - a - b
            parts = [p for p in (a, b, c) if p > 0]
            value = t_multinomial(total, parts).specialize(t=1).constant_term()
            assert value == multinomial(total, parts)


def test_gaussian_binomial_symmetry():
    for m in range(7):
        for k in range(m + 1):
            assert gaussian_binomial(m, k) == gaussian_binomial(m, m - k)


# -- division ----------------------------------------------------------------


def test_exact_div_detects_remainder():
    with pytest.raises(NonPolynomialError):
        exact_div(MPoly.one(0) + qpoly(), MPoly.one(0) - tpoly())


def test_divmod_reconstructs():
    p = pochhammer_tt(4) * (MPoly.one(0) + qpoly()) + MPoly.monomial(0, q=2)
    d = pochhammer_tt(2)
    quo, rem = divmod_poly(p, d)
    assert quo * d + rem == p


# -- QtRational --------------------------------------------------------------


def test_qt_reduce_cancels_single_factor():
    u = QtRational(MPoly.one(0) - tpoly(), [QtFactor(0, 1)])
    assert u.den == ()
    assert u.num == MPoly.one(0)


def test_qt_add_zero_identity():
    u = QtRational(MPoly.one(0) + qpoly(), [QtFactor(1, 2)])
    assert (u + QtRational.zero()) == u


def test_qt_mul_full_cancellation():
    u = QtRational(MPoly.one(0) - tpoly(), [QtFactor(1, 2)])
    v = QtRational(one_minus_qt(1, 2), [QtFactor(0, 1)])
    assert (u * v) == QtRational.one()


def test_qt_reduce_partial():
    u = QtRational(MPoly.one(0) - MPoly.monomial(0, t=2), [QtFactor(0, 1)])
    assert u == QtRational(MPoly.one(0) + tpoly())
    stuck = QtRational(MPoly.one(0) + qpoly(), [QtFactor(0, 1)])
    assert stuck.den == (QtFactor(0, 1),)


def test_qt_reduce_two_factors():
    num = (MPoly.one(0) - tpoly()) * one_minus_qt(1, 1)
    u = QtRational(num, [QtFactor(0, 1), QtFactor(1, 1)])
    assert u == QtRational.one()
    assert u.den == ()


def test_to_polynomial():
    assert QtRational.from_int(5).to_polynomial() == MPoly.const(0, 5)
    u = QtRational(MPoly.one(0) - MPoly.monomial(0, t=2), [QtFactor(0, 1)])
    assert u.to_polynomial() == MPoly.one(0) + tpoly()
    with pytest.raises(NonPolynomialError):
        QtRational(MPoly.one(0) + qpoly(), [QtFactor(0, 1)]).to_polynomial()


def test_qt_specialize():
    u = QtRational(MPoly.one(0) - tpoly(), [QtFactor(1, 1)])
    assert u.specialize(q=0, t=0) == 1
    # (1-t)/(1-qt) at q=1/2, t=3: (1-3)/(1-3/2) = 4
    assert u.specialize(q=Fraction(1, 2), t=3) == 4
    # vanishing denominator
    with pytest.raises(EvaluationError):
        QtRational(MPoly.one(0), [QtFactor(0, 1)]).specialize(q=0, t=1)
    with pytest.raises(EvaluationError):
        u.specialize(q=Fraction(1, 2), t=2)


def test_qt_specialize_q_zero_keeps_t():
    u = QtRational(MPoly.one(0) + qpoly() + tpoly(), [QtFactor(2, 1), QtFactor(0, 2)])
    v = u.specialize(q=0)
    assert isinstance(v, QtRational)
    assert v.num == MPoly.one(0) + tpoly()
    assert v.den == (QtFactor(0, 2),)


# -- specialize on MPoly -------------------------------------------------------


def test_specialize_examples():
    p = MPoly.one(1) + qpoly(1) + tpoly(1) * x(1, 1)
    assert p.specialize(q=0, t=0) == MPoly.one(1)
    assert pochhammer_tt(3).specialize(t=1).is_zero()


def test_specialize_x_subs():
    p = x(2, 1) * x(2, 2) + x(2, 2) ** 2
    assert p.specialize(x={2: 0}).is_zero()
    assert p.specialize(x={2: 1}) == x(2, 1) + MPoly.one(2)


def test_specialize_rational_point():
    p = MPoly.one(0) + tpoly()
    assert p.specialize(t=Fraction(1, 2)).constant_term() == Fraction(3, 2)


# -- serialization --------------------------------------------------------------


def test_json_round_trip():
    p = (x(2, 1) + x(2, 2) * qpoly(2)) * pochhammer_tt(2, n=2) + MPoly.const(2, -7)
    assert MPoly.from_json(p.to_json()) == p


def test_json_huge_coefficients():
    big = 12345678901234567890123456789012345678901234567890
    p = MPoly.const(1, big) + x(1, 1) * -big
    assert MPoly.from_json(p.to_json()) == p


def test_json_term_order_is_canonical():
    p = x(2, 2) + x(2, 1) + MPoly.one(2) * 3
    obj = p.to_json_obj()
    assert [term["x"] for term in obj["terms"]] == [[1, 0], [0, 1], [0, 0]]


# -- hypothesis: ring axioms, reduce invariants --------------------------------


@st.composite
def small_polys(draw, n=2):
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        mono = Monomial(
            tuple(draw(st.integers(0, 2)) for _ in range(n)),
            draw(st.integers(0, 2)),
            draw(st.integers(0, 2)),
        )
        terms[mono] = draw(st.integers(-5, 5))
    return MPoly(n, terms)


@settings(max_examples=200)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(p, r, s):
    assert p + r == r + p
    assert (p + r) + s == p + (r + s)
    assert p * r == r * p
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s


@settings(max_examples=100)
@given(small_polys(), small_polys())
def test_specialize_commutes_with_ops(p, r):
    point = dict(q=1, t=0, x={1: 2, 2: 1})
    assert (p + r).specialize(**point) == p.specialize(**point) + r.specialize(**point)
    assert (p * r).specialize(**point) == p.specialize(**point) * r.specialize(**point)


@st.composite
def qt_rationals(draw):
    n_terms = draw(st.integers(0, 3))
    terms = {}
    for _ in range(n_terms):
        mono = Monomial((), draw(st.integers(0, 3)), draw(st.integers(0, 3)))
        terms[mono] = draw(st.integers(-4, 4))
    den = []
    for _ in range(draw(st.integers(0, 2))):
        den.append(QtFactor(draw(st.integers(0, 2)), draw(st.integers(1, 2))))
    return MPoly(0, terms), tuple(den)


@settings(max_examples=150)
@given(qt_rationals())
def test_qt_reduce_idempotent_and_value_preserving(data):
    num, den = data
    u = QtRational(num, den)
    again = QtRational(u.num, u.den)
    assert again.num == u.num and again.den == u.den
    # cross-multiplication against the unreduced parts
    left = u.num
    for f in den:
        left = left * f.poly()
    right = num
    for f in u.den:
        right = right * f.poly()
    assert left == right


@settings(max_examples=80)
@given(qt_rationals(), qt_rationals())
def test_qt_add_mul_consistency(du, dv):
    u = QtRational(*du)
    v = QtRational(*dv)
    # check add/mul against cross-multiplied polynomial identities
    s = u + v
    left = s.num
    for f in du[1] + dv[1]:
        left = left * f.poly()
    right_u = du[0]
    for f in s.den + dv[1]:
        right_u = right_u * f.poly()
    right_v = dv[0]
    for f in s.den + du[1]:
        right_v = right_v * f.poly()
    assert left == right_u + right_v
    p = u * v
    lhs = p.num
    for f in du[1] + dv[1]:
        lhs = lhs * f.poly()
    rhs = du[0] * dv[0]
    for f in p.den:
        rhs = rhs * f.poly()
    assert lhs == rhs
