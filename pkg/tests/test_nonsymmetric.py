"""Permuted-basement E / F values and their integral forms."""

import random

import pytest

from macpoly.nonsymmetric import (
    EResult,
    e_permuted_basement,
    f_poly,
    filling_weight,
    integral_e,
    iter_basement_fillings,
)
from macpoly.polyring import MPoly, QtFactor, QtRational, pochhammer_tt
from macpoly.shapes import (
    composition_stats,
    diagram,
    enumerate_fillings,
    is_nonattacking,
)


def qt_one_minus_t():
    return MPoly.one(0) - MPoly.monomial(0, t=1)


def test_empty_composition_is_one():
    e = e_permuted_basement((0, 0, 0))
    assert e.coeffs == {(0, 0, 0): QtRational.one()}


def test_single_box_compositions():
    assert e_permuted_basement((1, 0)).coeffs == {(1, 0): QtRational.one()}
    assert e_permuted_basement((0, 1)).coeffs == {(0, 1): QtRational.one()}


def test_forced_filling_two_boxes():
    assert e_permuted_basement((1, 1)).coeffs == {(1, 1): QtRational.one()}


def test_single_column_of_two():
    # hand enumeration: inc (0,2), two fillings
    e = e_permuted_basement((2, 0))
    expected = EResult(2)
    expected.add_term((2, 0), QtRational.one())
    expected.add_term(
        (1, 1),
        QtRational(MPoly.monomial(0, q=1) * qt_one_minus_t(), [QtFactor(1, 1)]),
    )
    assert e == expected
    e2 = e_permuted_basement((0, 2))
    expected2 = EResult(2)
    expected2.add_term((0, 2), QtRational.one())
    expected2.add_term((1, 1), QtRational(qt_one_minus_t(), [QtFactor(1, 1)]))
    assert e2 == expected2


def test_row_one_matches_basement_brute_force():
    for alpha in [(1, 0), (0, 1), (2, 0), (1, 2), (0, 2, 1), (1, 1, 2)]:
        stats = composition_stats(alpha)
        fast = {
            tuple(sorted(f.entries.items()))
            for f in iter_basement_fillings(alpha)
        }
        brute = {
            tuple(sorted(f.entries.items()))
            for f in enumerate_fillings(
                diagram(stats.inc),
                len(alpha),
                predicate=is_nonattacking,
                basement=stats.beta,
            )
        }
        assert fast == brute
        for key in fast:
            entries = dict(key)
            for (col, row), value in entries.items():
                if row == 1:
                    assert value == stats.beta[col - 1]


def test_x_degree_is_composition_size():
    for alpha in [(1, 2, 0), (2, 2), (0, 3, 1)]:
        e = e_permuted_basement(alpha)
        assert e.total_x_degrees() == {sum(alpha)}


def test_denominators_are_weight_shaped():
    e = e_permuted_basement((0, 2, 1))
    seen = set()
    for value in e.coeffs.values():
        seen.update(value.den)
    assert all(f.a >= 1 and f.b >= 1 for f in seen)


def test_accumulation_order_independent():
    alphas = [(1, 2, 0), (0, 1, 2), (2, 1, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2)]
    totals = []
    for seed in (1, 2, 3):
        rng = random.Random(seed)
        shuffled = alphas[:]
        rng.shuffle(shuffled)
        total = EResult(3)
        for alpha in shuffled:
            total = total + f_poly(alpha)
        totals.append(total)
    assert totals[0] == totals[1] == totals[2]


def test_f_poly_is_alias():
    assert f_poly((0, 2)) == e_permuted_basement((0, 2))


def test_integral_e_all_ones():
    # one ordered filling: x_1..x_n times (t;t)_n
    for n in (2, 3, 4):
        alpha = (1,) * n
        value = integral_e(alpha, verify=True)
        assert value == MPoly.monomial(n, x=(1,) * n) * pochhammer_tt(n, n)


def test_integral_e_zero_composition():
    assert integral_e((0, 0)) == MPoly.one(2)


@pytest.mark.parametrize(
    "alpha",
    [(1, 0), (2, 0), (0, 2), (1, 2), (2, 1), (1, 1, 0), (0, 2, 1), (2, 0, 2), (1, 3)],
)
def test_integral_e_routes_agree(alpha):
    integral_e(alpha, verify=True)


@pytest.mark.parametrize("alpha", [(2, 1), (0, 2, 1), (2, 2)])
def test_integral_e_divisible_by_prefactor(alpha):
    from macpoly.integral import pochhammer_prefactor
    from macpoly.polyring import exact_div

    stats = composition_stats(alpha)
    n = len(alpha)
    value = integral_e(alpha)
    exact_div(value, pochhammer_prefactor(stats.mult, n))


def test_filling_weight_trivial_cell():
    # a one-cell filling pinned to its basement weighs exactly 1
    f = next(iter_basement_fillings((1,)))
    assert filling_weight(f) == QtRational.one()
