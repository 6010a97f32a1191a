from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from orientpoly import BivariatePolynomial, ContractViolation, InterpolationInconsistencyError, RationalPolynomial, interpolate

t = RationalPolynomial.variable()
coeff_lists = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=6), max_size=5)


def test_interpolate_line():
    assert interpolate([(0, 1), (1, 2), (2, 3)], 1) == t + 1


def test_interpolate_quadratic():
    assert interpolate([(1, 0), (2, 0), (3, 2), (4, 6)], 2) == (t - 1) * (t - 2)


def test_interpolate_inconsistent():
    with pytest.raises(InterpolationInconsistencyError):
        interpolate([(0, 0), (1, 1), (2, 3)], 1)


def test_interpolate_conflicting_duplicate():
    with pytest.raises(InterpolationInconsistencyError):
        interpolate([(0, 0), (0, 1), (1, 1)], 1)


def test_interpolate_too_few():
    with pytest.raises(ContractViolation):
        interpolate([(0, 0), (0, 0)], 1)


@given(coeff_lists, st.integers(-5, 5))
def test_interpolation_matches_lagrange(coeffs, at):
    p = RationalPolynomial(coeffs)
    d = max(p.degree, 0)
    pts = [(x, p(x)) for x in range(1, d + 4)]
    fit = interpolate(pts, d)
    assert fit == p
    assert fit(at) == oracles.newton_eval_points(pts, d, at)


@given(coeff_lists, coeff_lists, st.integers(-6, 6))
def test_ring_operations_agree_with_evaluation(a, b, x):
    p, q = RationalPolynomial(a), RationalPolynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert p.negate_variable()(x) == p(-x)
    assert p.shift(3)(x) == p(x + 3)
    assert p.compose_linear(-2, 1)(x) == p(-2 * x + 1)


@given(coeff_lists)
def test_json_round_trip(coeffs):
    p = RationalPolynomial(coeffs)
    assert RationalPolynomial.from_json(p.to_json()) == p


def test_canonical_form_and_printing():
    p = RationalPolynomial([0, -4, 8, -5, 1, 0, 0])
    assert p.coeffs[-1] == 1 and p.degree == 4
    assert str(p) == "t^4 - 5*t^3 + 8*t^2 - 4*t"
    assert p.to_json() == {"var": "t", "coeffs": ["0", "-4", "8", "-5", "1"]}
    assert str(RationalPolynomial([Fraction(-1, 3), 0, Fraction(2, 3)])) == "2/3*t^2 - 1/3"
    assert RationalPolynomial([]).degree == -1 and str(RationalPolynomial([])) == "0"


def test_from_roots():
    assert RationalPolynomial.from_roots([0, 1, 2, 2]) == t * (t - 1) * (t - 2) ** 2


def test_bivariate_basics():
    x = BivariatePolynomial([[0], [1]])
    y = BivariatePolynomial([[0, 1]])
    T = x * x + x + y
    assert T(2, 3) == 9
    assert T.at_y(0) == RationalPolynomial([0, 1, 1], "x")
    assert T.at_x(1) == RationalPolynomial([2, 1], "y")
    assert BivariatePolynomial.from_json(T.to_json()) == T
    assert T.to_json()["coeffs"] == [["0", "1"], ["1", "0"], ["1", "0"]]
    assert str(T) == "x^2 + x + y"
    # zero rows and columns are trimmed
    assert BivariatePolynomial([[1, 0, 0], [0, 0, 0]]) == BivariatePolynomial([[1]])
