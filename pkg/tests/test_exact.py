from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from repst.exact import (
    BadConstantTermError,
    BinomialBasisPolynomial,
    ExactPolynomial,
    NonDivisibleError,
    ONE,
    OutOfBoundsError,
    T,
    TruncatedSeries,
    binomial_poly,
    convolve_coefficient,
    falling_factorial_poly,
    lagrange_interpolate,
    poly_from_json,
    poly_to_json,
    to_binomial_basis,
)

fractions = st.fractions(min_value=-60, max_value=60, max_denominator=12)
polynomials = st.lists(fractions, max_size=13).map(ExactPolynomial)


def test_polynomial_basic_arithmetic():
    assert (T - 1) * (T - 2) == ExactPolynomial((2, -3, 1))
    assert (T * T - T).exact_div(T - 1) == T
    assert T + 1 - 1 == T
    assert (T ** 3)(2) == 8
    assert ExactPolynomial().degree == -1
    assert (T * 0).is_zero


def test_exact_div_rejects_remainder():
    # t(t-3)/2 = (t-1) q + r with r = -1 at t = 1, so not divisible
    p = (T * (T - 3)).scale(Fraction(1, 2))
    assert p(1) == -1
    with pytest.raises(NonDivisibleError):
        p.exact_div(T - 1)
    with pytest.raises(NonDivisibleError):
        ONE.exact_div(T)
    with pytest.raises(ZeroDivisionError):
        T.exact_div(ExactPolynomial())


@given(a=polynomials, b=polynomials)
def test_product_then_exact_div_roundtrips(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


def test_binomial_poly_values():
    assert binomial_poly(0, 0) == 1
    assert binomial_poly(-1, 1) == T - 1
    assert binomial_poly(0, 2) == (T * (T - 1)).scale(Fraction(1, 2))
    assert falling_factorial_poly(3) == T * (T - 1) * (T - 2)


def test_binomial_basis_known_values():
    assert to_binomial_basis(ONE).coeffs == (1,)
    assert to_binomial_basis((T * (T - 1)).scale(Fraction(1, 2))).coeffs == (0, 0, 1)
    # t^2 = binom(t,1) + 2 binom(t,2); checked at t = 0, 1, 2
    b = to_binomial_basis(T * T)
    assert b.coeffs == (0, 1, 2)
    for n in range(3):
        assert b.to_monomial()(n) == n * n


@given(p=polynomials)
def test_binomial_basis_roundtrip(p):
    assert to_binomial_basis(p).to_monomial() == p


@given(coeffs=st.lists(st.integers(-9, 9), max_size=10))
def test_integer_binomial_combinations_are_integer_valued(coeffs):
    p = BinomialBasisPolynomial(coeffs).to_monomial()
    for n in range(-5, 12):
        assert p(n).denominator == 1


def test_integer_valued_detection():
    half_t = T.scale(Fraction(1, 2))
    b = to_binomial_basis(half_t)
    assert not b.is_integer_valued
    index, value = b.first_fractional()
    assert index == 1 and value == Fraction(1, 2)


@given(p=polynomials)
def test_json_roundtrip(p):
    assert poly_from_json(poly_to_json(p)) == p
    b = to_binomial_basis(p)
    assert poly_from_json(poly_to_json(b)) == b


def test_json_uses_decimal_strings():
    data = poly_to_json(T.scale(Fraction(-7, 3)))
    assert data == {"basis": "monomial", "coeffs": [["0", "1"], ["-7", "3"]]}


def test_lagrange_interpolation_matches_nodes():
    pts = [(0, 0), (1, 0), (2, 1), (3, 3)]
    p = lagrange_interpolate(pts)
    assert p == binomial_poly(0, 2)
    with pytest.raises(ValueError):
        lagrange_interpolate([(0, 1), (0, 2)])


def test_polynomial_str():
    assert str(T * (T - 3)) == "t^2 - 3*t"
    assert str(ExactPolynomial()) == "0"
    assert str(to_binomial_basis((T * (T - 3)).scale(Fraction(1, 2)))) == "binom(t,2) - binom(t,1)"


# --- truncated series --------------------------------------------------------


def geometric_like(bounds, entries):
    return TruncatedSeries(bounds, entries)


def test_series_coefficient_bounds():
    s = TruncatedSeries((2, 1), {(1, 0): 1})
    assert s.coefficient((1, 0)) == 1
    assert s.coefficient((0, 1)) == 0
    with pytest.raises(OutOfBoundsError):
        s.coefficient((3, 0))
    with pytest.raises(OutOfBoundsError):
        s.coefficient((1,))


def test_series_truncation_drops_high_terms():
    s = TruncatedSeries((1,), {(0,): 1, (1,): 2, (2,): 5})
    assert (1,) in s.terms and (2,) not in s.terms


def test_binary_ops_intersect_bounds():
    a = TruncatedSeries((3,), {(0,): 1, (3,): 1})
    b = TruncatedSeries((2,), {(0,): 1})
    assert (a + b).bounds == (2,)
    assert (a * b).bounds == (2,)
    with pytest.raises(OutOfBoundsError):
        (a * b).coefficient((3,))


@given(
    a=st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)),
                      st.integers(-4, 4), max_size=5),
    b=st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)),
                      st.integers(-4, 4), max_size=5),
)
def test_series_product_matches_brute_force_convolution(a, b):
    bounds = (3, 2)
    sa = TruncatedSeries(bounds, a)
    sb = TruncatedSeries(bounds, b)
    product = sa * sb
    for e0 in range(4):
        for e1 in range(3):
            total = ExactPolynomial()
            for (x0, x1), ca in sa.terms.items():
                for (y0, y1), cb in sb.terms.items():
                    if (x0 + y0, x1 + y1) == (e0, e1):
                        total = total + ca * cb
            assert product.coefficient((e0, e1)) == total
            assert convolve_coefficient(sa, sb, (e0, e1)) == total


def test_pow_poly_binomial_series():
    one_plus_x = TruncatedSeries((7,), {(0,): 1, (1,): 1})
    power = one_plus_x.pow_poly(T)
    for k in range(8):
        assert power.coefficient((k,)) == binomial_poly(0, k)


def test_pow_poly_known_expansion():
    h = TruncatedSeries((2,), {(0,): 1, (1,): 2})
    power = h.pow_poly(T)
    assert power.coefficient((0,)) == 1
    assert power.coefficient((1,)) == T.scale(2)
    assert power.coefficient((2,)) == (T * (T - 1)).scale(2)


@given(c1=st.integers(0, 3), c2=st.integers(0, 3), n=st.integers(0, 6))
def test_pow_poly_specializes_to_repeated_product(c1, c2, n):
    bounds = (4,)
    h = TruncatedSeries(bounds, {(0,): 1, (1,): c1, (2,): c2})
    power = h.pow_poly(T)
    product = TruncatedSeries.constant(bounds, 1)
    for _ in range(n):
        product = product * h
    assert power.eval_t(n) == product


def test_exp_log_preconditions():
    with pytest.raises(BadConstantTermError):
        TruncatedSeries((2,), {(0,): 1}).exp()
    with pytest.raises(BadConstantTermError):
        TruncatedSeries((2,), {(1,): 1}).log()
    with pytest.raises(BadConstantTermError):
        TruncatedSeries((2,), {(0,): 2}).pow_poly(T)
    assert TruncatedSeries.constant((3,), 1).log() == TruncatedSeries((3,))
    assert TruncatedSeries((3,)).exp() == TruncatedSeries.constant((3,), 1)


@given(c1=fractions, c2=fractions)
def test_exp_log_inverse(c1, c2):
    s = TruncatedSeries((4,), {(1,): c1, (2,): c2})
    one = TruncatedSeries.constant((4,), 1)
    assert (one + s).log().exp() == one + s
    assert s.exp().log() == s


def test_pow_poly_agrees_with_exp_log():
    h = TruncatedSeries((3, 2), {(0, 0): 1, (1, 0): 1, (0, 1): 2, (1, 1): -1})
    g = T * T - 3
    assert h.pow_poly(g) == h.log().scale(g).exp()
