import pytest
from hypothesis import given, strategies as st

from glmn_cb.cb_laurent import (LaurentPolynomial, ZERO, ONE, V, v_power, bar,
                                gauss_int, sym_int, qq_binom, sym_factorial,
                                antisym_solve, y_decompose,
                                NotBarAntisymmetricError,
                                YDecompositionError)


def poly(terms):
    return LaurentPolynomial(terms)


polynomials = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5),
                              max_size=5).map(LaurentPolynomial)
negative_polynomials = st.dictionaries(st.integers(-8, -1),
                                       st.integers(-5, 5),
                                       max_size=5).map(LaurentPolynomial)


def test_zero_coefficients_are_dropped():
    assert poly({3: 0, 1: 2}).terms == {1: 2}
    assert poly({0: 0}) == ZERO
    assert not ZERO


def test_integer_coercion():
    assert ONE == 1
    assert V + 1 == poly({1: 1, 0: 1})
    assert 2 - V == poly({0: 2, 1: -1})
    assert hash(LaurentPolynomial.constant(3)) == hash(3)


def test_bad_terms():
    with pytest.raises(TypeError):
        LaurentPolynomial({0.5: 1})
    with pytest.raises(TypeError):
        LaurentPolynomial.coerce('v')


def test_bar_examples():
    assert bar(V) == v_power(-1)
    assert bar(V + v_power(-1)) == V + v_power(-1)
    assert bar(1 + v_power(2)) == 1 + v_power(-2)


@given(polynomials, polynomials)
def test_bar_is_ring_involution(f, g):
    assert bar(f * g) == bar(f) * bar(g)
    assert bar(f + g) == bar(f) + bar(g)
    assert bar(bar(f)) == f


@given(polynomials, polynomials, polynomials)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polynomials, polynomials)
def test_exact_divide_inverts_multiplication(f, g):
    if g:
        assert (f * g).exact_divide(g) == f


def test_exact_divide_errors():
    with pytest.raises(ZeroDivisionError):
        V.exact_divide(ZERO)
    with pytest.raises(ValueError):
        (1 + V).exact_divide(2)


def test_gauss_int():
    assert gauss_int(2, 2) == 1 + v_power(2)
    assert gauss_int(1, -2) == ONE
    assert gauss_int(3, -2) == 1 + v_power(-2) + v_power(-4)
    assert gauss_int(0, 2) == ZERO
    with pytest.raises(ValueError):
        gauss_int(-1, 2)


def test_sym_int():
    assert sym_int(1) == ONE
    assert sym_int(2, 'even') == V + v_power(-1)
    assert sym_int(3, 'odd') == v_power(2) + 1 + v_power(-2)
    assert sym_int(0) == ZERO
    with pytest.raises(ValueError):
        sym_int(2, 'half')


@pytest.mark.parametrize('i', range(1, 10))
def test_shifted_bar_gauss_is_symmetric(i):
    assert v_power(i - 1) * bar(gauss_int(i, 2)) == sym_int(i)


def test_qq_binom():
    assert qq_binom(2, 1, 2) == 1 + v_power(2)
    assert qq_binom(3, 1, 2) == 1 + v_power(2) + v_power(4)
    assert qq_binom(5, 0, -2) == ONE
    assert qq_binom(2, 3, 2) == ZERO


@pytest.mark.parametrize('n', range(0, 9))
@pytest.mark.parametrize('step', [2, -2])
def test_qq_binom_subset_identity(n, step):
    for k in range(n + 1):
        for j in range(k + 1):
            assert qq_binom(n, k, step) * qq_binom(k, j, step) == \
                qq_binom(n, j, step) * qq_binom(n - j, k - j, step)


def test_sym_factorial():
    assert sym_factorial(0) == ONE
    assert sym_factorial(2) == sym_int(2)
    assert sym_factorial(3) == sym_int(2) * sym_int(3)


def test_antisym_solve_examples():
    assert antisym_solve(V - v_power(-1)) == -v_power(-1)
    assert antisym_solve(ZERO) == ZERO
    r = v_power(2) - v_power(-2) + V - v_power(-1)
    assert antisym_solve(r) == -v_power(-1) - v_power(-2)


def test_antisym_solve_rejects():
    with pytest.raises(NotBarAntisymmetricError):
        antisym_solve(V)
    with pytest.raises(NotBarAntisymmetricError):
        antisym_solve(ONE)


@given(negative_polynomials)
def test_antisym_solve_round_trip(p):
    assert antisym_solve(p - bar(p)) == p


def test_y_decompose():
    assert y_decompose(2) == (LaurentPolynomial.constant(2), ZERO)
    g_y, g_neg = y_decompose(v_power(2) + v_power(-1))
    assert g_y == v_power(2) + v_power(-2)
    assert g_neg == v_power(-1) - v_power(-2)
    with pytest.raises(YDecompositionError):
        y_decompose(V + 1 + v_power(-1))


def test_y_decompose_relaxed_keeps_odd_constant():
    g_y, g_neg = y_decompose(V + 1 + v_power(-1), strict=False)
    assert g_y == V + 1 + v_power(-1)
    assert g_neg == ZERO


@given(polynomials)
def test_y_decompose_parts(g):
    g_y, g_neg = y_decompose(g, strict=False)
    assert g_y + g_neg == g
    assert g_y.is_bar_invariant()
    assert g_neg.has_only_negative_exponents()


@given(polynomials)
def test_json_round_trip(f):
    assert LaurentPolynomial.from_json(f.to_json()) == f


def test_encodings():
    f = poly({2: -3, -1: 1})
    assert f.to_json() == {'2': -3, '-1': 1}
    assert f.to_latex() == '-3v^{2} + v^{-1}'
    assert str(f) == '-3v^2 + v^-1'
    with pytest.raises(ValueError):
        LaurentPolynomial.from_json({'x': 1})
