import pytest
from hypothesis import given, settings, strategies as st

from glmn_cb.cb_laurent import v_power
from glmn_cb.cb_matrices import SuperShape, SuperMatrix, sign_bar, \
    a_lambda, enumerate_upper, enumerate_level, enumerate_compositions
from glmn_cb.uplus.cb_uplus import AlgebraElement, generator, \
    left_mult_divided_E, mult
from glmn_cb.uplus.cb_canonical import canonical
from glmn_cb.schur.cb_schur import (SchurElement, left_mult_E, left_mult_F,
                                    span_element, eta_r, idempotent,
                                    left_mult_idempotent,
                                    right_mult_idempotent, schur_identity,
                                    weight_element, ef_commutator_check)
from glmn_cb.schur.cb_xi import multiply

GL21 = SuperShape(2, 1)
GL12 = SuperShape(1, 2)
GL22 = SuperShape(2, 2)


def E(shape, *entries):
    return SuperMatrix.from_entries(shape, {(i, j): v for i, j, v in entries})


def D(shape, *parts):
    return SuperMatrix.diag(shape, parts)


def test_element_errors():
    with pytest.raises(ValueError):
        SchurElement(GL21, -1)
    with pytest.raises(ValueError):
        SchurElement(GL21, 2, {E(GL21, (1, 2, 1)): 1})
    with pytest.raises(ValueError):
        SchurElement(GL21, 2, {E(GL21, (1, 3, 2)): 1})
    with pytest.raises(ValueError):
        SchurElement.basis(D(GL21, 1, 0, 0)) + SchurElement.basis(
            D(GL21, 2, 0, 0))


def test_element_json_round_trip():
    x = SchurElement.basis(E(GL21, (1, 2, 1), (3, 3, 1)), v_power(-2))
    assert SchurElement.from_json(x.to_json()) == x
    with pytest.raises(ValueError):
        SchurElement.from_json({'m': 2, 'n': 1})


@pytest.mark.parametrize('shape', [GL21, GL12, GL22])
def test_generators_on_idempotents(shape):
    for lam in enumerate_compositions(shape, 2):
        x = idempotent(shape, lam, 2)
        for h in range(1, shape.size):
            if lam[h]:
                parts = list(lam)
                parts[h] -= 1
                expected = SchurElement.basis(
                    SuperMatrix.diag(shape, parts) +
                    SuperMatrix.unit(shape, h, h + 1))
            else:
                expected = SchurElement.zero(shape, 2)
            assert left_mult_E(h, 1, 2, x) == expected


def test_odd_divided_powers_vanish():
    for a in enumerate_level(GL21, 3):
        x = SchurElement.basis(a)
        assert left_mult_E(2, 2, 3, x).is_zero()
        assert left_mult_F(2, 2, 3, x).is_zero()


def test_left_mult_errors():
    x = SchurElement.basis(D(GL21, 1, 1, 0))
    with pytest.raises(ValueError):
        left_mult_E(1, 1, 3, x)
    with pytest.raises(ValueError):
        left_mult_E(3, 1, 2, x)
    with pytest.raises(ValueError):
        left_mult_F(1, 0, 2, x)


def test_span_element():
    assert span_element(E(GL21, (1, 3, 1), (2, 1, 1)), (0, 0, 0), 1) == \
        SchurElement.zero(GL21, 1)
    assert span_element(E(GL21, (1, 1, 1)), (0, 0, 0), 2).is_zero()
    x = span_element(E(GL22, (1, 4, 1)), (0, 0, 0, 0), 2)
    assert len(x) == 4
    assert x.coefficient(E(GL22, (1, 4, 1), (3, 3, 1))) == -1
    assert x.coefficient(E(GL22, (1, 4, 1), (1, 1, 1))) == 1
    with pytest.raises(ValueError):
        span_element(E(GL22, (1, 4, 1)), (0, 0), 2)


def test_weight_elements():
    for i in range(1, 4):
        j = tuple(1 if t == i else 0 for t in range(1, 4))
        x = weight_element(GL21, j, 3)
        for lam in enumerate_compositions(GL21, 3):
            exponent = lam[i - 1] if i <= 2 else -lam[i - 1]
            assert x.coefficient(D(GL21, *lam)) == v_power(exponent)


def test_identity():
    one = schur_identity(GL21, 2)
    assert len(one) == 6
    assert eta_r(AlgebraElement.identity(GL21), 2) == one
    for a in enumerate_level(GL21, 2):
        assert multiply(one, SchurElement.basis(a)) == SchurElement.basis(a)


def test_eta_r():
    c = canonical(E(GL22, (1, 3, 1), (2, 3, 1)))
    assert eta_r(c.element(), 1).is_zero()
    for h in (1, 2):
        assert eta_r(generator(GL21, h), 3) == \
            span_element(SuperMatrix.unit(GL21, h, h + 1), (0, 0, 0), 3)


def test_idempotents():
    lam = (1, 0, 1)
    mu = (0, 1, 1)
    x = idempotent(GL21, lam, 2)
    assert multiply(x, x) == x
    assert multiply(x, idempotent(GL21, mu, 2)).is_zero()
    with pytest.raises(ValueError):
        idempotent(GL21, (1, 1), 2)
    with pytest.raises(ValueError):
        idempotent(GL21, (1, 1, 1), 2)


def test_idempotent_selection():
    y = span_element(E(GL21, (1, 2, 1)), (0, 0, 0), 2)
    assert left_mult_idempotent((2, 0, 0), y) == \
        SchurElement.basis(E(GL21, (1, 1, 1), (1, 2, 1)))
    assert right_mult_idempotent(y, (0, 2, 0)) == \
        SchurElement.basis(E(GL21, (1, 2, 1), (2, 2, 1)))


@pytest.mark.parametrize('r', [1, 2, 3])
def test_lower_span_element_picks_a_lambda(r):
    for upper in enumerate_upper(GL21, entry_max=r):
        a = upper.t
        if a.size() > r:
            continue
        y = span_element(a, (0, 0, 0), r)
        hook = a.co()
        for lam in enumerate_compositions(GL21, r):
            if any(l < h for l, h in zip(lam, hook)):
                continue
            lead = a_lambda(a, lam)
            assert right_mult_idempotent(y, lam) == \
                SchurElement.basis(lead, (-1) ** sign_bar(lead))


@pytest.mark.parametrize('shape', [GL21, GL12])
@pytest.mark.parametrize('r', [1, 2, 3])
def test_ef_commutator(shape, r):
    report = ef_commutator_check(shape, r)
    assert report.passed, report.failures
    assert report.checked


@pytest.mark.parametrize('shape', [GL21, GL12])
def test_eta_r_agrees_with_generators(shape):
    zero = (0,) * shape.size
    for r in (1, 2, 3):
        for a in enumerate_upper(shape, entry_max=2):
            x = AlgebraElement.basis(a)
            for h in range(1, shape.size):
                left = left_mult_E(h, 1, r, span_element(a, zero, r))
                assert left == eta_r(left_mult_divided_E(h, 1, x), r)


LEVEL_2 = list(enumerate_level(GL21, 2))
UPPER_21 = list(enumerate_upper(GL21, entry_max=2))


@settings(max_examples=300)
@given(st.sampled_from(LEVEL_2), st.sampled_from(LEVEL_2),
       st.sampled_from(LEVEL_2))
def test_multiply_is_associative(a, b, c):
    x, y, z = (SchurElement.basis(t) for t in (a, b, c))
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@settings(max_examples=200)
@given(st.sampled_from(UPPER_21), st.sampled_from(UPPER_21),
       st.sampled_from([1, 2, 3]))
def test_eta_r_is_multiplicative(a, b, r):
    x = AlgebraElement.basis(a)
    y = AlgebraElement.basis(b)
    assert eta_r(mult(x, y), r) == multiply(eta_r(x, r), eta_r(y, r))
