import logging

import pytest
from hypothesis import given, settings, strategies as st

from glmn_cb.cb_laurent import ONE, v_power, sym_int
from glmn_cb.cb_matrices import SuperShape, SuperMatrix, preceq, \
    enumerate_upper
from glmn_cb.uplus.cb_uplus import (AlgebraElement, Factor, MonomialWord,
                                    PLUS, MINUS, generator, generator_terms,
                                    divided_terms, left_mult_divided_E,
                                    monomial_word, eval_word, part_for,
                                    transition_closure, bar_element, mult,
                                    tau_transpose, weight)
from glmn_cb.uplus.cb_pbw import root_vector, pbw

GL21 = SuperShape(2, 1)
GL12 = SuperShape(1, 2)
GL22 = SuperShape(2, 2)


def E(shape, *entries):
    return SuperMatrix.from_entries(shape, {(i, j): v for i, j, v in entries})


def basis(shape, *entries):
    return AlgebraElement.basis(E(shape, *entries))


UPPER_21 = list(enumerate_upper(GL21, norm_max=6))
UPPER_22 = list(enumerate_upper(GL22, norm_max=5))

upper_21 = st.sampled_from(UPPER_21)
upper_22 = st.sampled_from(UPPER_22)


def test_element_rejects_bad_keys():
    with pytest.raises(ValueError):
        AlgebraElement(GL21, 'middle')
    with pytest.raises(ValueError):
        AlgebraElement(GL21, PLUS, {E(GL21, (2, 1, 1)): 1})
    with pytest.raises(ValueError):
        AlgebraElement(GL21, PLUS, {E(GL21, (1, 3, 2)): 1})
    with pytest.raises(ValueError):
        AlgebraElement(GL21, PLUS, {E(GL22, (1, 2, 1)): 1})


def test_element_drops_zero_coefficients():
    x = AlgebraElement(GL21, PLUS, {E(GL21, (1, 2, 1)): 0})
    assert x.is_zero()
    y = basis(GL21, (1, 2, 1)) - basis(GL21, (1, 2, 1))
    assert not y
    assert y == AlgebraElement.zero(GL21)


def test_combining_sides_fails():
    with pytest.raises(ValueError):
        basis(GL21, (1, 2, 1)) + basis(GL21, (2, 1, 1))
    with pytest.raises(TypeError):
        basis(GL21, (1, 2, 1)) + 1


@pytest.mark.parametrize('a', range(5))
def test_odd_generator_on_even_power(a):
    # E_2 E_1^(a) = (E_23 + aE_12)(0)
    x = basis(GL21, (1, 2, a))
    assert left_mult_divided_E(2, 1, x) == basis(GL21, (1, 2, a), (2, 3, 1))


@pytest.mark.parametrize('a', range(5))
def test_even_generator_on_its_own_power(a):
    x = basis(GL21, (1, 2, a))
    expected = basis(GL21, (1, 2, a + 1)) * sym_int(a + 1)
    assert left_mult_divided_E(1, 1, x) == expected


def test_even_generator_moves_odd_box():
    x = basis(GL21, (2, 3, 1))
    expected = basis(GL21, (1, 3, 1)) + \
        basis(GL21, (1, 2, 1), (2, 3, 1)) * v_power(-1)
    assert left_mult_divided_E(1, 1, x) == expected


def test_odd_divided_power_vanishes():
    for a in UPPER_22[:20]:
        x = AlgebraElement.basis(a)
        assert left_mult_divided_E(2, 2, x).is_zero()
        assert left_mult_divided_E(2, 3, x).is_zero()


def test_odd_generator_squares_to_zero():
    for a in UPPER_21:
        x = AlgebraElement.basis(a)
        twice = left_mult_divided_E(2, 1, left_mult_divided_E(2, 1, x))
        assert twice.is_zero()


def test_invalid_terms_are_logged(caplog):
    caplog.set_level(logging.DEBUG, logger='glmn_cb.uplus.cb_uplus')
    x = basis(GL21, (2, 3, 1))
    assert left_mult_divided_E(2, 1, x).is_zero()
    assert any('dropped invalid' in record.getMessage()
               for record in caplog.records)


def test_left_mult_errors():
    x = basis(GL21, (1, 2, 1))
    with pytest.raises(ValueError):
        left_mult_divided_E(3, 1, x)
    with pytest.raises(ValueError):
        left_mult_divided_E(0, 1, x)
    with pytest.raises(ValueError):
        left_mult_divided_E(1, 0, x)
    with pytest.raises(ValueError):
        left_mult_divided_E(1, 1, x.transposed())


@settings(max_examples=200)
@given(upper_22, st.sampled_from([1, 3]))
def test_divided_formula_at_power_one_matches_generator(a, h):
    def collect(terms):
        result = {}
        for b, c in terms:
            if b.is_valid() and c:
                result[b] = result.get(b, 0) + c
        return {b: c for b, c in result.items() if c}

    assert collect(divided_terms(a, h, 1)) == collect(generator_terms(a, h))


def test_divided_power_matches_repeated_generator():
    # E_1^2 = [2] E_1^(2), E_3^3 = [3]! E_3^(3)
    for a in UPPER_22[:30]:
        x = AlgebraElement.basis(a)
        twice = left_mult_divided_E(1, 1, left_mult_divided_E(1, 1, x))
        assert twice == left_mult_divided_E(1, 2, x) * sym_int(2)
        thrice = x
        for _ in range(3):
            thrice = left_mult_divided_E(3, 1, thrice)
        expected = left_mult_divided_E(3, 3, x) * (sym_int(2) * sym_int(3))
        assert thrice == expected


def test_monomial_word_case_nine():
    a = E(GL22, (1, 2, 2), (1, 3, 1), (1, 4, 1), (3, 4, 3))
    assert monomial_word(a).factors == (
        Factor(3, 3), Factor(1, 1), Factor(2, 1), Factor(3, 1),
        Factor(1, 1), Factor(2, 1), Factor(1, 2))
    assert str(monomial_word(a)) == 'E3^(3) E1 E2 E3 E1 E2 E1^(2)'


def test_monomial_word_case_five():
    a = E(GL22, (1, 2, 1), (1, 3, 1), (2, 3, 1), (3, 4, 2))
    assert [tuple(f) for f in monomial_word(a)] == \
        [(3, 2), (2, 1), (1, 1), (2, 1), (1, 1)]


def test_monomial_word_single_power():
    assert monomial_word(E(GL21, (1, 2, 4))).factors == (Factor(1, 4),)
    assert len(monomial_word(SuperMatrix.zero(GL21))) == 0


def test_monomial_word_errors():
    with pytest.raises(ValueError):
        monomial_word(E(GL21, (2, 1, 1)))
    with pytest.raises(ValueError):
        monomial_word(E(GL21, (1, 3, 2)))
    with pytest.raises(ValueError):
        MonomialWord(GL21, [(2, 2)])
    with pytest.raises(ValueError):
        MonomialWord(GL21, [(1, 0)])
    with pytest.raises(ValueError):
        MonomialWord(GL21, [(3, 1)])


def test_eval_word_examples():
    e13 = E(GL21, (1, 3, 1))
    assert eval_word(monomial_word(e13)) == \
        AlgebraElement.basis(e13) + \
        basis(GL21, (1, 2, 1), (2, 3, 1)) * v_power(-1)
    for a in range(4):
        power = E(GL21, (1, 2, a))
        assert eval_word(monomial_word(power)) == AlgebraElement.basis(power)
        chain = E(GL21, (1, 2, a), (2, 3, 1))
        assert eval_word(monomial_word(chain)) == AlgebraElement.basis(chain)


@pytest.mark.parametrize('shape', [GL21, GL12, GL22])
def test_monomials_are_unitriangular(shape):
    for a in enumerate_upper(shape, norm_max=5):
        expansion = eval_word(monomial_word(a))
        assert expansion.coefficient(a) == 1
        for b in expansion.terms:
            assert preceq(b, a)


def test_transition_closure_examples():
    power = E(GL21, (1, 2, 3))
    found, table = transition_closure(power)
    assert found == [power]
    assert table == {power: {power: ONE}}

    e13 = E(GL21, (1, 3, 1))
    chain = E(GL21, (1, 2, 1), (2, 3, 1))
    found, table = transition_closure(e13)
    assert found == [chain, e13]
    assert table[e13] == {e13: ONE, chain: v_power(-1)}

    found, _ = transition_closure(E(GL22, (1, 4, 1)))
    for b in [E(GL22, (1, 4, 1)), E(GL22, (1, 2, 1), (2, 4, 1)),
              E(GL22, (1, 3, 1), (3, 4, 1)),
              E(GL22, (1, 2, 1), (2, 3, 1), (3, 4, 1))]:
        assert b in found
    keys = [b.sort_key() for b in found]
    assert keys == sorted(keys)


def test_bar_examples():
    power = basis(GL21, (1, 2, 3))
    assert bar_element(power) == power
    e13 = basis(GL21, (1, 3, 1))
    chain = basis(GL21, (1, 2, 1), (2, 3, 1))
    assert bar_element(e13) == e13 + chain * (v_power(-1) - v_power(1))


@settings(max_examples=60)
@given(upper_22)
def test_bar_fixes_monomials(a):
    m = eval_word(monomial_word(a))
    assert bar_element(m) == m


@settings(max_examples=60)
@given(upper_22, st.integers(-3, 3))
def test_bar_is_an_involution(a, k):
    x = AlgebraElement.basis(a) * (v_power(k) + 2)
    assert bar_element(bar_element(x)) == x


def test_bar_on_minus_side_commutes_with_tau():
    x = basis(GL21, (1, 3, 1)) * v_power(2)
    assert bar_element(tau_transpose(x)) == tau_transpose(bar_element(x))


def test_mult_examples():
    one = AlgebraElement.identity(GL21)
    y = basis(GL21, (1, 2, 1), (2, 3, 1))
    assert mult(one, y) == y
    assert mult(y, one) == y
    e1 = generator(GL21, 1)
    e2 = generator(GL21, 2)
    assert mult(e1, e2) == eval_word(MonomialWord(GL21, [(1, 1)]),
                                     basis(GL21, (2, 3, 1)))
    assert mult(e1, e1) == basis(GL21, (1, 2, 2)) * sym_int(2)


def test_mult_agrees_with_generator_action():
    for a in UPPER_22[:40]:
        x = AlgebraElement.basis(a)
        for h in (1, 2, 3):
            assert mult(generator(GL22, h), x) == \
                left_mult_divided_E(h, 1, x)


@settings(max_examples=40)
@given(upper_21, upper_21, upper_21)
def test_mult_is_associative(a, b, c):
    x, y, z = (AlgebraElement.basis(t) for t in (a, b, c))
    assert mult(mult(x, y), z) == mult(x, mult(y, z))


def test_mult_on_minus_side():
    f1 = tau_transpose(generator(GL21, 1))
    f2 = tau_transpose(generator(GL21, 2))
    assert mult(f2, f1) == tau_transpose(mult(generator(GL21, 1),
                                              generator(GL21, 2)))
    assert mult(f2, f2).is_zero()


def test_mult_rejects_mixed_sides():
    with pytest.raises(ValueError):
        mult(generator(GL21, 1), tau_transpose(generator(GL21, 1)))


def test_weight():
    assert weight(generator(GL22, 2)) == (0, 1, -1, 0)
    assert weight(basis(GL22, (1, 2, 2), (1, 4, 1))) == (3, -2, 0, -1)
    with pytest.raises(ValueError):
        weight(generator(GL22, 1) + generator(GL22, 2))
    with pytest.raises(ValueError):
        weight(AlgebraElement.zero(GL22))


@settings(max_examples=40)
@given(upper_21, upper_21)
def test_weight_is_additive(a, b):
    product = mult(AlgebraElement.basis(a), AlgebraElement.basis(b))
    if product:
        expected = tuple(x + y for x, y in zip(a.weight(), b.weight()))
        assert weight(product) == expected


def test_tau_transpose():
    x = generator(GL21, 1)
    assert tau_transpose(x) == basis(GL21, (2, 1, 1))
    assert tau_transpose(x).side == MINUS


@settings(max_examples=20)
@given(st.lists(upper_22, min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_tau_is_an_involution(matrices, exponents):
    x = AlgebraElement.zero(GL22)
    for a, k in zip(matrices, exponents):
        x = x + AlgebraElement.basis(a) * v_power(k)
    assert tau_transpose(tau_transpose(x)) == x


def test_element_json_round_trip():
    x = basis(GL21, (1, 3, 1)) * v_power(-2) + basis(GL21, (1, 2, 4)) * 3
    assert AlgebraElement.from_json(x.to_json()) == x
    with pytest.raises(ValueError):
        AlgebraElement.from_json({'m': 2})


def test_root_vectors():
    assert root_vector(GL21, 1, 2) == generator(GL21, 1)
    assert root_vector(GL21, 1, 3) == basis(GL21, (1, 3, 1))
    with pytest.raises(ValueError):
        root_vector(GL21, 2, 2)
    with pytest.raises(ValueError):
        root_vector(GL22, 1, 4, c=4)


def test_root_vector_does_not_depend_on_middle_index():
    assert root_vector(GL22, 1, 4, c=2) == root_vector(GL22, 1, 4, c=3)


def test_pbw_examples():
    a = E(GL22, (1, 2, 2), (1, 3, 1), (2, 3, 1), (3, 4, 1))
    assert pbw(a) == AlgebraElement.basis(a)
    lower = E(GL21, (2, 1, 1), (3, 1, 1))
    assert pbw(lower) == AlgebraElement.basis(lower)
    with pytest.raises(ValueError):
        pbw(E(GL21, (1, 2, 1), (2, 1, 1)))


def test_positive_part_is_shared():
    assert part_for(GL21) is part_for(SuperShape(2, 1))
    assert part_for(GL21) is not part_for(GL12)
