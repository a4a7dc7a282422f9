import pytest

from glmn_cb.cb_matrices import SuperShape, SuperMatrix, enumerate_upper
from glmn_cb.uplus.cb_uplus import AlgebraElement, generator, \
    tau_transpose, mult
from glmn_cb.uplus.cb_pbw import (pbw, pbw_order, root_vector,
                                  supercommutator, serre_check,
                                  RelationReport)

GL21 = SuperShape(2, 1)
GL12 = SuperShape(1, 2)
GL22 = SuperShape(2, 2)


@pytest.mark.parametrize('shape,entry_max,count', [(GL22, 2, 144),
                                                   (GL21, 3, 16),
                                                   (GL12, 3, 16)])
def test_pbw_is_the_standard_basis(shape, entry_max, count):
    matrices = list(enumerate_upper(shape, entry_max=entry_max))
    assert len(matrices) == count
    for a in matrices:
        assert pbw(a) == AlgebraElement.basis(a), str(a)


def test_pbw_on_the_minus_side():
    for a in enumerate_upper(GL21, entry_max=2):
        assert pbw(a.t) == AlgebraElement.basis(a.t)


def test_pbw_order():
    a = SuperMatrix.from_entries(GL22, {(1, 2): 2, (1, 4): 1, (2, 4): 1,
                                        (3, 4): 3})
    assert [ij for ij, _ in pbw_order(a)] == [(3, 4), (2, 4), (1, 4), (1, 2)]


def test_supercommutator_signs():
    e1 = generator(GL21, 1)
    e2 = generator(GL21, 2)
    assert supercommutator(e2, e2, 1, 1).is_zero()
    assert supercommutator(e1, e2, 0, 1) == mult(e1, e2) - mult(e2, e1)
    assert supercommutator(e1, e1, 0, 0).is_zero()
    f2 = tau_transpose(e2)
    assert supercommutator(f2, f2, 1, 1).is_zero()


@pytest.mark.parametrize('shape', [GL21, GL12, GL22])
def test_serre_relations(shape):
    report = serre_check(shape, 6)
    assert report.passed, report.failures
    assert 'odd square E{}'.format(shape.m) in report.checked
    if shape == GL22:
        assert 'commute E1E3' in report.checked
        assert 'odd quartic' in report.checked
        assert 'serre E1E2' in report.checked
    if shape == GL21:
        assert 'serre E1E2' in report.checked


def test_relation_report_records_failures():
    report = RelationReport(GL21, 2)
    witness = SuperMatrix.unit(GL21, 1, 2)
    report.record('dummy', witness, AlgebraElement.zero(GL21))
    assert report.passed
    report.record('dummy', witness, generator(GL21, 1))
    assert not report.passed
    data = report.to_json()
    assert data['checked'] == {'dummy': 2}
    assert data['failures'][0]['relation'] == 'dummy'


def test_pbw_rejects_mixed_matrices():
    with pytest.raises(ValueError):
        pbw(SuperMatrix.from_entries(GL21, {(1, 2): 1, (2, 1): 1}))
    with pytest.raises(ValueError):
        pbw(SuperMatrix.from_entries(GL21, {(1, 3): 2}))
