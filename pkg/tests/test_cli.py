import json

import pytest

from glmn_cb.cb_laurent import ONE, v_power
from glmn_cb.cb_matrices import SuperShape, SuperMatrix
from glmn_cb.uplus.cb_canonical import CanonicalRecord
from glmn_cb.cb_cli import main, CACHE_ENV, MAX_LEVEL_ENV

GL21 = SuperShape(2, 1)
GL22 = SuperShape(2, 2)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, *argv)
    return status, json.loads(out)


def E(shape, *entries):
    return SuperMatrix.from_entries(shape, {(i, j): v for i, j, v in entries})


def test_canonical_json(capsys):
    status, data = run_json(capsys, 'canonical', '--m', '2', '--n', '1',
                            '--matrix', 'E[1,3]')
    assert status == 0
    record = CanonicalRecord.from_json(data)
    assert record.expansion == {E(GL21, (1, 3, 1)): ONE,
                                E(GL21, (1, 2, 1), (2, 3, 1)): v_power(-1)}
    assert data['witness'] is None


def test_canonical_case_nine(capsys):
    status, data = run_json(capsys, 'canonical', '--m', '2', '--n', '2',
                            '--matrix', 'E[1,2]+E[1,3]+E[1,4]+E[3,4]',
                            '--witness')
    assert status == 0
    record = CanonicalRecord.from_json(data)
    assert len(record.expansion) == 4
    assert record.expansion[E(GL22, (1, 2, 3), (2, 3, 1), (2, 4, 1),
                              (3, 4, 1))] == v_power(-6)
    assert len(record.witness) == 3


def test_symbolic_multiplicity(capsys):
    status, data = run_json(capsys, 'canonical', '--matrix',
                            'aE[1,2]+E[1,3]', '--let', 'a=2')
    assert status == 0
    record = CanonicalRecord.from_json(data)
    assert record.expansion[E(GL21, (1, 2, 3), (2, 3, 1))] == v_power(-3)


def test_empty_matrix_is_identity(capsys):
    status, data = run_json(capsys, 'canonical', '--matrix', '')
    assert status == 0
    record = CanonicalRecord.from_json(data)
    assert record.expansion == {SuperMatrix.zero(GL21): ONE}


def test_text_and_latex(capsys):
    status, out, _ = run(capsys, 'canonical', '--matrix', 'E[1,3]',
                         '--format', 'text')
    assert status == 0
    assert out.startswith('E[1,3]: ')
    status, out, _ = run(capsys, 'canonical', '--matrix', 'E[1,3]',
                         '--format', 'latex')
    assert status == 0
    assert out.startswith('C_{')


def test_all_upto_norm(capsys):
    status, data = run_json(capsys, 'canonical', '--all-upto-norm', '2')
    assert status == 0
    assert len(data) == 5
    assert all(CanonicalRecord.from_json(item).expansion for item in data)


@pytest.mark.parametrize('argv', [
    ['canonical', '--matrix', '2E[1,3]'],
    ['canonical', '--matrix', 'E[1]'],
    ['canonical', '--matrix', 'aE[1,2]'],
    ['canonical', '--matrix', 'E[1,2]', '--let', 'a'],
    ['canonical', '--matrix', 'E[1,2]+E[2,1]'],
    ['canonical', '--all-upto-norm', '-1'],
    ['schur', 'mult', '--left', 'E[1,1]', '--right', 'E[1,2]+E[2,2]'],
    ['tableaux', 'count', '--shape', '1,x'],
])
def test_input_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert err.startswith('error: ')
    assert out == ''


def test_cache_commands(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    status, _, _ = run(capsys, 'canonical', '--matrix', 'E[1,3]')
    assert status == 0
    status, info = run_json(capsys, 'cache', 'info')
    assert status == 0
    assert info['records'] == 1
    status, again = run_json(capsys, 'canonical', '--matrix', 'E[1,3]',
                             '--cache-dir', str(tmp_path))
    assert again['target'] == E(GL21, (1, 3, 1)).to_json()
    status, cleared = run_json(capsys, 'cache', 'clear')
    assert status == 0
    assert cleared['removed'] == 1
    assert list(tmp_path.iterdir()) == []


def test_cache_needs_a_directory(capsys, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    status, _, err = run(capsys, 'cache', 'info')
    assert status == 2
    assert CACHE_ENV in err


def test_corrupt_cache_reports_path(capsys, tmp_path):
    path = tmp_path / 'broken'
    path.mkdir()
    status, _, _ = run(capsys, 'canonical', '--matrix', 'E[1,3]',
                       '--cache-dir', str(path))
    assert status == 0
    record = next(path.iterdir())
    record.write_text(u'[]')
    status, _, err = run(capsys, 'canonical', '--matrix', 'E[1,3]',
                         '--cache-dir', str(path))
    assert status == 2
    assert str(record) in err


@pytest.mark.parametrize('argv', [
    ['verify', 'golden-gl21', '--a-max', '2'],
    ['verify', 'golden-gl22', '--a-max', '1', '--f-max', '1'],
    ['verify', 'pbw', '--m', '2', '--n', '1', '--entry-max', '2',
     '--axioms'],
    ['verify', 'serre', '--m', '2', '--n', '1', '--norm-max', '3', '--r',
     '2'],
    ['verify', 'thm54', '--m', '2', '--n', '1', '--r', '2'],
    ['verify', 'stab', '--m', '2', '--n', '1', '--max-size', '1'],
    ['verify', 'stab', '--matrix', 'E[2,1]', '--h', '1', '--j', '0,1,0'],
])
def test_verify_suites(capsys, argv):
    status, data = run_json(capsys, *argv)
    assert status == 0
    assert data['passed'] is True


def test_schur_commands(capsys):
    status, data = run_json(capsys, 'schur', 'mult', '--left', 'E[1,1]',
                            '--right', 'E[1,2]')
    assert status == 0
    assert len(data['terms']) == 1
    assert data['r'] == 1
    status, out, _ = run(capsys, 'schur', 'xi', '--matrix', 'E[1,1]+E[2,1]',
                         '--format', 'text')
    assert status == 0
    assert out.strip() == '(1)*[E[1,1]+E[2,1]]'
    status, data = run_json(capsys, 'schur', 'verify-thm54', '--matrix',
                            'E[2,1]+E[3,1]', '--r', '2')
    assert status == 0
    assert data['passed']
    status, data = run_json(capsys, 'schur', 'verify-stab', '--matrix',
                            'E[2,1]', '--h', '2')
    assert status == 0
    assert sorted(data['levels']) == ['2', '3', '4']


def test_tableaux_count(capsys):
    status, data = run_json(capsys, 'tableaux', 'count', '--m', '1', '--n',
                            '1', '--shape', '1,1')
    assert status == 0
    assert data['total'] == 2
    assert data['in_hook']
    status, data = run_json(capsys, 'tableaux', 'count', '--shape', '2,1',
                            '--content', '2,1,0')
    assert data['count'] == 1
    assert data['tableaux'] == [[[1, 1], [2]]]


def test_max_level_must_be_an_integer(capsys, monkeypatch):
    monkeypatch.setenv(MAX_LEVEL_ENV, 'six')
    status, _, err = run(capsys, 'schur', 'xi', '--matrix', 'E[1,1]')
    assert status == 2
    assert MAX_LEVEL_ENV in err


def test_missing_command():
    with pytest.raises(SystemExit):
        main([])
