import json
import os

import pytest

from glmn_cb.cb_matrices import SuperShape, SuperMatrix
from glmn_cb.uplus.cb_canonical import canonical, du_algorithm
from glmn_cb.cb_cache import CacheError, RecordCache, record_key

GL21 = SuperShape(2, 1)
E13 = SuperMatrix.from_entries(GL21, {(1, 3): 1})
E12 = SuperMatrix.from_entries(GL21, {(1, 2): 1})


def test_record_key():
    key = record_key(E13, 'plus')
    assert key.startswith('2-1-plus-')
    assert key != record_key(E12, 'plus')
    assert record_key(E13, 'minus') != key


def test_miss_then_hit(tmp_path):
    cache = RecordCache(str(tmp_path))
    assert cache.load(E13) is None
    record = cache.canonical(E13)
    assert record == canonical(E13)
    assert os.path.exists(cache.path_for(E13))
    assert cache.info()['records'] == 1
    assert cache.canonical(E13) == record
    assert cache.info()['records'] == 1
    assert cache.info()['bytes'] > 0


def test_witness_upgrade(tmp_path):
    cache = RecordCache(str(tmp_path))
    assert cache.canonical(E13).witness is None
    record = cache.canonical(E13, witness=True)
    assert record.witness is not None
    assert cache.load(E13) == du_algorithm(E13)


def test_minus_side_records(tmp_path):
    cache = RecordCache(str(tmp_path))
    record = cache.canonical(E13.t)
    assert record.side == 'minus'
    assert os.path.basename(cache.path_for(E13.t)).startswith('2-1-minus-')
    assert cache.load(E13.t) == record


def test_clear(tmp_path):
    cache = RecordCache(str(tmp_path / 'records'))
    assert cache.info()['records'] == 0
    assert cache.clear() == 0
    cache.canonical(E13)
    cache.canonical(E12)
    assert cache.clear() == 2
    assert cache.info() == {'directory': str(tmp_path / 'records'),
                            'records': 0, 'bytes': 0}


def test_corrupt_file(tmp_path):
    cache = RecordCache(str(tmp_path))
    path = cache.path_for(E13)
    with open(path, 'w') as f:
        f.write('{not json')
    with pytest.raises(CacheError) as info:
        cache.load(E13)
    assert info.value.path == path
    assert path in str(info.value)
    with pytest.raises(ValueError):
        cache.canonical(E13)


def test_record_for_another_target(tmp_path):
    cache = RecordCache(str(tmp_path))
    with open(cache.path_for(E13), 'w') as f:
        json.dump(canonical(E12).to_json(), f)
    with pytest.raises(CacheError):
        cache.load(E13)


def test_unwritable_directory(tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text(u'')
    cache = RecordCache(str(blocker / 'records'))
    with pytest.raises(CacheError):
        cache.store(canonical(E13))


def test_failed_write_leaves_no_temporary(tmp_path, monkeypatch):
    cache = RecordCache(str(tmp_path))
    record = canonical(E13)
    monkeypatch.setattr(record, 'to_json', lambda: {'target': object()})
    with pytest.raises(TypeError):
        cache.store(record)
    assert list(tmp_path.iterdir()) == []
