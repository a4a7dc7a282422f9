"""On-disk memo of canonical basis records.

One JSON file per record, named {m}-{n}-{side}-{sha1 of the rows}.json.
Files are written to a temporary name in the same directory and renamed
into place, so readers never see a partial record.

Basic Usage::

    cache = RecordCache('~/.glmn_cb')
    record = cache.canonical(parse_matrix('E[1,3]', SuperShape(2, 1)))
    print(cache.info())
"""

# The MIT License (MIT)
#
# Copyright (c) 2016 GTRC.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import hashlib
import json
import logging
import os
import tempfile
import time

from glmn_cb.uplus.cb_canonical import CanonicalRecord, canonical, \
    du_algorithm

log = logging.getLogger(__name__)


class CacheError(ValueError):
    """A cache file could not be read or written.

    Attributes:
        path: The offending file or directory
    """

    def __init__(self, path, message):
        super(CacheError, self).__init__('{}: {}'.format(path, message))
        self.path = path


def record_key(target, side):
    """Return the file stem for a target matrix and side."""
    digest = hashlib.sha1(json.dumps(target.to_json()).encode('utf-8'))
    return '{}-{}-{}-{}'.format(target.shape.m, target.shape.n, side,
                                digest.hexdigest())


class RecordCache(object):
    """A directory of CanonicalRecord JSON files.

    Attributes:
        directory: Absolute path of the cache directory
    """

    suffix = '.json'

    def __init__(self, directory):
        self.directory = os.path.abspath(os.path.expanduser(directory))

    def path_for(self, target, side=None):
        side = side or ('plus' if target.is_upper() else 'minus')
        return os.path.join(self.directory,
                            record_key(target, side) + self.suffix)

    def _files(self):
        if not os.path.isdir(self.directory):
            return []
        return sorted(os.path.join(self.directory, name)
                      for name in os.listdir(self.directory)
                      if name.endswith(self.suffix))

    def load(self, target):
        """Return the cached record for target, or None on a miss.

        Raises:
            CacheError: The file exists but does not hold a valid record for
                target
        """
        path = self.path_for(target)
        if not os.path.exists(path):
            return None
        try:
            with open(path, 'r') as f:
                record = CanonicalRecord.from_json(json.load(f))
        except (IOError, OSError) as error:
            raise CacheError(path, 'unreadable ({})'.format(error))
        except ValueError as error:
            raise CacheError(path, 'corrupt record ({})'.format(error))
        if record.target != target:
            raise CacheError(path, 'holds {} instead of {}'.format(
                record.target, target))
        return record

    def store(self, record):
        """Write a record atomically and return its path.

        Raises:
            CacheError: The directory cannot be created or written
        """
        path = self.path_for(record.target, record.side)
        temporary = None
        try:
            if not os.path.isdir(self.directory):
                os.makedirs(self.directory)
            handle, temporary = tempfile.mkstemp(dir=self.directory,
                                                 suffix='.tmp')
            with os.fdopen(handle, 'w') as f:
                json.dump(record.to_json(), f, indent=4)
            os.replace(temporary, path)
        except (IOError, OSError) as error:
            raise CacheError(self.directory, 'cannot write ({})'.format(error))
        finally:
            if temporary is not None and os.path.exists(temporary):
                os.remove(temporary)
        return path

    def canonical(self, target, witness=False):
        """Return the record of target, computing and storing it on a miss.

        Args:
            target (SuperMatrix): The matrix A
            witness (bool): Require the monomial correction data, which
                comes from du_algorithm
        """
        start = time.time()
        record = self.load(target)
        if record is not None and (record.witness is not None or
                                   not witness):
            log.debug('cache hit %s (%.3fs)', target, time.time() - start)
            return record
        record = du_algorithm(target) if witness else canonical(target)
        self.store(record)
        log.debug('cache miss %s, computed in %.3fs', target,
                  time.time() - start)
        return record

    def info(self):
        """Return the directory, the number of records and their total size."""
        files = self._files()
        return {'directory': self.directory, 'records': len(files),
                'bytes': sum(os.path.getsize(path) for path in files)}

    def clear(self):
        """Delete every record and return how many were removed."""
        files = self._files()
        for path in files:
            os.remove(path)
        log.debug('cleared %d records from %s', len(files), self.directory)
        return len(files)
