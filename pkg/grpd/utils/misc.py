#   Copyright (c) 2026 grpd Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Miscellaneous utility."""

from collections import OrderedDict
from contextlib import contextmanager
import gzip
import time

__all__ = ["Timer", "open_file"]


class Timer(object):
    """Wall-clock time spent in each suite of a `check` run."""

    def __init__(self):
        self.laps = OrderedDict()

    @contextmanager
    def lap(self, name):
        """Time the block and add it to the total of `name`."""
        start = time.perf_counter()
        try:
            yield
        finally:
            self.laps[name] = self.laps.get(name, 0.0) + time.perf_counter() - start

    @property
    def total(self):
        return sum(self.laps.values())


@contextmanager
def open_file(filename, mode="r"):
    """Open a spec or report file as UTF-8 text, through gzip when it ends with .gz."""
    if str(filename).endswith(".gz"):
        fp = gzip.open(filename, mode + "t", encoding="utf-8")
    else:
        fp = open(filename, mode, encoding="utf-8")
    try:
        yield fp
    finally:
        fp.close()
