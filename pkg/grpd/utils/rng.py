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
"""SplitMix64 random number generator.

All randomness of grpd flows from one 64-bit seed through this generator, so samples and
reports are reproducible on every platform:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

with every operation taken modulo 2^64.
"""

import os

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

__all__ = ["SplitMix64", "default_seed"]


def default_seed(fallback=0):
    """The seed given by GRPD_SEED, else `fallback`."""
    value = os.environ.get("GRPD_SEED")
    if value is None or value.strip() == "":
        return fallback
    try:
        return int(value, 0) & MASK64
    except ValueError:
        raise ValueError(f"GRPD_SEED must be an integer, got {value!r}")


class SplitMix64(object):
    """A deterministic 64-bit generator with a small `random.Random`-like surface."""

    def __init__(self, seed=0):
        self.seed = seed & MASK64
        self.state = self.seed

    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, n):
        """Uniform integer in [0, n), by rejection of the biased tail."""
        if n <= 0:
            raise ValueError(f"randbelow needs a positive bound, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def randint(self, a, b):
        """Uniform integer in [a, b]."""
        if b < a:
            raise ValueError(f"Empty range [{a}, {b}]")
        return a + self.randbelow(b - a + 1)

    def choice(self, seq):
        seq = list(seq)
        if not seq:
            raise IndexError("Cannot choose from an empty sequence")
        return seq[self.randbelow(len(seq))]

    def spawn(self, label):
        """An independent stream derived from this seed and a label."""
        mixed = self.seed
        for ch in str(label):
            mixed = SplitMix64(mixed ^ ord(ch)).next_u64()
        return SplitMix64(mixed)
