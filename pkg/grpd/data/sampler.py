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
"""Seeded frame samples."""

import logging

from grpd.core.pb_action import SampledPB
from grpd.core.sampling import random_basepair, random_sframe
from grpd.core.vb_groupoid import VBGroupoid
from grpd.utils.rng import SplitMix64

__all__ = ["DEFAULT_PER_ARROW", "DEFAULT_BASEPAIRS", "sample_frames"]

logger = logging.getLogger(__name__)

DEFAULT_PER_ARROW = 8
DEFAULT_BASEPAIRS = 4


def sample_frames(v: VBGroupoid, seed, per_arrow=DEFAULT_PER_ARROW, basepairs=DEFAULT_BASEPAIRS) -> SampledPB:
    """Random s-frames per arrow and base pairs per object.

    Every arrow and object draws from its own stream spawned from `seed`, so the sample
    at one arrow does not depend on the others.
    """
    if per_arrow < 0 or basepairs < 0:
        raise ValueError(f"Sample sizes must be non-negative, got {per_arrow} and {basepairs}")
    root = SplitMix64(seed)
    sample = SampledPB(v, seed)
    for g in v.base.arrows:
        rng = root.spawn(f"frames:{g}")
        sample.frames[g] = [random_sframe(rng, v, g) for _ in range(per_arrow)]
    for x in v.base.objects:
        rng = root.spawn(f"basepairs:{x}")
        sample.basepairs[x] = [random_basepair(rng, v, x) for _ in range(basepairs)]
    if sample.is_empty():
        logger.warning("Empty frame sample for %s; frame checks pass vacuously", v.name)
    else:
        logger.debug("Sampled %d frames of %s with seed %d", len(sample.all_frames()), v.name, seed)
    return sample
