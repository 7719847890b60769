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
"""Shared fixtures and the hypothesis profile of the test-suite."""

import os

import hypothesis
import pytest

from grpd.core.groupoid import gpd_pair
from grpd.core.linalg import Mat
from grpd.core.vb_groupoid import vbg_canonical, vbg_dual, vbg_pullback, vbg_trivial_base, vbg_trivial_core
from grpd.utils.rng import SplitMix64

hypothesis.settings.register_profile("grpd", max_examples=50, deadline=None)
hypothesis.settings.register_profile("grpd-ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv("GRPD_HYPOTHESIS_PROFILE", "grpd"))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: full-size check runs, enabled by GRPD_ACCEPTANCE=1")


def pytest_collection_modifyitems(config, items):
    if os.getenv("GRPD_ACCEPTANCE"):
        return
    skip = pytest.mark.skip(reason="set GRPD_ACCEPTANCE=1 to run")
    for item in items:
        if "acceptance" in item.keywords:
            item.add_marker(skip)


def scalar(value):
    return Mat([[value]])


@pytest.fixture
def rng():
    return SplitMix64(20260101)


@pytest.fixture
def canonical_0_1():
    return vbg_canonical(1, 1, [scalar(0), scalar(1)])


@pytest.fixture
def canonical_one():
    """canonical(1, 1) at the single point d = 1, named p0."""
    return vbg_canonical(1, 1, [scalar(1)])


@pytest.fixture
def canonical_2_3():
    points = [
        Mat.zeros(3, 2),
        Mat([[1, 0], [0, 1], [0, 0]]),
        Mat([[1, 2], ["1/2", 0], [0, -1]]),
    ]
    return vbg_canonical(2, 3, points)


@pytest.fixture
def pair2():
    return gpd_pair(2)


@pytest.fixture
def trivial_core(pair2):
    rep = {
        "(1,1)": Mat.identity(2),
        "(2,2)": Mat.identity(2),
        "(2,1)": Mat([[1, 1], [0, 1]]),
        "(1,2)": Mat([[1, -1], [0, 1]]),
    }
    return vbg_trivial_core(pair2, rep)


@pytest.fixture
def trivial_base(pair2):
    rep = {"(1,1)": scalar(1), "(2,2)": scalar(1), "(2,1)": scalar(2), "(1,2)": scalar("1/2")}
    return vbg_trivial_base(pair2, rep)


@pytest.fixture
def pullback(pair2):
    return vbg_pullback(pair2, 1)


EXAMPLES = ["canonical_0_1", "canonical_2_3", "trivial_core", "trivial_base", "pullback"]


@pytest.fixture(params=EXAMPLES + [f"dual:{name}" for name in EXAMPLES])
def instance(request):
    """Every example VB-groupoid and its dual."""
    name = request.param
    if name.startswith("dual:"):
        return vbg_dual(request.getfixturevalue(name[len("dual:"):]))
    return request.getfixturevalue(name)
