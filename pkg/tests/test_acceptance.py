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
"""Full-size `check` runs at the sizes of package/check/acceptance.conf."""

import io

import pytest

from grpd.scripts.cli import EXIT_OK, cli_run

FIXTURES = [
    "canonical_1_1.vbg", "canonical_2_3.vbg", "trivcore_pair2.vbg", "trivbase_pair2.vbg", "pullback_pair2.vbg",
    "dual_canonical_1_1.vbg", "dual_canonical_2_3.vbg", "dual_trivcore_pair2.vbg", "dual_trivbase_pair2.vbg",
    "dual_pullback_pair2.vbg",
]
ACCEPTANCE = ["--seed", "7", "--trials", "200", "--per_arrow", "8", "--gl2_trials", "500",
              "--crossed_module_trials", "100", "--representative_changes", "20"]


@pytest.mark.acceptance
@pytest.mark.parametrize("fixture", FIXTURES)
def test_acceptance_profile(fixture):
    code, report = cli_run(["check", fixture, "--suite", "all", *ACCEPTANCE], stdout=io.BytesIO())
    assert code == EXIT_OK, report.failures
    counts = report.counts()
    assert counts["m20_associativity"][0] >= 500 * 4
    assert counts["well_defined"][0] >= 200
    assert counts["equivariance"][0] >= 200
