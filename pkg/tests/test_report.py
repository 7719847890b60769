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
"""Tests of reports and their serialization."""

from fractions import Fraction

import pytest

from grpd.core.errors import SingularMatrix
from grpd.core.linalg import Mat
from grpd.core.report import Report, emit_report, format_witness


def test_witnesses_are_kept_for_failures_only():
    report = Report("demo", instance="x", seed=1)
    report.check("a", True, 0, witness=lambda: {"never": 1})
    report.check("a", False, 1, witness=lambda: {"value": Mat([[1, "1/2"]])})
    assert report.records[0].witness == {}
    assert report.failures[0].witness["value"] == Mat([[1, "1/2"]])
    assert report.counts() == {"a": (1, 1)}
    assert not report.ok


def test_guard_records_errors_as_failures():
    report = Report("demo")

    def singular():
        raise SingularMatrix("no inverse")

    assert not report.guard("inverse", 3, singular)
    assert report.failures[0].witness == {"error": "SingularMatrix: no inverse"}
    assert report.guard("pair", 4, lambda: (True, {"unused": 0}))


def test_guard_lets_other_errors_through():
    with pytest.raises(KeyError):
        Report("demo").guard("lookup", 0, lambda: {}["missing"])


def test_format_witness():
    assert format_witness(Mat([[1], ["-1/2"]])) == "2x1[[1],[-1/2]]"
    assert format_witness(Fraction(3, 4)) == "3/4"
    assert format_witness(("a", 2)) == "(a,2)"


def test_machine_format():
    report = Report("check", instance="inst", seed=9)
    report.check("good", True, 0)
    report.fail("bad", arrow="g", value=Mat([[2]]))
    report.note("a note")
    lines = emit_report(report, "machine").decode("utf-8").splitlines()
    assert lines == [
        "record\tgood\tinst\t9\t0\tPASS\t-",
        "record\tbad\tinst\t9\t-\tFAIL\tarrow=g;value=1x1[[2]]",
        "note\ta note",
        "summary\tcheck\tinst\t9\t2\t1\t1",
    ]


def test_text_format():
    report = Report("validate", instance="inst")
    report.check("good", True)
    text = emit_report(report, "text").decode("utf-8")
    assert "good" in text
    assert text.rstrip().endswith("validate inst seed=-: 1 checks, 1 passed, 0 failed")
    with pytest.raises(ValueError):
        emit_report(report, "yaml")


def test_merge_keeps_order():
    first, second = Report("a"), Report("b")
    first.check("x", True)
    second.check("y", False)
    second.note("n")
    assert [r.check for r in first.merge(second).records] == ["x", "y"]
    assert first.notes == ["n"]


def test_empty_report_has_only_a_summary():
    out = emit_report(Report("validate", instance="inst"), "machine")
    assert out == b"summary\tvalidate\tinst\t-\t0\t0\t0\n"
