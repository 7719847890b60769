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
"""Check records and reports."""

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from termcolor import colored

from grpd.core.errors import GrpdError
from grpd.core.linalg import Mat, format_fraction

__all__ = ["CheckRecord", "Report", "emit_report", "format_witness"]


def format_witness(value) -> str:
    """Render a witness value; matrices become rational grids."""
    if isinstance(value, Mat):
        rows = ",".join("[" + ",".join(row) + "]" for row in value.to_grid())
        return f"{value.rows}x{value.cols}[{rows}]"
    if isinstance(value, dict):
        return "{" + ";".join(f"{k}={format_witness(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(format_witness(v) for v in value) + ")"
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return format_fraction(value)
    return str(value)


@dataclass
class CheckRecord:
    """One checked identity."""
    check: str
    instance: str
    seed: Optional[int]
    trial: Optional[int]
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    """A sequence of check records produced by one command."""
    command: str
    instance: str = ""
    seed: Optional[int] = None
    records: List[CheckRecord] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def check(self, name, passed, trial=None, witness=None):
        """Record the outcome of one identity; witnesses are kept for failures only."""
        passed = bool(passed)
        if passed or witness is None:
            witness = {}
        elif callable(witness):
            witness = witness()
        self.records.append(CheckRecord(name, self.instance, self.seed, trial, passed, witness))
        return passed

    def fail(self, name, trial=None, **witness):
        return self.check(name, False, trial, witness)

    def guard(self, name, trial, thunk, errors=(GrpdError,)):
        """Record thunk() as the outcome, where thunk returns a bool or (bool, witness).

        A raised error from `errors` is recorded as a failure.
        """
        try:
            outcome = thunk()
        except errors as err:
            return self.fail(name, trial, error=f"{type(err).__name__}: {err}")
        if isinstance(outcome, tuple):
            passed, witness = outcome
            return self.check(name, passed, trial, witness)
        return self.check(name, outcome, trial)

    def note(self, message):
        self.notes.append(message)

    def merge(self, other: "Report"):
        self.records.extend(other.records)
        self.notes.extend(other.notes)
        return self

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    @property
    def ok(self):
        return not self.failures

    def __len__(self):
        return len(self.records)

    def __bool__(self):
        return True

    def counts(self):
        """(passed, failed) per check name, in first-seen order."""
        counts = OrderedDict()
        for record in self.records:
            passed, failed = counts.get(record.check, (0, 0))
            if record.passed:
                passed += 1
            else:
                failed += 1
            counts[record.check] = (passed, failed)
        return counts


def _field(value):
    return "-" if value is None else str(value)


def emit_report(report: Report, fmt="text", color=False) -> bytes:
    """Serialize a report.

    `machine`: one tab separated record per line, then a summary line.
    `text`: a per-check table, failure details and a summary line.
    """
    total = len(report.records)
    failed = len(report.failures)
    lines = []
    if fmt == "machine":
        for r in report.records:
            witness = ";".join(f"{k}={format_witness(v)}" for k, v in r.witness.items())
            lines.append("\t".join([
                "record", r.check, r.instance, _field(r.seed), _field(r.trial),
                "PASS" if r.passed else "FAIL", witness or "-"]))
        for message in report.notes:
            lines.append("\t".join(["note", message]))
        lines.append("\t".join([
            "summary", report.command, report.instance, _field(report.seed),
            str(total), str(total - failed), str(failed)]))
    elif fmt == "text":
        def paint(text, colour):
            return colored(text, colour) if color else text

        if total > 0:
            lines.append(f"{'check':<40} {'passed':>8} {'failed':>8}")
            for name, (n_pass, n_fail) in report.counts().items():
                status = paint("PASS", "green") if n_fail == 0 else paint("FAIL", "red")
                lines.append(f"{name:<40} {n_pass:>8} {n_fail:>8}  {status}")
        for r in report.failures:
            lines.append(paint(f"FAIL {r.check} trial={_field(r.trial)}", "red"))
            for k, v in r.witness.items():
                lines.append(f"    {k} = {format_witness(v)}")
        for message in report.notes:
            lines.append(paint(f"note: {message}", "yellow"))
        summary = (f"{report.command} {report.instance} seed={_field(report.seed)}: "
                   f"{total} checks, {total - failed} passed, {failed} failed")
        lines.append(paint(summary, "green" if failed == 0 else "red"))
    else:
        raise ValueError(f"Unknown report format: {fmt}")
    return ("\n".join(lines) + "\n").encode("utf-8")
