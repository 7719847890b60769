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
"""Representation suite: the canonical 2-representations of GL(l, k) and their linear actions."""

import logging

from grpd.core.report import Report
from grpd.core.representation import (
    gl2_anchored_representation,
    gl2_graded_representation,
    gl2_two_groupoid,
    linear_action_check,
    linear_action_same,
    linear_action_to_rep,
    rep_check,
    rep_same,
    rep_to_linear_action,
    sample_gl2_cells,
    sample_objects,
)
from grpd.core.suite import Suite
from grpd.core.vb_groupoid import vbg_canonical
from grpd.suites import register_suite
from grpd.suites.gl2 import parse_ranks

logger = logging.getLogger(__name__)


@register_suite("representation")
class RepresentationSuite(Suite):
    """The identity of GL(l, k) as 2-graded and 2-anchored representations.

    The anchored one is turned into a linear 2-action on the canonical VB-groupoid over
    the sampled points and back. Like the gl2 suite it ignores the VB-groupoid.
    """

    @classmethod
    def add_cmdline_args(cls, parser):
        group = parser.add_argument_group("Representation")
        group.add_argument("--representation_cells", type=int, default=None,
                           help="The sampled 2-cells per rank; defaults to --trials.")
        return group

    def __init__(self, args):
        super(RepresentationSuite, self).__init__(args)
        self.ranks = parse_ranks(args.get("gl2_ranks", "1,1;2,1;1,2;2,3"))
        self.cells = args.get("representation_cells")
        if self.cells is None:
            self.cells = self.trials

    def run(self, vb=None, sample=None) -> Report:
        report = Report("representation", instance=vb.name if vb is not None else "", seed=self.seed)
        for l, k in self.ranks:
            self._check_rank(report, l, k)
        return report

    def _check_rank(self, report, l, k):
        rng = self.rng(f"representation:{l},{k}")
        cells = sample_gl2_cells(rng, l, k, self.cells)
        objects = sample_objects(gl2_two_groupoid(), cells)
        points = {d: f"p{i}" for i, d in enumerate(objects)}
        canonical = vbg_canonical(l, k, objects)
        graded = gl2_graded_representation(l, k)
        anchored = gl2_anchored_representation(l, k, points)
        action = rep_to_linear_action(anchored, canonical)
        label = f"GL({l},{k})"
        for rep_report in (rep_check(graded, cells, instance=label),
                           rep_check(anchored, cells, instance=label),
                           linear_action_check(action, cells, instance=label)):
            for record in rep_report.records:
                report.check(record.check, record.passed, record.trial, dict(record.witness, rank=(l, k)))
        back = linear_action_to_rep(action)
        report.guard("action_to_representation", None, lambda: rep_same(back, anchored, cells))
        report.guard("representation_to_action", None, lambda: linear_action_same(
            rep_to_linear_action(back, canonical), action, cells))
        logger.debug("representation %s: %d points", label, len(objects))
