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
"""Action suite: the 2-action of GL(l, k) on the frames, principality and section translation."""

from grpd.core.gl2 import gl2_t21, gl2_u21
from grpd.core.pb_action import act2, principality_check, section_translation, verify_2action
from grpd.core.report import Report
from grpd.core.sampling import random_bisection
from grpd.core.suite import Suite
from grpd.suites import register_suite
from grpd.utils.args import str2bool


def _perturbed_action(f, e):
    """Acts by the 21-unit of t21(e), dropping J."""
    return act2(f, gl2_u21(gl2_t21(e)))


@register_suite("action")
class ActionSuite(Suite):
    """The 2-action axioms, fiberwise bijectivity and translation by sections."""

    @classmethod
    def add_cmdline_args(cls, parser):
        group = parser.add_argument_group("Action")
        group.add_argument("--perturbed_action", type=str2bool, default=True,
                           help="Whether to check that a perturbed action is rejected.")
        return group

    def __init__(self, args):
        super(ActionSuite, self).__init__(args)
        self.perturbed_action = args.get("perturbed_action", True)

    def run(self, vb, sample) -> Report:
        report = Report("action", instance=vb.name, seed=self.seed)
        if sample.is_empty():
            report.note("empty frame sample; action checks skipped")
            return report
        report.merge(verify_2action(sample, self.trials, self.seed, instance=vb.name))
        report.merge(principality_check(sample, self.trials, self.seed + 1, instance=vb.name))

        rng = self.rng("sections")
        moments = sample.moments()
        units = random_bisection(rng, moments, with_j=False)
        generic = random_bisection(rng, moments)
        report.merge(section_translation(sample, units.__getitem__, self.trials, self.seed + 2,
                                         instance=vb.name))
        report.merge(section_translation(sample, generic.__getitem__, self.trials, self.seed + 3,
                                         check_morphism=False, instance=vb.name))

        if self.perturbed_action and vb.l > 0 and vb.k > 0:
            perturbed = verify_2action(sample, self.trials, self.seed, action=_perturbed_action, instance=vb.name)
            report.check("perturbed_action_detected", not perturbed.ok,
                         witness=lambda: {"records": len(perturbed)})
        return report
