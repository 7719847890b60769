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
"""Round-trip suite: associated bundles, frames of bundle points, spec files and anchored complexes."""

import json

from grpd.core.errors import GrpdError
from grpd.core.pb_action import associated_vb, roundtrip_frames
from grpd.core.report import Report
from grpd.core.suite import Suite
from grpd.core.vb_groupoid import vbg_from_anchored, vbg_same_structure, vbg_to_anchored, vbg_validate
from grpd.data.spec_reader import spec_from_dict, spec_to_dict
from grpd.suites import register_suite
from grpd.utils.args import str2bool


@register_suite("roundtrip")
class RoundtripSuite(Suite):
    """Both directions of the frame bundle / associated bundle correspondence."""

    @classmethod
    def add_cmdline_args(cls, parser):
        group = parser.add_argument_group("Roundtrip")
        group.add_argument("--representative_changes", type=int, default=20,
                           help="The number of representative changes per associated-bundle check.")
        group.add_argument("--check_serialization", type=str2bool, default=True,
                           help="Whether to write the instance in the explicit spec form and read it back.")
        return group

    def __init__(self, args):
        super(RoundtripSuite, self).__init__(args)
        self.representative_changes = args.get("representative_changes", 20)
        self.check_serialization = args.get("check_serialization", True)

    def run(self, vb, sample) -> Report:
        report = Report("roundtrip", instance=vb.name, seed=self.seed)
        bundle = associated_vb(sample, max(self.trials, self.representative_changes), self.seed,
                               strict=False, instance=vb.name)
        report.merge(bundle.report)
        report.merge(roundtrip_frames(sample, self.trials, self.seed + 1, instance=vb.name, bundle=bundle))
        if self.check_serialization:
            text = json.dumps(spec_to_dict(vb))
            report.guard("serialization", None, lambda: vbg_same_structure(spec_from_dict(json.loads(text)), vb))
        if vb.base.is_unit_groupoid():
            self._check_anchored(report, vb)
        return report

    @staticmethod
    def _check_anchored(report, vb):
        try:
            anchored = vbg_to_anchored(vb)
            rebuilt = vbg_from_anchored(anchored, name=vb.name)
        except GrpdError as err:
            report.fail("anchored_roundtrip", error=str(err))
            return
        report.check("anchored_valid", vbg_validate(rebuilt).ok)
        report.check("anchored_roundtrip", vbg_to_anchored(rebuilt) == anchored,
                     witness=lambda: {"points": anchored.points})
        report.check("anchored_rank", rebuilt.rank == vb.rank)
