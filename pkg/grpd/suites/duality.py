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
"""Duality suite: the flip to t-frames and frames of the dual VB-groupoid."""

import logging

from grpd.core.duality import (
    dual_pair,
    flip_pair,
    frame_dual,
    frame_is_tbis,
    frame_psi,
    tframe_act,
    tframe_bi,
    tframe_bm,
    tframe_bs,
    tframe_bt,
    tframe_bu,
    tframe_psi,
)
from grpd.core.errors import ValidationError
from grpd.core.frames import frame_bi, frame_bm, frame_bs, frame_bt, frame_bu, frame_dphi
from grpd.core.gl2 import gl2_matrix
from grpd.core.linalg import mat_inv
from grpd.core.pb_action import act2, pick_composable
from grpd.core.report import Report
from grpd.core.sampling import random_basepair, random_gl2
from grpd.core.suite import Suite
from grpd.core.vb_groupoid import vbg_dual, vbg_same_structure
from grpd.suites import register_suite

logger = logging.getLogger(__name__)


@register_suite("duality")
class DualitySuite(Suite):
    """Psi is an isomorphism of frame groupoids, and dualizing frames is an anti-isomorphism."""

    def run(self, vb, sample) -> Report:
        report = Report("duality", instance=vb.name, seed=self.seed)
        try:
            dual = vbg_dual(vb)
        except ValidationError as err:
            report.fail("dual_defined", error=str(err))
            return report
        report.check("dual_of_dual", vbg_same_structure(vbg_dual(dual), vb))
        for x in vb.base.objects:
            report.check("anchor_transpose", dual.core_anchor(x) == vb.core_anchor(x).T,
                         witness=lambda: {"object": x, "anchor": vb.core_anchor(x)})
        if sample.is_empty():
            report.note("empty frame sample; frame checks skipped")
            return report

        rng = self.rng("duality")
        for trial in self.trial_range("duality"):
            f1, f2 = pick_composable(rng, sample)
            p = random_basepair(rng, vb, vb.base.src[f1.g])
            e = random_gl2(rng, frame_dphi(f1))
            witness = {"pair": (f1.g, f2.g), "frame": f1.Phi}
            checks = {}
            checks.update(self._flip_checks(vb, f1, f2, p, e))
            checks.update(self._dual_checks(vb, dual, f1, f2, p, e))
            for name, thunk in checks.items():
                report.guard(name, trial, lambda t=thunk: (t(), witness))
        logger.debug("duality %s: %d records", vb.name, len(report))
        return report

    @staticmethod
    def _flip_checks(vb, f1, f2, p, e):
        t1, t2 = frame_psi(f1), frame_psi(f2)
        return {
            "psi_involution": lambda: tframe_psi(t1) == f1,
            "psi_tbis": lambda: frame_is_tbis(vb, t1.a, t1.Psi),
            "psi_source": lambda: tframe_bs(t1) == flip_pair(frame_bs(f1)),
            "psi_target": lambda: tframe_bt(t1) == flip_pair(frame_bt(f1)),
            "psi_product": lambda: frame_psi(frame_bm(f1, f2)) == tframe_bm(t1, t2),
            "psi_unit": lambda: frame_psi(frame_bu(vb, p)) == tframe_bu(vb, flip_pair(p)),
            "psi_inverse": lambda: frame_psi(frame_bi(f1)) == tframe_bi(t1),
            "psi_equivariance": lambda: frame_psi(act2(f1, e)) == tframe_act(e, t1),
        }

    @staticmethod
    def _dual_checks(vb, dual, f1, f2, p, e):
        d1, d2 = frame_dual(f1, dual), frame_dual(f2, dual)
        return {
            "dual_tbis": lambda: frame_is_tbis(dual, d1.a, d1.Psi),
            "dual_source": lambda: tframe_bs(d1) == dual_pair(frame_bt(f1)),
            "dual_target": lambda: tframe_bt(d1) == dual_pair(frame_bs(f1)),
            "dual_product": lambda: frame_dual(frame_bm(f1, f2), dual) == tframe_bm(d2, d1),
            "dual_unit": lambda: frame_dual(frame_bu(vb, p), dual) == tframe_bu(dual, dual_pair(p)),
            "dual_inverse": lambda: frame_dual(frame_bi(f1), dual) == tframe_bi(d1),
            "dual_contragredient": lambda: (frame_dual(act2(f1, e), dual).Psi
                                            == d1.Psi @ mat_inv(gl2_matrix(e)).T),
        }
