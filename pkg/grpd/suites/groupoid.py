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
"""Groupoid suite: the frame groupoid, the F bijection and the fat groupoid."""

from grpd.core.fat_groupoid import (
    fat_act_base,
    fat_act_core,
    fat_compose,
    fat_inverse,
    fat_is_member,
    fat_unit,
)
from grpd.core.frames import (
    basepair_moment,
    fat_act_pair,
    frame_bi,
    frame_bm,
    frame_bs,
    frame_bt,
    frame_bu,
    frame_dphi,
    frame_F,
    frame_F_inv,
    frame_is_sbis,
)
from grpd.core.linalg import rank
from grpd.core.report import Report
from grpd.core.sampling import (
    random_basepair,
    random_fat,
    random_frame_with_target,
    random_invertible,
    random_matrix,
)
from grpd.core.suite import Suite
from grpd.core.vb_groupoid import vbg_validate
from grpd.suites import register_suite


def _invertible(m):
    return rank(m) == m.rows


@register_suite("groupoid")
class GroupoidSuite(Suite):
    """Groupoid axioms of bs, bt, bm, bu and bi on random composable frames."""

    def run(self, vb, sample) -> Report:
        report = Report("groupoid", instance=vb.name, seed=self.seed)
        validation = vbg_validate(vb)
        report.check("vb_axioms", validation.ok, witness=lambda: {"violations": len(validation.failures)})
        report.merge(validation)
        if sample.is_empty():
            report.note("empty frame sample; frame checks skipped")
            return report
        gpd = vb.base
        for f in sample.all_frames():
            source, target = frame_bs(f), frame_bt(f)
            report.check("sample_sbis", frame_is_sbis(vb, f.g, f.Phi), witness=lambda: {"arrow": f.g})
            report.check("induced_frames_invertible",
                         all(_invertible(m) for m in (source.phi_c, source.phi_b, target.phi_c, target.phi_b)),
                         witness=lambda: {"arrow": f.g})

        rng = self.rng("groupoid")
        frames = sample.all_frames()
        for trial in self.trial_range("groupoid"):
            f1 = rng.choice(frames)
            h = rng.choice([a for a in gpd.arrows if gpd.tgt[a] == gpd.src[f1.g]])
            c = rng.choice([a for a in gpd.arrows if gpd.tgt[a] == gpd.src[h]])
            f2 = random_frame_with_target(rng, vb, h, frame_bs(f1))
            f3 = random_frame_with_target(rng, vb, c, frame_bs(f2))
            witness = {"arrows": (f1.g, h, c), "frame": f1.Phi}

            def product_checks():
                f12 = frame_bm(f1, f2)
                return {
                    "product_sbis": lambda: frame_is_sbis(vb, f12.g, f12.Phi),
                    "product_source": lambda: frame_bs(f12) == frame_bs(f2),
                    "product_target": lambda: frame_bt(f12) == frame_bt(f1),
                    "associativity": lambda: frame_bm(f12, f3) == frame_bm(f1, frame_bm(f2, f3)),
                    "unit_law": lambda: (frame_bm(f1, frame_bu(vb, frame_bs(f1))) == f1
                                         and frame_bm(frame_bu(vb, frame_bt(f1)), f1) == f1),
                    "unit_source_target": lambda: (frame_bs(frame_bu(vb, frame_bs(f1))) == frame_bs(f1)
                                                   and frame_bt(frame_bu(vb, frame_bs(f1))) == frame_bs(f1)),
                    "inverse_law": lambda: (frame_bm(f1, frame_bi(f1)) == frame_bu(vb, frame_bt(f1))
                                            and frame_bm(frame_bi(f1), f1) == frame_bu(vb, frame_bs(f1))),
                    "double_inverse": lambda: frame_bi(frame_bi(f1)) == f1,
                    "d_constancy": lambda: (frame_dphi(f1) == frame_dphi(f2) == frame_dphi(f12)
                                            == basepair_moment(vb, frame_bs(f1))
                                            == basepair_moment(vb, frame_bt(f1))),
                    "F_composition": lambda: frame_F(f12)[0] == fat_compose(frame_F(f1)[0], frame_F(f2)[0]),
                }
            try:
                checks = product_checks()
            except ValueError as err:
                report.fail("product_defined", trial, error=str(err), **witness)
                continue
            checks.update(self._bijection_checks(rng, vb, f1))
            checks.update(self._fat_checks(rng, vb, f1, f2, f3))
            if vb.l == 0:
                phi = random_invertible(rng, vb.n)
                checks["rank_0_k_sbis"] = lambda: frame_is_sbis(vb, f1.g, phi)
            for name, thunk in checks.items():
                report.guard(name, trial, lambda t=thunk: (t(), witness))
        return report

    def _bijection_checks(self, rng, vb, f1):
        gpd = vb.base
        fe = random_fat(rng, vb, f1.g)
        p = random_basepair(rng, vb, gpd.src[f1.g])
        return {
            "F_roundtrip_frames": lambda: frame_F_inv(*frame_F(f1)) == f1,
            "F_roundtrip_fat": lambda: frame_F(frame_F_inv(fe, p)) == (fe, p),
            "F_intertwines_target": lambda: frame_bt(f1) == fat_act_pair(*frame_F(f1)),
        }

    def _fat_checks(self, rng, vb, f1, f2, f3):
        gpd = vb.base
        a, b, c = (frame_F(f)[0] for f in (f1, f2, f3))
        e = random_matrix(rng, vb.k, 1)
        core = random_matrix(rng, vb.l, 1)
        unit_t, unit_s = fat_unit(vb, gpd.tgt[f1.g]), fat_unit(vb, gpd.src[f1.g])
        ab = fat_compose(a, b)
        return {
            "fat_membership": lambda: all(fat_is_member(vb, x.g, x.H)
                                          for x in (a, ab, fat_inverse(a), unit_t)),
            "fat_associativity": lambda: fat_compose(ab, c) == fat_compose(a, fat_compose(b, c)),
            "fat_unit_law": lambda: fat_compose(unit_t, a) == a and fat_compose(a, unit_s) == a,
            "fat_inverse_law": lambda: (fat_compose(a, fat_inverse(a)) == unit_t
                                        and fat_inverse(fat_inverse(a)) == a),
            "fat_base_functorial": lambda: fat_act_base(ab, e) == fat_act_base(a, fat_act_base(b, e)),
            "fat_core_functorial": lambda: fat_act_core(ab, core) == fat_act_core(a, fat_act_core(b, core)),
            "fat_unit_acts_trivially": lambda: (fat_act_base(unit_s, e) == e
                                                and fat_act_core(unit_s, core) == core),
        }
