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
"""GL(l, k) suite: the two compositions, the interchange law and the isotropy crossed module."""

from grpd.core.gl2 import (
    gl1_compose,
    gl1_inverse,
    gl1_s10,
    gl1_t10,
    gl1_unit,
    gl2_i20,
    gl2_i21,
    gl2_isotropy_crossed_module,
    gl2_m20,
    gl2_m21,
    gl2_matrix,
    gl2_member,
    gl2_s20,
    gl2_s21,
    gl2_t20,
    gl2_t21,
    gl2_transpose,
    gl2_u20,
    gl2_u21,
    gle_from_gl2,
    gle_member,
)
from grpd.core.linalg import Mat, mat_inv
from grpd.core.report import Report
from grpd.core.sampling import (
    random_crossed_member,
    random_gl1,
    random_gl2,
    random_isotropy,
    random_matrix,
    random_vertical,
)
from grpd.core.suite import Suite
from grpd.suites import register_suite


def parse_ranks(text):
    """"1,1;2,1" -> [(1, 1), (2, 1)]."""
    ranks = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        l, k = (int(x) for x in item.split(","))
        if l < 0 or k < 0:
            raise ValueError(f"Ranks must be non-negative, got {item}")
        ranks.append((l, k))
    return ranks


def _member(e):
    return gl2_member(e.d, e.A, e.J, e.B)


def _presented_composable(e1, e2):
    """s21(e1) = t21(e2) written out: A2 = (I + J1 d)^-1 A1 and B1 = (I + d J2) B2."""
    eye_l, eye_k = Mat.identity(e1.l), Mat.identity(e1.k)
    return (e1.d == e2.d
            and e2.A == mat_inv(eye_l + e1.J @ e1.d) @ e1.A
            and e1.B == (eye_k + e2.d @ e2.J) @ e2.B)


@register_suite("gl2")
class GL2Suite(Suite):
    """Axioms of GL(l, k) on random composable tuples.

    The suite does not depend on the VB-groupoid; it runs for every rank in `--gl2_ranks`.
    """

    @classmethod
    def add_cmdline_args(cls, parser):
        group = parser.add_argument_group("GL2")
        group.add_argument("--gl2_ranks", type=str, default="1,1;2,1;1,2;2,3",
                           help="The ranks (l,k) to check, separated by ';'.")
        group.add_argument("--crossed_module_points", type=int, default=3,
                           help="The number of random base points of the isotropy crossed module.")
        group.add_argument("--gl2_trials", type=int, default=None,
                           help="The trials per rank; defaults to --trials.")
        group.add_argument("--crossed_module_trials", type=int, default=None,
                           help="The trials per crossed module base point; defaults to --trials.")
        return group

    def __init__(self, args):
        super(GL2Suite, self).__init__(args)
        self.ranks = parse_ranks(args.get("gl2_ranks", "1,1;2,1;1,2;2,3"))
        self.crossed_module_points = args.get("crossed_module_points", 3)
        self.gl2_trials = args.get("gl2_trials")
        self.crossed_module_trials = args.get("crossed_module_trials")

    def run(self, vb=None, sample=None) -> Report:
        report = Report("gl2", instance=vb.name if vb is not None else "", seed=self.seed)
        for l, k in self.ranks:
            self._check_rank(report, l, k)
        self._check_crossed_module(report, 2, 1)
        return report

    def _check_rank(self, report, l, k):
        rng = self.rng(f"gl2:{l},{k}")
        for trial in self.trial_range(f"gl2 ({l},{k})", self.gl2_trials):
            d = random_matrix(rng, k, l)
            e1 = random_gl2(rng, d)
            e2 = random_gl2(rng, gl2_s20(e1))
            e3 = random_gl2(rng, gl2_s20(e2))
            v1 = random_vertical(rng, e1)
            v2 = random_vertical(rng, v1)
            g2 = random_gl2(rng, gl2_s20(e1))
            g4 = random_vertical(rng, g2)
            stray = random_gl2(rng, d)
            f1 = random_gl1(rng, d)
            f2 = random_gl1(rng, gl1_s10(f1))
            witness = {"rank": (l, k), "e1": str(e1), "e2": str(e2), "v1": str(v1)}
            checks = {
                "m20_source_target": lambda: (gl2_t20(gl2_m20(e1, e2)) == gl2_t20(e1)
                                              and gl2_s20(gl2_m20(e1, e2)) == gl2_s20(e2)),
                "m20_matrix_product": lambda: gl2_matrix(gl2_m20(e1, e2)) == gl2_matrix(e1) @ gl2_matrix(e2),
                "m20_associativity": lambda: (gl2_m20(gl2_m20(e1, e2), e3)
                                              == gl2_m20(e1, gl2_m20(e2, e3))),
                "m20_unit": lambda: (gl2_m20(gl2_u20(d), e1) == e1
                                     and gl2_m20(e1, gl2_u20(gl2_s20(e1))) == e1),
                "m20_inverse": lambda: (gl2_m20(e1, gl2_i20(e1)) == gl2_u20(d)
                                        and gl2_m20(gl2_i20(e1), e1) == gl2_u20(gl2_s20(e1))
                                        and gl2_i20(gl2_i20(e1)) == e1),
                "m21_source_target": lambda: (gl2_t21(gl2_m21(e1, v1)) == gl2_t21(e1)
                                              and gl2_s21(gl2_m21(e1, v1)) == gl2_s21(v1)),
                "m21_associativity": lambda: (gl2_m21(gl2_m21(e1, v1), v2)
                                              == gl2_m21(e1, gl2_m21(v1, v2))),
                "m21_unit": lambda: (gl2_m21(gl2_u21(gl2_t21(e1)), e1) == e1
                                     and gl2_m21(e1, gl2_u21(gl2_s21(e1))) == e1),
                "m21_inverse": lambda: (gl2_m21(e1, gl2_i21(e1)) == gl2_u21(gl2_t21(e1))
                                        and gl2_m21(gl2_i21(e1), e1) == gl2_u21(gl2_s21(e1))
                                        and gl2_i21(gl2_i21(e1)) == e1),
                "m21_precondition": lambda: all(
                    _presented_composable(e1, other) == (gl2_s21(e1) == gl2_t21(other))
                    for other in (v1, stray)),
                "vertical_pairs_share_s20": lambda: gl2_s20(e1) == gl2_s20(v1),
                "s21_t21_morphisms": lambda: (
                    gl2_s21(gl2_m20(e1, e2)) == gl1_compose(gl2_s21(e1), gl2_s21(e2))
                    and gl2_t21(gl2_m20(e1, e2)) == gl1_compose(gl2_t21(e1), gl2_t21(e2))),
                "interchange": lambda: (gl2_m21(gl2_m20(e1, g2), gl2_m20(v1, g4))
                                        == gl2_m20(gl2_m21(e1, v1), gl2_m21(g2, g4))),
                "membership_preserved": lambda: all(_member(x) for x in (
                    gl2_m20(e1, e2), gl2_i20(e1), gl2_m21(e1, v1), gl2_i21(e1))),
                "transpose_reverses": lambda: (gl2_transpose(gl2_m20(e1, e2))
                                               == gl2_m20(gl2_transpose(e2), gl2_transpose(e1))),
                "gl1_laws": lambda: (gl1_s10(gl1_compose(f1, f2)) == gl1_s10(f2)
                                     and gl1_t10(gl1_compose(f1, f2)) == gl1_t10(f1)
                                     and gl1_compose(gl1_unit(d), f1) == f1
                                     and gl1_compose(f1, gl1_inverse(f1)) == gl1_unit(d)),
                "gle_crosscheck": lambda: self._gle_crosscheck(e1),
            }
            for name, thunk in checks.items():
                report.guard(name, trial, lambda t=thunk: (t(), witness))

    @staticmethod
    def _gle_crosscheck(e):
        cell = gle_from_gl2(e)
        return gle_member(cell.x, cell.y, cell.d_x, cell.d_y, cell.A, cell.B, cell.J, cell.A2, cell.B2)

    def _check_crossed_module(self, report, l, k):
        rng = self.rng(f"crossed_module:{l},{k}")
        for point in range(self.crossed_module_points):
            module = gl2_isotropy_crossed_module(l, k, random_matrix(rng, k, l))
            for trial in self.trial_range(f"crossed module {point}", self.crossed_module_trials):
                J1 = random_crossed_member(rng, module)
                J2 = random_crossed_member(rng, module)
                g = random_isotropy(rng, module)
                witness = {"d": module.d, "J1": J1, "J2": J2, "g": str(g)}

                def equivariance():
                    left = module.boundary(module.conjugate(g, J1))
                    right = gl1_compose(gl1_compose(g, module.boundary(J1)), gl1_inverse(g))
                    return left == right
                checks = {
                    "crossed_module_equivariance": equivariance,
                    "crossed_module_peiffer": lambda: (
                        module.conjugate(module.boundary(J1), J2)
                        == module.multiply(module.multiply(J1, J2), module.inverse(J1))),
                    "boundary_homomorphism": lambda: (
                        module.boundary(module.multiply(J1, J2))
                        == gl1_compose(module.boundary(J1), module.boundary(J2))),
                    "isotropy_closed": lambda: module.is_isotropy(g) and module.is_member(module.conjugate(g, J1)),
                }
                for name, thunk in checks.items():
                    report.guard(name, trial, lambda t=thunk: (t(), witness))
