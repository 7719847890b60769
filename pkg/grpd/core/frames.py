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
"""s-bisection frames of a VB-groupoid and their groupoid structure."""

from dataclasses import dataclass, field

from grpd.core.errors import FatMembershipFailure, NotComposable, SameObjectRequired
from grpd.core.fat_groupoid import FatElement, fat_action, fat_is_member
from grpd.core.linalg import Mat, Subspace, rank, solve_unique
from grpd.core.vb_groupoid import VBGroupoid

__all__ = [
    "SFrame",
    "BasePair",
    "frame_is_sbis",
    "frame_dphi",
    "frame_bs",
    "frame_bt",
    "frame_bm",
    "frame_bu",
    "frame_bi",
    "frame_F",
    "frame_F_inv",
    "basepair_moment",
    "fat_act_pair",
]


@dataclass(frozen=True)
class SFrame:
    """A frame Phi of the fiber at g: columns (e_i, 0) for the core block, (0, e_j) for the base block."""
    vb: VBGroupoid = field(compare=False, repr=False)
    g: str
    Phi: Mat

    @property
    def core_block(self):
        return self.Phi.cols_range(0, self.vb.l)

    @property
    def base_block(self):
        return self.Phi.cols_range(self.vb.l, self.vb.n)


@dataclass(frozen=True)
class BasePair:
    """Frames of C_x (in core coordinates) and of the base fiber at x."""
    x: str
    phi_c: Mat
    phi_b: Mat


def frame_is_sbis(v: VBGroupoid, g, Phi: Mat) -> bool:
    if Phi.shape != (v.n, v.n) or rank(Phi) != v.n:
        return False
    core = Phi.cols_range(0, v.l)
    base = Phi.cols_range(v.l, v.n)
    return (v.S[g] @ core).is_zero() and rank(v.T[g] @ base) == v.k


def frame_dphi(f: SFrame) -> Mat:
    """The moment value (bt^b)^-1 rho bt^c, computed as (T Phi_b)^-1 T Phi_c."""
    T = f.vb.T[f.g]
    return f.vb.memo(("dphi", f.g, f.Phi), lambda: solve_unique(T @ f.base_block, T @ f.core_block))


def frame_bt(f: SFrame) -> BasePair:
    return f.vb.memo(("bt", f.g, f.Phi), lambda: _frame_bt(f))


def _frame_bt(f: SFrame) -> BasePair:
    v = f.vb
    gpd = v.base
    target = gpd.tgt[f.g]
    translated = v.right_translation_map(gpd.inv[f.g], f.g) @ f.core_block
    return BasePair(target, v.core_coordinates(target, translated), v.T[f.g] @ f.base_block)


def frame_bs(f: SFrame) -> BasePair:
    return f.vb.memo(("bs", f.g, f.Phi), lambda: _frame_bs(f))


def _frame_bs(f: SFrame) -> BasePair:
    v = f.vb
    gpd = v.base
    source = gpd.src[f.g]
    g_inv = gpd.inv[f.g]
    shear = Mat.vstack(-Mat.identity(v.l), frame_dphi(f))
    inverted = v.Inv[f.g] @ f.Phi @ shear
    translated = v.right_translation_map(f.g, g_inv) @ inverted
    return BasePair(source, v.core_coordinates(source, translated), v.S[f.g] @ f.base_block)


def frame_bm(f1: SFrame, f2: SFrame) -> SFrame:
    """Phi(w, v) = m(Phi1(w, v), Phi2(0, v)) at g1 g2."""
    v = f1.vb
    gh = v.base.compose(f1.g, f2.g)
    if frame_bs(f1) != frame_bt(f2):
        raise NotComposable(f"bs of the frame at {f1.g} differs from bt of the frame at {f2.g}")
    stacked = Mat.block([[f1.core_block, f1.base_block], [Mat.zeros(v.n, v.l), f2.base_block]])
    return SFrame(v, gh, v.Mul[(f1.g, f2.g)] @ stacked)


def frame_bu(v: VBGroupoid, p: BasePair) -> SFrame:
    return SFrame(v, v.base.unit[p.x], Mat.hstack(v.core_bases[p.x] @ p.phi_c, v.U[p.x] @ p.phi_b))


def frame_bi(f: SFrame) -> SFrame:
    """Phi'(w, v) = i(Phi(-w, v + d w)) at g^-1."""
    v = f.vb
    shear = Mat.block([[-Mat.identity(v.l), Mat.zeros(v.l, v.k)], [frame_dphi(f), Mat.identity(v.k)]])
    return SFrame(v, v.base.inv[f.g], v.Inv[f.g] @ f.Phi @ shear)


def basepair_moment(v: VBGroupoid, p: BasePair) -> Mat:
    """phi_b^-1 rho_x phi_c, the moment value of frame_bu(p)."""
    return solve_unique(p.phi_b, v.core_anchor(p.x) @ p.phi_c)


def frame_F(f: SFrame):
    return FatElement(f.vb, f.g, Subspace.span(f.base_block)), frame_bs(f)


def frame_F_inv(fe: FatElement, p: BasePair) -> SFrame:
    """The s-frame with fat part fe and source frames p."""
    v = fe.vb
    gpd = v.base
    if not fat_is_member(v, fe.g, fe.H):
        raise FatMembershipFailure(f"{fe.H} is not a fat subspace at {fe.g}")
    source = gpd.src[fe.g]
    if p.x != source:
        raise SameObjectRequired(f"The base pair sits at {p.x}, the arrow {fe.g} starts at {source}")
    g_inv = gpd.inv[fe.g]
    h = fe.H.basis
    restricted = v.S[fe.g] @ h
    core = v.core_bases[source] @ p.phi_c
    lifted = h @ solve_unique(restricted, v.T[gpd.unit[source]] @ core)
    # (R_g)^-1 on the core, solved inside ker S[g^-1]
    kernel_inv = v.source_kernel(g_inv)
    preimage = kernel_inv @ solve_unique(v.right_translation_map(fe.g, g_inv) @ kernel_inv, core)
    core_block = lifted - v.Inv[g_inv] @ preimage
    base_block = h @ solve_unique(restricted, p.phi_b)
    return SFrame(v, fe.g, Mat.hstack(core_block, base_block))


def fat_act_pair(fe: FatElement, p: BasePair) -> BasePair:
    """The fat groupoid acting on base pairs through its core and base representations."""
    if p.x != fe.source:
        raise SameObjectRequired(f"The base pair sits at {p.x}, the arrow {fe.g} starts at {fe.source}")
    core, base = fat_action(fe)
    return BasePair(fe.target, core @ p.phi_c, base @ p.phi_b)
