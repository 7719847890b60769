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
"""t-bisection frames, the flip isomorphism and frames of the dual VB-groupoid."""

from dataclasses import dataclass, field

from grpd.core.errors import NotComposable
from grpd.core.frames import BasePair, SFrame
from grpd.core.gl2 import GL2Element, gl2_matrix
from grpd.core.linalg import Mat, mat_inv, rank, solve_unique
from grpd.core.vb_groupoid import VBGroupoid, vbg_dual

__all__ = [
    "TFrame",
    "TBasePair",
    "frame_is_tbis",
    "frame_flip_T",
    "frame_psi",
    "tframe_psi",
    "tframe_delta",
    "tframe_bs",
    "tframe_bt",
    "tframe_bm",
    "tframe_bu",
    "tframe_bi",
    "tframe_act",
    "flip_pair",
    "frame_dual",
    "dual_pair",
]


@dataclass(frozen=True)
class TFrame:
    """A frame Psi of the fiber at a in coordinates (u, z), u in Q^k, z in Q^l.

    The last l columns span ker T[a]; the first k columns are transverse to ker S[a].
    """
    vb: VBGroupoid = field(compare=False, repr=False)
    a: str
    Psi: Mat

    @property
    def base_block(self):
        return self.Psi.cols_range(0, self.vb.k)

    @property
    def core_block(self):
        return self.Psi.cols_range(self.vb.k, self.vb.n)


@dataclass(frozen=True)
class TBasePair:
    """Frames of the base fiber and of C_x, in the order t-frames use them."""
    x: str
    phi_b: Mat
    phi_c: Mat


def frame_is_tbis(v: VBGroupoid, a, Psi: Mat) -> bool:
    if Psi.shape != (v.n, v.n) or rank(Psi) != v.n:
        return False
    base = Psi.cols_range(0, v.k)
    core = Psi.cols_range(v.k, v.n)
    return (v.T[a] @ core).is_zero() and rank(v.S[a] @ base) == v.k


def frame_flip_T(l, k) -> Mat:
    """(w_1..w_l, v_1..v_k) -> (v_k..v_1, w_l..w_1)."""
    return Mat.reversal(l + k)


def frame_psi(f: SFrame) -> TFrame:
    """Psi(Phi) = i o Phi o T at g^-1."""
    v = f.vb
    return TFrame(v, v.base.inv[f.g], v.Inv[f.g] @ f.Phi @ frame_flip_T(v.l, v.k))


def tframe_psi(t: TFrame) -> SFrame:
    v = t.vb
    return SFrame(v, v.base.inv[t.a], v.Inv[t.a] @ t.Psi @ frame_flip_T(v.l, v.k))


def flip_pair(p: BasePair) -> TBasePair:
    return TBasePair(p.x, p.phi_b @ Mat.reversal(p.phi_b.rows), p.phi_c @ Mat.reversal(p.phi_c.rows))


def tframe_delta(t: TFrame) -> Mat:
    """delta with s(Psi(0, z)) = s(Psi(delta z, 0))."""
    S = t.vb.S[t.a]
    return solve_unique(S @ t.base_block, S @ t.core_block)


def tframe_bs(t: TFrame) -> TBasePair:
    v = t.vb
    gpd = v.base
    target = gpd.tgt[t.a]
    sheared = t.Psi @ Mat.vstack(tframe_delta(t), -Mat.identity(v.l))
    translated = v.right_translation_map(gpd.inv[t.a], t.a) @ sheared
    return TBasePair(target, v.T[t.a] @ t.base_block, v.core_coordinates(target, translated))


def tframe_bt(t: TFrame) -> TBasePair:
    v = t.vb
    gpd = v.base
    source = gpd.src[t.a]
    translated = v.left_translation_map(gpd.inv[t.a], t.a) @ t.core_block
    core = v.Inv[gpd.unit[source]] @ translated
    return TBasePair(source, v.S[t.a] @ t.base_block, v.core_coordinates(source, core))


def tframe_bm(x: TFrame, y: TFrame) -> TFrame:
    """Psi(u, z) = m(y(u, 0), x(u, z)) at a_y a_x, defined when tbs(x) = tbt(y)."""
    v = x.vb
    ya = v.base.compose(y.a, x.a)
    if tframe_bs(x) != tframe_bt(y):
        raise NotComposable(f"tbs of the frame at {x.a} differs from tbt of the frame at {y.a}")
    stacked = Mat.block([[y.base_block, Mat.zeros(v.n, v.l)], [x.base_block, x.core_block]])
    return TFrame(v, ya, v.Mul[(y.a, x.a)] @ stacked)


def tframe_bu(v: VBGroupoid, q: TBasePair) -> TFrame:
    u = v.base.unit[q.x]
    return TFrame(v, u, Mat.hstack(v.U[q.x] @ q.phi_b, v.Inv[u] @ v.core_bases[q.x] @ q.phi_c))


def tframe_bi(t: TFrame) -> TFrame:
    """Psi'(u, z) = i(Psi(u + delta z, -z)) at a^-1."""
    v = t.vb
    shear = Mat.block([[Mat.identity(v.k), tframe_delta(t)], [Mat.zeros(v.l, v.k), -Mat.identity(v.l)]])
    return TFrame(v, v.base.inv[t.a], v.Inv[t.a] @ t.Psi @ shear)


def tframe_act(e: GL2Element, t: TFrame) -> TFrame:
    """Left action X . Psi = Psi o T o X^T o T with X the transposed block matrix of e."""
    flip = frame_flip_T(e.l, e.k)
    return TFrame(t.vb, t.a, t.Psi @ flip @ gl2_matrix(e) @ flip)


def frame_dual(f: SFrame, dual: VBGroupoid = None) -> TFrame:
    """The dual frame Phi^-T, a t-frame of the dual VB-groupoid."""
    if dual is None:
        dual = vbg_dual(f.vb)
    return TFrame(dual, f.g, mat_inv(f.Phi).T)


def dual_pair(p: BasePair) -> TBasePair:
    """(phi_c, phi_b) -> (phi_c^-T, -phi_b^-T) on the dual fibers."""
    return TBasePair(p.x, mat_inv(p.phi_c).T, -mat_inv(p.phi_b).T)
