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
"""Elements of the fat groupoid and its representations on the base and the core."""

from dataclasses import dataclass, field

from grpd.core.errors import FatMembershipFailure
from grpd.core.linalg import Mat, Subspace, is_complement, kernel, solve_unique
from grpd.core.vb_groupoid import VBGroupoid

__all__ = [
    "FatElement",
    "fat_is_member",
    "fat_check",
    "fat_compose",
    "fat_unit",
    "fat_inverse",
    "fat_act_base",
    "fat_act_core",
    "fat_action",
]


@dataclass(frozen=True)
class FatElement:
    """A pair (g, H) with H complementary to both ker S[g] and ker T[g]."""
    vb: VBGroupoid = field(compare=False, repr=False)
    g: str
    H: Subspace

    @property
    def source(self):
        return self.vb.base.src[self.g]

    @property
    def target(self):
        return self.vb.base.tgt[self.g]


def fat_is_member(v: VBGroupoid, g, h: Subspace) -> bool:
    if h.ambient_dim != v.n:
        return False
    return is_complement(h, kernel(v.S[g])) and is_complement(h, kernel(v.T[g]))


def fat_check(a: FatElement):
    if not fat_is_member(a.vb, a.g, a.H):
        raise FatMembershipFailure(f"{a.H} is not complementary to ker S and ker T at {a.g}")
    return a


def fat_compose(a: FatElement, b: FatElement) -> FatElement:
    """(g, H_g)(h, H_h) = (gh, m(H_g, H_h))."""
    v = a.vb
    gh = v.base.compose(a.g, b.g)
    hg, hh = a.H.basis, b.H.basis
    pairs = kernel(Mat.hstack(v.S[a.g] @ hg, -(v.T[b.g] @ hh))).basis
    fibered = Mat.vstack(hg @ pairs.rows_range(0, hg.cols), hh @ pairs.rows_range(hg.cols, pairs.rows))
    return FatElement(v, gh, Subspace.span(v.Mul[(a.g, b.g)] @ fibered))


def fat_unit(v: VBGroupoid, x) -> FatElement:
    return FatElement(v, v.base.unit[x], Subspace.span(v.U[x]))


def fat_inverse(a: FatElement) -> FatElement:
    v = a.vb
    return FatElement(v, v.base.inv[a.g], Subspace.span(v.Inv[a.g] @ a.H.basis))


def fat_act_base(a: FatElement, e: Mat) -> Mat:
    """t o (s restricted to H)^-1 applied to base vectors at s(g)."""
    v = a.vb
    lifted = a.H.basis @ solve_unique(v.S[a.g] @ a.H.basis, e)
    return v.T[a.g] @ lifted


def fat_act_core(a: FatElement, c: Mat) -> Mat:
    """alpha o c o 0_{g^-1}, with alpha in H over t(c); core coordinates in and out."""
    v = a.vb
    gpd = v.base
    x, y = gpd.src[a.g], gpd.tgt[a.g]
    g_inv = gpd.inv[a.g]
    core = v.core_bases[x] @ c
    alpha = a.H.basis @ solve_unique(v.S[a.g] @ a.H.basis, v.T[gpd.unit[x]] @ core)
    translated = v.right_translation_map(g_inv, gpd.unit[x]) @ core
    product = v.Mul[(a.g, g_inv)] @ Mat.vstack(alpha, translated)
    return v.core_coordinates(y, product)


def fat_action(a: FatElement):
    """Matrices of the core and base representations of a, in that order."""
    return fat_act_core(a, Mat.identity(a.vb.l)), fat_act_base(a, Mat.identity(a.vb.k))
