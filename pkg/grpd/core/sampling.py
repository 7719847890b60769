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
"""Seeded random elements: rationals, matrices, GL(l, k) cells, fat elements and frames."""

from fractions import Fraction
import logging

from grpd.core.errors import SamplingError
from grpd.core.fat_groupoid import FatElement
from grpd.core.frames import BasePair, SFrame, frame_bi, frame_bs, frame_F_inv
from grpd.core.gl2 import GL1Element, GL2Element, gl2_member
from grpd.core.linalg import Mat, Subspace, rank, solve_any, solve_unique

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 200

__all__ = [
    "MAX_ATTEMPTS",
    "random_fraction",
    "random_matrix",
    "random_invertible",
    "random_gl1",
    "random_gl2",
    "random_bisection",
    "random_vertical",
    "random_crossed_member",
    "random_isotropy",
    "random_basepair",
    "random_sframe",
    "random_fat",
    "random_frame_with_target",
    "random_composable_frames",
]


def random_fraction(rng, bound=3, den=3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_matrix(rng, rows, cols, bound=3, den=3):
    return Mat([[random_fraction(rng, bound, den) for _ in range(cols)] for _ in range(rows)], shape=(rows, cols))


def _rejection(label, attempt):
    for i in range(MAX_ATTEMPTS):
        result = attempt()
        if result is not None:
            if i > 0:
                logger.debug("%s accepted after %d rejections", label, i)
            return result
    raise SamplingError(f"Could not sample {label} in {MAX_ATTEMPTS} attempts")


def random_invertible(rng, n):
    def attempt():
        m = random_matrix(rng, n, n)
        return m if rank(m) == n else None
    return _rejection(f"an invertible {n}x{n} matrix", attempt)


def random_gl1(rng, d: Mat) -> GL1Element:
    k, l = d.shape
    return GL1Element(d, random_invertible(rng, l), random_invertible(rng, k))


def random_gl2(rng, d: Mat, with_j=True) -> GL2Element:
    """A random 2-cell with t20 = d."""
    k, l = d.shape

    def attempt():
        J = random_matrix(rng, l, k) if with_j else Mat.zeros(l, k)
        A, B = random_invertible(rng, l), random_invertible(rng, k)
        return GL2Element(d, A, J, B) if gl2_member(d, A, J, B) else None
    return _rejection("a GL(l, k) element", attempt)


def random_bisection(rng, moments, with_j=True):
    """One fixed (A, J, B) placed over every moment value; a section of t20 whose s20 is injective."""
    moments = list(moments)
    if not moments:
        return {}
    k, l = moments[0].shape

    def attempt():
        J = random_matrix(rng, l, k) if with_j else Mat.zeros(l, k)
        A, B = random_invertible(rng, l), random_invertible(rng, k)
        if not all(gl2_member(d, A, J, B) for d in moments):
            return None
        return {d: GL2Element(d, A, J, B) for d in moments}
    return _rejection("a bisection of GL(l, k)", attempt)


def random_vertical(rng, e: GL2Element) -> GL2Element:
    """A random e2 with s21(e) = t21(e2)."""
    eye_l, eye_k = Mat.identity(e.l), Mat.identity(e.k)

    def attempt():
        J = random_matrix(rng, e.l, e.k)
        if rank(eye_l + J @ e.d) != e.l or rank(eye_k + e.d @ J) != e.k:
            return None
        A = solve_unique(eye_l + e.J @ e.d, e.A)
        B = solve_unique(eye_k + e.d @ J, e.B)
        return GL2Element(e.d, A, J, B)
    return _rejection("a composable GL(l, k) element", attempt)


def random_crossed_member(rng, crossed_module) -> Mat:
    """A random J of the isotropy crossed module."""
    def attempt():
        J = random_matrix(rng, crossed_module.l, crossed_module.k)
        return J if crossed_module.is_member(J) else None
    return _rejection("an isotropy 2-cell", attempt)


def random_isotropy(rng, crossed_module, factors=2) -> GL1Element:
    """A product of boundaries of random J, scaled by a nonzero scalar; fixes the base point."""
    d, k, l = crossed_module.d, crossed_module.k, crossed_module.l
    scale = Fraction(0)
    while scale == 0:
        scale = random_fraction(rng)
    g = GL1Element(d, Mat.identity(l) * scale, Mat.identity(k) * scale)
    for _ in range(factors):
        b = crossed_module.boundary(random_crossed_member(rng, crossed_module))
        g = GL1Element(d, g.A @ b.A, g.B @ b.B)
    return g


def random_basepair(rng, v, x) -> BasePair:
    return BasePair(x, random_invertible(rng, v.l), random_invertible(rng, v.k))


def random_sframe(rng, v, g) -> SFrame:
    """Core block: kernel basis of S[g] times an invertible matrix. Base block: a lift of an
    invertible matrix through S[g] plus a kernel perturbation, rejected unless transverse
    to ker T[g]."""
    kernel_basis = v.source_kernel(g)
    core = kernel_basis @ random_invertible(rng, v.l)

    def attempt():
        lift = solve_any(v.S[g], random_invertible(rng, v.k))
        base = lift + kernel_basis @ random_matrix(rng, v.l, v.k)
        return base if rank(v.T[g] @ base) == v.k else None
    base = _rejection(f"an s-bisection frame at {g}", attempt)
    return SFrame(v, g, Mat.hstack(core, base))


def random_fat(rng, v, g) -> FatElement:
    return FatElement(v, g, Subspace.span(random_sframe(rng, v, g).base_block))


def random_frame_with_target(rng, v, h, p: BasePair) -> SFrame:
    """A random s-frame at h whose bt equals p."""
    h_inv = v.base.inv[h]
    return frame_bi(frame_F_inv(random_fat(rng, v, h_inv), p))


def random_composable_frames(rng, v, arrows):
    """Random frames f1, ..., fn at the given arrows with bs(f_i) = bt(f_i+1)."""
    frames = [random_sframe(rng, v, arrows[0])]
    for arrow in arrows[1:]:
        frames.append(random_frame_with_target(rng, v, arrow, frame_bs(frames[-1])))
    return frames
