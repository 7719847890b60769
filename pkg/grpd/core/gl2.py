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
"""The general linear 2-groupoid GL(l, k) and its element-wise counterpart GL(E)."""

from dataclasses import dataclass
from typing import Hashable, Optional

from grpd.core.errors import DimensionMismatch, NotComposable
from grpd.core.linalg import Mat, mat_inv, rank

__all__ = [
    "GL1Element",
    "GL2Element",
    "GLEElement",
    "IsotropyCrossedModule",
    "gl2_member",
    "gl2_matrix",
    "gl2_transpose",
    "gl2_s20",
    "gl2_t20",
    "gl2_u20",
    "gl2_m20",
    "gl2_i20",
    "gl2_s21",
    "gl2_t21",
    "gl2_u21",
    "gl2_m21",
    "gl2_i21",
    "gl1_s10",
    "gl1_t10",
    "gl1_unit",
    "gl1_compose",
    "gl1_inverse",
    "gl2_isotropy_crossed_module",
    "gle_member",
    "gle_from_gl2",
    "gle_from_gl1",
    "gle_unit",
    "gle_unit_2cell",
    "gle_target",
    "gle_source",
    "gle_compose",
    "gle_inverse",
    "gle_compose_2cells",
    "gle_inverse_2cell",
]


def _grid(m: Mat):
    return "[" + ";".join(",".join(row) for row in m.to_grid()) + "]"


def _require_shape(label, m: Mat, shape):
    if m.shape != shape:
        raise DimensionMismatch(f"{label} has shape {m.shape}, expected {shape}")


@dataclass(frozen=True)
class GL1Element:
    """A 1-cell (d, A, B) from B^-1 d A to d."""
    d: Mat
    A: Mat
    B: Mat

    def __post_init__(self):
        k, l = self.d.shape
        _require_shape("A", self.A, (l, l))
        _require_shape("B", self.B, (k, k))

    @property
    def l(self):
        return self.A.rows

    @property
    def k(self):
        return self.B.rows

    def __str__(self):
        return f"({_grid(self.d)} | {_grid(self.A)} | {_grid(self.B)})"


@dataclass(frozen=True)
class GL2Element:
    """A 2-cell (d, A, J, B), standing for the block matrix [[A, JB], [0, B]] based at d."""
    d: Mat
    A: Mat
    J: Mat
    B: Mat

    def __post_init__(self):
        k, l = self.d.shape
        _require_shape("A", self.A, (l, l))
        _require_shape("J", self.J, (l, k))
        _require_shape("B", self.B, (k, k))

    @property
    def l(self):
        return self.A.rows

    @property
    def k(self):
        return self.B.rows

    def __str__(self):
        return f"({_grid(self.d)} | {_grid(self.A)} | {_grid(self.J)} | {_grid(self.B)})"


def _invertible(m: Mat):
    return m.is_square() and rank(m) == m.rows


def gl2_member(d: Mat, A: Mat, J: Mat, B: Mat) -> bool:
    """A, B, I + Jd and I + dJ invertible."""
    e = GL2Element(d, A, J, B)
    eye_l, eye_k = Mat.identity(e.l), Mat.identity(e.k)
    return (_invertible(A) and _invertible(B)
            and _invertible(eye_l + J @ d) and _invertible(eye_k + d @ J))


def gl2_matrix(e: GL2Element) -> Mat:
    return Mat.block([[e.A, e.J @ e.B], [Mat.zeros(e.k, e.l), e.B]])


def gl2_t20(e: GL2Element) -> Mat:
    return e.d


def gl2_s20(e: GL2Element) -> Mat:
    return mat_inv((Mat.identity(e.k) + e.d @ e.J) @ e.B) @ e.d @ e.A


def gl2_u20(d: Mat) -> GL2Element:
    k, l = d.shape
    return GL2Element(d, Mat.identity(l), Mat.zeros(l, k), Mat.identity(k))


def gl2_m20(e1: GL2Element, e2: GL2Element) -> GL2Element:
    """Vertical composition: the block matrices multiply."""
    if gl2_s20(e1) != gl2_t20(e2):
        raise NotComposable(f"s20 of {e1} does not match t20 of {e2}")
    J = e1.A @ e2.J @ mat_inv(e1.B) + e1.J
    return GL2Element(e1.d, e1.A @ e2.A, J, e1.B @ e2.B)


def gl2_i20(e: GL2Element) -> GL2Element:
    inv_a = mat_inv(e.A)
    return GL2Element(gl2_s20(e), inv_a, -(inv_a @ e.J @ e.B), mat_inv(e.B))


def gl2_t21(e: GL2Element) -> GL1Element:
    return GL1Element(e.d, e.A, (Mat.identity(e.k) + e.d @ e.J) @ e.B)


def gl2_s21(e: GL2Element) -> GL1Element:
    return GL1Element(e.d, mat_inv(Mat.identity(e.l) + e.J @ e.d) @ e.A, e.B)


def gl2_u21(f: GL1Element) -> GL2Element:
    return GL2Element(f.d, f.A, Mat.zeros(f.l, f.k), f.B)


def gl2_m21(e1: GL2Element, e2: GL2Element) -> GL2Element:
    """Horizontal composition over a fixed base point: J = J1 d J2 + J1 + J2."""
    if gl2_s21(e1) != gl2_t21(e2):
        raise NotComposable(f"s21 of {e1} does not match t21 of {e2}")
    J = e1.J @ e1.d @ e2.J + e1.J + e2.J
    return GL2Element(e1.d, e1.A, J, e2.B)


def gl2_i21(e: GL2Element) -> GL2Element:
    inv_jd = mat_inv(Mat.identity(e.l) + e.J @ e.d)
    return GL2Element(e.d, inv_jd @ e.A, -(inv_jd @ e.J), (Mat.identity(e.k) + e.d @ e.J) @ e.B)


def gl2_transpose(e: GL2Element) -> GL2Element:
    """Block transpose, an element of GL(k, l).

    The matrix is P M^T P^-1 with P = diag(I_k, -I_l) R, R the reversal; it is based at
    R_l s20(e)^T R_k and its s20 is R_l d^T R_k, so compositions are reversed.
    """
    l, k = e.l, e.k
    rev_l, rev_k = Mat.reversal(l), Mat.reversal(k)
    A = rev_k @ e.B.T @ rev_k
    B = rev_l @ e.A.T @ rev_l
    X = -(rev_k @ (e.J @ e.B).T @ rev_l)
    return GL2Element(rev_l @ gl2_s20(e).T @ rev_k, A, X @ mat_inv(B), B)


def gl1_t10(f: GL1Element) -> Mat:
    return f.d


def gl1_s10(f: GL1Element) -> Mat:
    return mat_inv(f.B) @ f.d @ f.A


def gl1_unit(d: Mat) -> GL1Element:
    k, l = d.shape
    return GL1Element(d, Mat.identity(l), Mat.identity(k))


def gl1_compose(f1: GL1Element, f2: GL1Element) -> GL1Element:
    if gl1_s10(f1) != gl1_t10(f2):
        raise NotComposable(f"s10 of {f1} does not match t10 of {f2}")
    return GL1Element(f1.d, f1.A @ f2.A, f1.B @ f2.B)


def gl1_inverse(f: GL1Element) -> GL1Element:
    return GL1Element(gl1_s10(f), mat_inv(f.A), mat_inv(f.B))


class IsotropyCrossedModule(object):
    """The crossed module of the isotropy 2-group of GL(l, k) at d.

    H consists of the matrices J with (d, I + Jd, J, I) in GL(l, k); G is the isotropy
    group {(d, A, B): B^-1 d A = d} of the 1-cells.
    """

    def __init__(self, l, k, d: Mat):
        if d.shape != (k, l):
            raise DimensionMismatch(f"Base point has shape {d.shape}, expected {(k, l)}")
        self.l = l
        self.k = k
        self.d = d

    def element(self, J: Mat) -> GL2Element:
        return GL2Element(self.d, Mat.identity(self.l) + J @ self.d, J, Mat.identity(self.k))

    def is_member(self, J: Mat) -> bool:
        e = self.element(J)
        return gl2_member(e.d, e.A, e.J, e.B)

    def unit(self) -> Mat:
        return Mat.zeros(self.l, self.k)

    def multiply(self, J1: Mat, J2: Mat) -> Mat:
        return gl2_m20(self.element(J1), self.element(J2)).J

    def inverse(self, J: Mat) -> Mat:
        return gl2_i20(self.element(J)).J

    def is_isotropy(self, g: GL1Element) -> bool:
        return g.d == self.d and gl1_s10(g) == self.d

    def boundary(self, J: Mat) -> GL1Element:
        return gl2_t21(self.element(J))

    def conjugate(self, g: GL1Element, J: Mat) -> Mat:
        """u21(g) o20 J o20 i20(u21(g))."""
        unit = gl2_u21(g)
        return gl2_m20(gl2_m20(unit, self.element(J)), gl2_i20(unit)).J


def gl2_isotropy_crossed_module(l, k, d: Mat) -> IsotropyCrossedModule:
    return IsotropyCrossedModule(l, k, d)


@dataclass(frozen=True)
class GLEElement:
    """A 1-cell (A, B) from x to y of GL(E), optionally with a 2-cell J to (A2, B2).

    Points are any hashable labels; d_x and d_y are the complexes at them.
    """
    x: Hashable
    y: Hashable
    d_x: Mat
    d_y: Mat
    A: Mat
    B: Mat
    J: Optional[Mat] = None
    A2: Optional[Mat] = None
    B2: Optional[Mat] = None


def gle_member(x, y, d_x, d_y, A, B, J=None, A2=None, B2=None) -> bool:
    k, l = d_x.shape
    if d_y.shape != (k, l) or A.shape != (l, l) or B.shape != (k, k):
        raise DimensionMismatch(f"Inconsistent shapes for a 1-cell from {x} to {y}")
    if not (_invertible(A) and _invertible(B)) or d_y @ A != B @ d_x:
        return False
    if J is None:
        return True
    if J.shape != (l, k) or A2 is None or B2 is None:
        raise DimensionMismatch(f"A 2-cell needs J of shape {(l, k)} and a second 1-cell")
    if not gle_member(x, y, d_x, d_y, A2, B2):
        return False
    return J @ d_x == A - A2 and d_y @ J == B - B2


def gle_from_gl2(e: GL2Element, x="x", y="y") -> GLEElement:
    """The 2-cell JB from t21(e) to s21(e) over the complex d: Q^l -> Q^k.

    The 1-cells go from the point x with d_x = s20(e) to the point y with d_y = d.
    """
    target, source = gl2_t21(e), gl2_s21(e)
    return GLEElement(x, y, gl2_s20(e), e.d, target.A, target.B,
                      J=e.J @ e.B, A2=source.A, B2=source.B)


def gle_from_gl1(f: GL1Element, x="x", y="y") -> GLEElement:
    """The 1-cell (A, B) from (x, s10(f)) to (y, d)."""
    return GLEElement(x, y, gl1_s10(f), f.d, f.A, f.B)


def gle_unit(x, d: Mat) -> GLEElement:
    k, l = d.shape
    return GLEElement(x, x, d, d, Mat.identity(l), Mat.identity(k))


def gle_unit_2cell(c: GLEElement) -> GLEElement:
    """The zero 2-cell from c to itself."""
    c = gle_target(c)
    return GLEElement(c.x, c.y, c.d_x, c.d_y, c.A, c.B, J=Mat.zeros(c.A.rows, c.B.rows), A2=c.A, B2=c.B)


def gle_target(c: GLEElement) -> GLEElement:
    """The 1-cell (A, B); a 1-cell is its own target."""
    return GLEElement(c.x, c.y, c.d_x, c.d_y, c.A, c.B)


def gle_source(c: GLEElement) -> GLEElement:
    """The 1-cell (A2, B2) of a 2-cell; a 1-cell is its own source."""
    if c.J is None:
        return c
    return GLEElement(c.x, c.y, c.d_x, c.d_y, c.A2, c.B2)


def gle_compose(c1: GLEElement, c2: GLEElement) -> GLEElement:
    """c1 after c2 along the points: c2 goes from x to y, c1 from y to z.

    1-cells multiply blockwise. For 2-cells J = A1 J2 + J1 B2', where B2' is the
    source B of c2.
    """
    if c2.y != c1.x or c2.d_y != c1.d_x:
        raise NotComposable(f"A cell ending at {c2.y} cannot be followed by one starting at {c1.x}")
    if (c1.J is None) != (c2.J is None):
        raise NotComposable("Cannot compose a 1-cell with a 2-cell")
    A, B = c1.A @ c2.A, c1.B @ c2.B
    if c1.J is None:
        return GLEElement(c2.x, c1.y, c2.d_x, c1.d_y, A, B)
    return GLEElement(c2.x, c1.y, c2.d_x, c1.d_y, A, B,
                      J=c1.A @ c2.J + c1.J @ c2.B2, A2=c1.A2 @ c2.A2, B2=c1.B2 @ c2.B2)


def gle_inverse(c: GLEElement) -> GLEElement:
    """The inverse along the points; for a 2-cell J' = -A^-1 J B2^-1 between the inverse 1-cells."""
    A_inv, B_inv = mat_inv(c.A), mat_inv(c.B)
    if c.J is None:
        return GLEElement(c.y, c.x, c.d_y, c.d_x, A_inv, B_inv)
    A2_inv, B2_inv = mat_inv(c.A2), mat_inv(c.B2)
    return GLEElement(c.y, c.x, c.d_y, c.d_x, A_inv, B_inv,
                      J=-(A_inv @ c.J @ B2_inv), A2=A2_inv, B2=B2_inv)


def gle_compose_2cells(c1: GLEElement, c2: GLEElement) -> GLEElement:
    """c1 followed by c2 between 1-cells: c1 from P to Q, c2 from Q to R, J = J1 + J2."""
    if c1.J is None or c2.J is None:
        raise NotComposable("Both cells must be 2-cells")
    if gle_source(c1) != gle_target(c2):
        raise NotComposable("The source 1-cell of the first 2-cell is not the target of the second")
    return GLEElement(c1.x, c1.y, c1.d_x, c1.d_y, c1.A, c1.B, J=c1.J + c2.J, A2=c2.A2, B2=c2.B2)


def gle_inverse_2cell(c: GLEElement) -> GLEElement:
    """-J, from the source 1-cell back to the target."""
    if c.J is None:
        raise NotComposable("A 1-cell has no inverse 2-cell")
    return GLEElement(c.x, c.y, c.d_x, c.d_y, c.A2, c.B2, J=-c.J, A2=c.A, B2=c.B)
