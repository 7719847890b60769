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
"""2-representations of 2-groupoids on 2-graded and anchored 2-vector bundles, and linear 2-actions."""

from dataclasses import dataclass, field
import logging
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from grpd.core.errors import GrpdError, NonUnitBase, NotComposable
from grpd.core.gl2 import (
    GLEElement,
    gl1_compose,
    gl1_inverse,
    gl1_s10,
    gl1_t10,
    gl1_unit,
    gl2_i20,
    gl2_i21,
    gl2_m20,
    gl2_m21,
    gl2_s20,
    gl2_s21,
    gl2_t21,
    gl2_u21,
    gle_compose,
    gle_compose_2cells,
    gle_from_gl1,
    gle_from_gl2,
    gle_inverse,
    gle_inverse_2cell,
    gle_member,
    gle_source,
    gle_target,
    gle_unit,
    gle_unit_2cell,
)
from grpd.core.groupoid import FiniteGroupoid
from grpd.core.linalg import Mat, rank
from grpd.core.report import Report
from grpd.core.sampling import random_gl1, random_gl2, random_matrix, random_vertical
from grpd.core.vb_groupoid import Anchored2VB, VBGroupoid, vbg_from_anchored, vbg_same_structure, vbg_to_anchored

logger = logging.getLogger(__name__)

__all__ = [
    "TwoGroupoid",
    "TwoGroupoidSample",
    "TwoRepresentation",
    "LinearAction",
    "gl2_two_groupoid",
    "groupoid_two_groupoid",
    "sample_gl2_cells",
    "sample_groupoid_cells",
    "sample_objects",
    "gl2_graded_representation",
    "gl2_anchored_representation",
    "groupoid_representation",
    "rep_check",
    "rep_same",
    "rep_to_linear_action",
    "linear_action_to_rep",
    "linear_action_check",
    "linear_action_same",
]


@dataclass(frozen=True)
class TwoGroupoid:
    """Structure maps of a 2-groupoid H2 => H1 => H0.

    m20 composes 2-cells along H0 and m21 composes 2-cells between 1-cells; the
    20-faces are the 10-faces of the 21-faces.
    """
    name: str
    s10: Callable
    t10: Callable
    u10: Callable
    m10: Callable
    i10: Callable
    s21: Callable
    t21: Callable
    u21: Callable
    m21: Callable
    i21: Callable
    m20: Callable
    i20: Callable

    def s20(self, h):
        return self.s10(self.s21(h))

    def t20(self, h):
        return self.t10(self.t21(h))

    def u20(self, x):
        return self.u21(self.u10(x))


def gl2_two_groupoid() -> TwoGroupoid:
    return TwoGroupoid("GL", gl1_s10, gl1_t10, gl1_unit, gl1_compose, gl1_inverse,
                       gl2_s21, gl2_t21, gl2_u21, gl2_m21, gl2_i21, gl2_m20, gl2_i20)


def _identity(a):
    return a


def _same_arrow(g, h):
    if g != h:
        raise NotComposable(f"Only the unit 2-cells {g} and {h} of the same arrow compose")
    return g


def groupoid_two_groupoid(base: FiniteGroupoid, name="groupoid") -> TwoGroupoid:
    """A finite groupoid as a 2-groupoid whose 2-cells are the arrows, all of them units."""
    return TwoGroupoid(name,
                       base.src.__getitem__, base.tgt.__getitem__, base.unit.__getitem__,
                       base.compose, base.inv.__getitem__,
                       _identity, _identity, _identity, _same_arrow, _identity,
                       base.compose, base.inv.__getitem__)


@dataclass
class TwoGroupoidSample:
    """Finitely many objects, cells and composable pairs of a 2-groupoid."""
    objects: List = field(default_factory=list)
    cells1: List = field(default_factory=list)
    cells2: List = field(default_factory=list)
    pairs10: List[Tuple] = field(default_factory=list)
    pairs20: List[Tuple] = field(default_factory=list)
    pairs21: List[Tuple] = field(default_factory=list)


def sample_gl2_cells(rng, l, k, size) -> TwoGroupoidSample:
    """Random cells of GL(l, k) and composable pairs for both compositions."""
    sample = TwoGroupoidSample()
    for _ in range(size):
        d = random_matrix(rng, k, l)
        e1 = random_gl2(rng, d)
        e2 = random_gl2(rng, gl2_s20(e1))
        v1 = random_vertical(rng, e1)
        f1 = random_gl1(rng, d)
        f2 = random_gl1(rng, gl1_s10(f1))
        sample.objects.extend([d, gl2_s20(e1)])
        sample.cells1.extend([f1, f2])
        sample.cells2.extend([e1, e2, v1])
        sample.pairs10.append((f1, f2))
        sample.pairs20.append((e1, e2))
        sample.pairs21.append((e1, v1))
    return sample


def sample_groupoid_cells(base: FiniteGroupoid) -> TwoGroupoidSample:
    """Every cell of a finite groupoid seen as a 2-groupoid."""
    pairs = list(base.composable_pairs())
    return TwoGroupoidSample(list(base.objects), list(base.arrows), list(base.arrows),
                             pairs, pairs, [(g, g) for g in base.arrows])


def sample_objects(group: TwoGroupoid, sample: TwoGroupoidSample) -> list:
    """The distinct objects the sample reaches, in first-seen order."""
    reached = list(sample.objects)
    for c in sample.cells1:
        reached.extend([group.s10(c), group.t10(c)])
    for h in sample.cells2:
        reached.extend([group.s20(h), group.t20(h)])
    return list(dict.fromkeys(reached))


@dataclass
class TwoRepresentation:
    """A morphism phi = (phi2, phi1, phi0) from a 2-groupoid into GL(E1, E0) of rank (l, k).

    phi0 sends an object to a point of GL(E1, E0)_0, a pair (label, d); phi1 and phi2
    send 1-cells and 2-cells to GL(E) cells between such points. A representation with
    an `anchor` is 2-anchored: every phi0(x) lies on the section label -> anchor(label).
    """
    group: TwoGroupoid
    l: int
    k: int
    phi0: Callable[[object], Tuple[Hashable, Mat]]
    phi1: Callable[[object], GLEElement]
    phi2: Callable[[object], GLEElement]
    anchor: Optional[Callable[[Hashable], Mat]] = None

    @property
    def anchored(self):
        return self.anchor is not None


def gl2_graded_representation(l, k, point="*") -> TwoRepresentation:
    """The identity of GL(l, k) as a 2-graded representation on (Q^l, Q^k) over one point."""
    return TwoRepresentation(
        gl2_two_groupoid(), l, k,
        phi0=lambda d: (point, d),
        phi1=lambda f: gle_from_gl1(f, point, point),
        phi2=lambda e: gle_from_gl2(e, point, point))


def gl2_anchored_representation(l, k, points: Optional[Dict[Mat, Hashable]] = None) -> TwoRepresentation:
    """The identity of GL(l, k) as a 2-anchored representation on Q^l x Hom -> Q^k x Hom over Hom.

    The point over d is labelled points[d], or d itself, and its anchor is d.
    """
    if points is None:
        label, anchor = _identity, _identity
    else:
        label, anchor = points.__getitem__, {name: d for d, name in points.items()}.__getitem__
    return TwoRepresentation(
        gl2_two_groupoid(), l, k,
        phi0=lambda d: (label(d), d),
        phi1=lambda f: gle_from_gl1(f, label(gl1_s10(f)), label(f.d)),
        phi2=lambda e: gle_from_gl2(e, label(gl2_s20(e)), label(e.d)),
        anchor=anchor)


def groupoid_representation(base: FiniteGroupoid, anchored: Anchored2VB, A, B) -> TwoRepresentation:
    """A 2-anchored representation of a finite groupoid on an anchored 2-vector bundle over its objects.

    A[g] and B[g] act on E1 and E0 from s(g) to t(g); every 2-cell goes to the zero 2-cell.
    """
    delta = anchored.delta

    def phi1(g):
        x, y = base.src[g], base.tgt[g]
        return GLEElement(x, y, delta[x], delta[y], A[g], B[g])
    return TwoRepresentation(
        groupoid_two_groupoid(base), anchored.e1_dim, anchored.e0_dim,
        phi0=lambda x: (x, delta[x]),
        phi1=phi1,
        phi2=lambda g: gle_unit_2cell(phi1(g)),
        anchor=delta.__getitem__)


def _is_member(c: GLEElement, two_cell):
    if (c.J is not None) != two_cell:
        return False
    return gle_member(c.x, c.y, c.d_x, c.d_y, c.A, c.B, c.J, c.A2, c.B2)


def _endpoints(c: GLEElement):
    return (c.x, c.d_x), (c.y, c.d_y)


def rep_check(rep: TwoRepresentation, sample: TwoGroupoidSample, instance=None) -> Report:
    """Check that phi is a morphism of 2-groupoids into GL(E) on the sampled cells."""
    group = rep.group
    report = Report("representation", instance=instance or group.name)
    phi0, phi1, phi2 = rep.phi0, rep.phi1, rep.phi2

    for i, x in enumerate(sample_objects(group, sample)):
        report.guard("phi0_shape", i, lambda: (phi0(x)[1].shape == (rep.k, rep.l), lambda: {"object": x}))
        if rep.anchored:
            report.guard("phi0_in_anchor", i, lambda: (
                phi0(x)[1] == rep.anchor(phi0(x)[0]), lambda: {"point": phi0(x)[0]}))
        report.guard("phi1_unit", i, lambda: phi1(group.u10(x)) == gle_unit(*phi0(x)))
        report.guard("phi2_unit_20", i, lambda: phi2(group.u20(x)) == gle_unit_2cell(gle_unit(*phi0(x))))

    cells1 = list(sample.cells1)
    for h in sample.cells2:
        cells1.extend([group.s21(h), group.t21(h)])
    for i, c in enumerate(cells1):
        report.guard("phi1_member", i, lambda: (_is_member(phi1(c), False), lambda: {"cell": str(c)}))
        report.guard("phi1_endpoints", i, lambda: (
            _endpoints(phi1(c)) == (phi0(group.s10(c)), phi0(group.t10(c))), lambda: {"cell": str(c)}))
        report.guard("phi1_inverse", i, lambda: phi1(group.i10(c)) == gle_inverse(phi1(c)))
        report.guard("phi2_unit_21", i, lambda: phi2(group.u21(c)) == gle_unit_2cell(phi1(c)))
    for i, (a, b) in enumerate(sample.pairs10):
        report.guard("phi1_composition", i, lambda: (
            phi1(group.m10(a, b)) == gle_compose(phi1(a), phi1(b)), lambda: {"first": str(a), "second": str(b)}))

    for i, h in enumerate(sample.cells2):
        report.guard("phi2_member", i, lambda: (_is_member(phi2(h), True), lambda: {"cell": str(h)}))
        report.guard("phi2_faces", i, lambda: (
            gle_target(phi2(h)) == phi1(group.t21(h)) and gle_source(phi2(h)) == phi1(group.s21(h)),
            lambda: {"cell": str(h)}))
        report.guard("phi2_inverse_20", i, lambda: phi2(group.i20(h)) == gle_inverse(phi2(h)))
        report.guard("phi2_inverse_21", i, lambda: phi2(group.i21(h)) == gle_inverse_2cell(phi2(h)))
    for i, (a, b) in enumerate(sample.pairs20):
        report.guard("phi2_composition_20", i, lambda: (
            phi2(group.m20(a, b)) == gle_compose(phi2(a), phi2(b)), lambda: {"first": str(a), "second": str(b)}))
    for i, (a, b) in enumerate(sample.pairs21):
        report.guard("phi2_composition_21", i, lambda: (
            phi2(group.m21(a, b)) == gle_compose_2cells(phi2(a), phi2(b)),
            lambda: {"first": str(a), "second": str(b)}))
    logger.debug("rep_check %s: %d records, %d failures", report.instance, len(report), len(report.failures))
    return report


def rep_same(r1: TwoRepresentation, r2: TwoRepresentation, sample: TwoGroupoidSample) -> bool:
    """Equality of phi0, phi1 and phi2 on the sampled cells."""
    group = r1.group
    return (all(r1.phi0(x) == r2.phi0(x) for x in sample_objects(group, sample))
            and all(r1.phi1(c) == r2.phi1(c) for c in sample.cells1)
            and all(r1.phi2(h) == r2.phi2(h) for h in sample.cells2))


@dataclass
class LinearAction:
    """A linear 2-action on a VB-groupoid E => E0 over a unit groupoid, E in anchored form.

    A 2-cell h maps the arrow fiber at point(s20 h) to the one at point(t20 h) by
    on_arrows(h); a 1-cell c maps object fibers by on_objects(c).
    """
    group: TwoGroupoid
    vb: VBGroupoid
    point: Callable[[object], Hashable]
    on_arrows: Callable[[object], Mat]
    on_objects: Callable[[object], Mat]

    def __post_init__(self):
        if not self.vb.base.is_unit_groupoid():
            raise NonUnitBase(f"{self.vb.name} is not a VB-groupoid over a unit groupoid")
        if not vbg_same_structure(self.vb, vbg_from_anchored(vbg_to_anchored(self.vb))):
            raise GrpdError(f"{self.vb.name} is not in the anchored form E1 x E0")


def linear_action_check(action: LinearAction, sample: TwoGroupoidSample, instance=None) -> Report:
    """Check the 2-action axioms of a linear action on the sampled cells."""
    group, v = action.group, action.vb
    report = Report("linear_action", instance=instance or v.name)
    M, N, point = action.on_arrows, action.on_objects, action.point
    unit = v.base.unit
    eye_n, eye_k = Mat.identity(v.n), Mat.identity(v.k)

    for i, x in enumerate(sample_objects(group, sample)):
        report.guard("unit_acts_trivially", i, lambda: (
            M(group.u20(x)) == eye_n and N(group.u10(x)) == eye_k, lambda: {"object": str(x)}))
    for i, c in enumerate(sample.cells1):
        x, y = unit[point(group.s10(c))], unit[point(group.t10(c))]
        report.guard("object_invertible", i, lambda: N(c).shape == (v.k, v.k) and rank(N(c)) == v.k)
        report.guard("unit_compatible", i, lambda: (
            M(group.u21(c)) @ v.U[x] == v.U[y] @ N(c), lambda: {"cell": str(c)}))
    for i, h in enumerate(sample.cells2):
        x, y = unit[point(group.s20(h))], unit[point(group.t20(h))]
        report.guard("arrow_invertible", i, lambda: M(h).shape == (v.n, v.n) and rank(M(h)) == v.n)
        report.guard("source_compatible", i, lambda: (
            v.S[y] @ M(h) == N(group.s21(h)) @ v.S[x], lambda: {"cell": str(h)}))
        report.guard("target_compatible", i, lambda: (
            v.T[y] @ M(h) == N(group.t21(h)) @ v.T[x], lambda: {"cell": str(h)}))
        report.guard("inverse_compatible", i, lambda: (
            M(group.i21(h)) @ v.Inv[x] == v.Inv[y] @ M(h), lambda: {"cell": str(h)}))
    for i, (a, b) in enumerate(sample.pairs10):
        report.guard("functorial_objects", i, lambda: N(group.m10(a, b)) == N(a) @ N(b))
    for i, (a, b) in enumerate(sample.pairs20):
        report.guard("functorial_arrows", i, lambda: M(group.m20(a, b)) == M(a) @ M(b))
    for i, (a, b) in enumerate(sample.pairs21):
        x, y = unit[point(group.s20(a))], unit[point(group.t20(a))]

        def multiplicative():
            fibered = v.fibered_basis(x, x)
            zero = Mat.zeros(v.n, v.n)
            moved = Mat.block([[M(a), zero], [zero, M(b)]]) @ fibered
            return M(group.m21(a, b)) @ v.Mul[(x, x)] @ fibered == v.Mul[(y, y)] @ moved
        report.guard("multiplicative", i, multiplicative)
    logger.debug("linear_action_check %s: %d records, %d failures",
                 report.instance, len(report), len(report.failures))
    return report


def rep_to_linear_action(rep: TwoRepresentation, vb: VBGroupoid, point=None) -> LinearAction:
    """h acts on E1 x E0 by [[A, J], [0, B']] and c on E0 by B.

    A and J are read off phi2(h), B' is the source B of phi2(h), B is that of phi1(c).
    `point` sends objects to the points of vb; it defaults to the labels of phi0.
    """
    l, k = rep.l, rep.k
    if point is None:
        def point(x):
            return rep.phi0(x)[0]

    def on_arrows(h):
        c = rep.phi2(h)
        return Mat.block([[c.A, c.J], [Mat.zeros(k, l), c.B2]])
    return LinearAction(rep.group, vb, point, on_arrows, lambda c: rep.phi1(c).B)


def linear_action_to_rep(action: LinearAction) -> TwoRepresentation:
    """The 2-anchored representation of a linear action; the anchor is the core-anchor of vb.

    phi1(c) takes A from the action of the unit 2-cell of c; phi2(h) takes A, J and the
    source B from the blocks of on_arrows(h), the target B from on_objects(t21 h).
    """
    group, v = action.group, action.vb
    l, n = v.l, v.n

    def phi0(x):
        p = action.point(x)
        return p, v.core_anchor(p)

    def phi1(c):
        (x, d_x), (y, d_y) = phi0(group.s10(c)), phi0(group.t10(c))
        return GLEElement(x, y, d_x, d_y, action.on_arrows(group.u21(c)).sub(0, l, 0, l), action.on_objects(c))

    def phi2(h):
        (x, d_x), (y, d_y) = phi0(group.s20(h)), phi0(group.t20(h))
        m = action.on_arrows(h)
        A, J = m.sub(0, l, 0, l), m.sub(0, l, l, n)
        return GLEElement(x, y, d_x, d_y, A, action.on_objects(group.t21(h)),
                          J=J, A2=A - J @ d_x, B2=m.sub(l, n, l, n))
    return TwoRepresentation(group, l, v.k, phi0, phi1, phi2, anchor=v.core_anchor)


def linear_action_same(a1: LinearAction, a2: LinearAction, sample: TwoGroupoidSample) -> bool:
    return (all(a1.on_arrows(h) == a2.on_arrows(h) for h in sample.cells2)
            and all(a1.on_objects(c) == a2.on_objects(c) for c in sample.cells1))
