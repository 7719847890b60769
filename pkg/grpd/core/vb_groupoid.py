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
"""VB-groupoids over finite groupoids."""

from dataclasses import dataclass, field
import logging
from typing import Dict, Tuple

from grpd.core.errors import (
    DimensionMismatch,
    GrpdError,
    NoSolution,
    NonFunctorialRep,
    NonUnitBase,
    ValidationError,
)
from grpd.core.groupoid import FiniteGroupoid, gpd_unit, gpd_validate
from grpd.core.linalg import Mat, Subspace, kernel, linear_extension, mat_inv, rank, solve_unique
from grpd.core.report import Report

logger = logging.getLogger(__name__)

__all__ = [
    "VBGroupoid",
    "Anchored2VB",
    "vbg_validate",
    "vbg_core",
    "vbg_right_translation",
    "vbg_left_translation",
    "vbg_trivial_core",
    "vbg_trivial_base",
    "vbg_pullback",
    "vbg_canonical",
    "vbg_dual",
    "vbg_from_anchored",
    "vbg_to_anchored",
    "vbg_same_structure",
]


class VBGroupoid(object):
    """A VB-groupoid of rank (l, k) over a finite groupoid.

    Every arrow fiber is Q^(l+k) and every object fiber is Q^k. The structure maps are
    matrices: S[g], T[g] (k x n), U[x] (n x k), Inv[g] (n x n, fiber at g to fiber at
    g^-1) and Mul[(g, h)] (n x 2n), a linear map on the whole product fiber whose
    restriction to {(v, w): S[g] v = T[h] w} is the fiberwise multiplication.

    `core_bases[x]` is the basis of ker S[1_x] in which core vectors get coordinates;
    it defaults to the canonical kernel basis.
    """

    def __init__(self, base: FiniteGroupoid, l, k, S, T, Mul, U, Inv, core_bases=None, name=""):
        self.base = base
        self.l = l
        self.k = k
        self.n = l + k
        self.S = dict(S)
        self.T = dict(T)
        self.Mul = dict(Mul)
        self.U = dict(U)
        self.Inv = dict(Inv)
        self.name = name
        self._memo = {}
        self._check_shapes()
        self.core_bases = {}
        for x in base.objects:
            canonical = kernel(self.S[base.unit[x]])
            if core_bases is None or x not in core_bases:
                self.core_bases[x] = canonical.basis
                continue
            basis = core_bases[x]
            if basis.shape != (self.n, l) or Subspace.span(basis) != canonical or rank(basis) != l:
                raise GrpdError(f"The core basis at {x} is not a basis of ker S[1_{x}]")
            self.core_bases[x] = basis

    def _check_shapes(self):
        n, k = self.n, self.k
        for g in self.base.arrows:
            for label, table, shape in (("S", self.S, (k, n)), ("T", self.T, (k, n)), ("Inv", self.Inv, (n, n))):
                if g not in table:
                    raise DimensionMismatch(f"{label} is missing arrow {g}")
                if table[g].shape != shape:
                    raise DimensionMismatch(f"{label}[{g}] has shape {table[g].shape}, expected {shape}")
        for x in self.base.objects:
            if x not in self.U or self.U[x].shape != (n, k):
                raise DimensionMismatch(f"U[{x}] is missing or not {n}x{k}")
        for pair in self.base.composable_pairs():
            if pair not in self.Mul or self.Mul[pair].shape != (n, 2 * n):
                raise DimensionMismatch(f"Mul{pair} is missing or not {n}x{2 * n}")

    @property
    def rank(self):
        return (self.l, self.k)

    def is_unit_arrow(self, g):
        return self.base.unit[self.base.src[g]] == g

    def memo(self, key, compute):
        """The value cached under `key`, computed on first use; the structure maps never change."""
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    def fibered_basis(self, g, h):
        """Basis of {(v, w): S[g] v = T[h] w} inside the product fiber at (g, h)."""
        return self.memo(("fibered", g, h), lambda: kernel(Mat.hstack(self.S[g], -self.T[h])).basis)

    def source_kernel(self, g):
        """The canonical basis of ker S[g]."""
        return self.memo(("ker_s", g), lambda: kernel(self.S[g]).basis)

    def target_kernel(self, g):
        """The canonical basis of ker T[g]."""
        return self.memo(("ker_t", g), lambda: kernel(self.T[g]).basis)

    def kernel_basis(self, g):
        """Basis of ker S[g]; the core basis over unit arrows."""
        if self.is_unit_arrow(g):
            return self.core_bases[self.base.src[g]]
        return self.source_kernel(g)

    def right_translation_map(self, g, h):
        """R_g = m(., 0_g) on the fiber at h, where s(h) = t(g); lands at hg."""
        self.base.compose(h, g)
        return self.Mul[(h, g)].cols_range(0, self.n)

    def left_translation_map(self, g, h):
        """L_g = m(0_g, .) on the fiber at h, where t(h) = s(g); lands at gh."""
        self.base.compose(g, h)
        return self.Mul[(g, h)].cols_range(self.n, 2 * self.n)

    def core_coordinates(self, x, vectors):
        basis = self.core_bases[x]
        left_inverse = self.memo(("core_left_inverse", x), lambda: mat_inv(basis.T @ basis) @ basis.T)
        coordinates = left_inverse @ vectors
        if basis @ coordinates != vectors:
            raise NoSolution(f"The vectors do not lie in the core at {x}")
        return coordinates

    def core_anchor(self, x):
        return self.T[self.base.unit[x]] @ self.core_bases[x]

    def __repr__(self):
        return f"VBGroupoid(name={self.name!r}, rank={self.rank}, base={self.base!r})"


@dataclass
class Anchored2VB:
    """A two-term complex E1 -> E0 over finitely many points."""
    points: Tuple[str, ...]
    e1_dim: int
    e0_dim: int
    delta: Dict[str, Mat] = field(default_factory=dict)

    def __post_init__(self):
        self.points = tuple(str(p) for p in self.points)
        for p in self.points:
            if self.delta[p].shape != (self.e0_dim, self.e1_dim):
                raise DimensionMismatch(f"delta at {p} has shape {self.delta[p].shape}, "
                                        f"expected {(self.e0_dim, self.e1_dim)}")


def vbg_validate(v: VBGroupoid) -> Report:
    """Check every VB-groupoid axiom exactly on bases of the relevant fibered subspaces."""
    report = Report("vbg_validate", instance=v.name)
    base_report = gpd_validate(v.base)
    report.merge(base_report)
    if not base_report.ok:
        return report
    gpd = v.base
    n, k = v.n, v.k
    eye_k = Mat.identity(k)
    eye_n = Mat.identity(n)

    for x in gpd.objects:
        u = gpd.unit[x]
        if v.S[u] @ v.U[x] != eye_k:
            report.fail("unit_source", object=x, S_U=v.S[u] @ v.U[x])
        if v.T[u] @ v.U[x] != eye_k:
            report.fail("unit_target", object=x, T_U=v.T[u] @ v.U[x])

    for g in gpd.arrows:
        gi = gpd.inv[g]
        src_unit = gpd.unit[gpd.src[g]]
        tgt_unit = gpd.unit[gpd.tgt[g]]
        if rank(v.S[g]) != k or rank(v.T[g]) != k:
            report.fail("surjective_source_target", arrow=g, S=v.S[g], T=v.T[g])
        if v.S[gi] @ v.Inv[g] != v.T[g]:
            report.fail("inverse_source", arrow=g, Inv=v.Inv[g])
        if v.T[gi] @ v.Inv[g] != v.S[g]:
            report.fail("inverse_target", arrow=g, Inv=v.Inv[g])
        left = v.Mul[(tgt_unit, g)] @ Mat.vstack(v.U[gpd.tgt[g]] @ v.T[g], eye_n)
        if left != eye_n:
            report.fail("left_unit", arrow=g, result=left)
        right = v.Mul[(g, src_unit)] @ Mat.vstack(eye_n, v.U[gpd.src[g]] @ v.S[g])
        if right != eye_n:
            report.fail("right_unit", arrow=g, result=right)
        right_inverse = v.Mul[(g, gi)] @ Mat.vstack(eye_n, v.Inv[g])
        if right_inverse != v.U[gpd.tgt[g]] @ v.T[g]:
            report.fail("right_inverse", arrow=g, result=right_inverse)
        left_inverse = v.Mul[(gi, g)] @ Mat.vstack(v.Inv[g], eye_n)
        if left_inverse != v.U[gpd.src[g]] @ v.S[g]:
            report.fail("left_inverse", arrow=g, result=left_inverse)

    for g, h in gpd.composable_pairs():
        gh = gpd.comp[(g, h)]
        basis = v.fibered_basis(g, h)
        first = basis.rows_range(0, n)
        second = basis.rows_range(n, 2 * n)
        product = v.Mul[(g, h)] @ basis
        if v.S[gh] @ product != v.S[h] @ second:
            report.fail("product_source", pair=(g, h), product=product)
        if v.T[gh] @ product != v.T[g] @ first:
            report.fail("product_target", pair=(g, h), product=product)
        if rank(product) != n:
            report.fail("product_surjective", pair=(g, h), product=product)

    for a, b, c in gpd.composable_triples():
        ab = gpd.comp[(a, b)]
        bc = gpd.comp[(b, c)]
        zero = Mat.zeros(k, n)
        system = Mat.block([[v.S[a], -v.T[b], zero], [zero, v.S[b], -v.T[c]]])
        basis = kernel(system).basis
        x, y, z = (basis.rows_range(i * n, (i + 1) * n) for i in range(3))
        left = v.Mul[(a, bc)] @ Mat.vstack(x, v.Mul[(b, c)] @ Mat.vstack(y, z))
        right = v.Mul[(ab, c)] @ Mat.vstack(v.Mul[(a, b)] @ Mat.vstack(x, y), z)
        if left != right:
            report.fail("associativity", triple=(a, b, c), left=left, right=right)
    logger.debug("vbg_validate %s: %d violations", v.name, len(report.failures))
    return report


def vbg_core(v: VBGroupoid, x):
    """The core C_x = ker S[1_x] and the core-anchor in the core basis at x."""
    return Subspace.span(v.core_bases[x]), v.core_anchor(x)


def vbg_right_translation(v: VBGroupoid, g, h=None) -> Mat:
    """Matrix of R_g: ker S[h] -> ker S[hg] in kernel bases; h defaults to 1_t(g)."""
    if h is None:
        h = v.base.unit[v.base.tgt[g]]
    hg = v.base.compose(h, g)
    images = v.right_translation_map(g, h) @ v.kernel_basis(h)
    return solve_unique(v.kernel_basis(hg), images)


def vbg_left_translation(v: VBGroupoid, g, h=None) -> Mat:
    """Matrix of L_g: ker T[h] -> ker T[gh] in canonical kernel bases; h defaults to 1_s(g)."""
    if h is None:
        h = v.base.unit[v.base.src[g]]
    gh = v.base.compose(g, h)
    images = v.left_translation_map(g, h) @ v.target_kernel(h)
    return solve_unique(v.target_kernel(gh), images)


def _check_functorial(base, rep, size):
    for a in base.arrows:
        if a not in rep:
            raise NonFunctorialRep(f"The representation misses arrow {a}")
        if rep[a].shape != (size, size):
            raise NonFunctorialRep(f"rep[{a}] has shape {rep[a].shape}, expected {(size, size)}")
    for x in base.objects:
        if rep[base.unit[x]] != Mat.identity(size):
            raise NonFunctorialRep(f"rep of the unit at {x} is not the identity")
    for a, b in base.composable_pairs():
        if rep[base.comp[(a, b)]] != rep[a] @ rep[b]:
            raise NonFunctorialRep(f"rep({base.comp[(a, b)]}) != rep({a}) rep({b})")


def _rep_size(rep, size):
    if size is not None:
        return size
    if not rep:
        raise NonFunctorialRep("Cannot infer the rank of an empty representation")
    return next(iter(rep.values())).rows


def vbg_trivial_core(base: FiniteGroupoid, rep, k=None, name="trivial_core") -> VBGroupoid:
    """Action groupoid G x_M E_M: s(g, e) = e, t(g, e) = rep(g) e."""
    k = _rep_size(rep, k)
    _check_functorial(base, rep, k)
    eye = Mat.identity(k)
    S = {g: eye for g in base.arrows}
    T = {g: rep[g] for g in base.arrows}
    Inv = {g: rep[g] for g in base.arrows}
    U = {x: eye for x in base.objects}
    Mul = {pair: Mat.hstack(Mat.zeros(k, k), eye) for pair in base.composable_pairs()}
    return VBGroupoid(base, 0, k, S, T, Mul, U, Inv, name=name)


def vbg_trivial_base(base: FiniteGroupoid, rep, l=None, name="trivial_base") -> VBGroupoid:
    """Representation on the core: m((g1, c1), (g2, c2)) = (g1 g2, c1 + rep(g1) c2).

    The fiber over g is C_t(g).
    """
    l = _rep_size(rep, l)
    _check_functorial(base, rep, l)
    eye = Mat.identity(l)
    empty = Mat.zeros(0, l)
    S = {g: empty for g in base.arrows}
    T = {g: empty for g in base.arrows}
    Inv = {g: -rep[base.inv[g]] for g in base.arrows}
    U = {x: Mat.zeros(l, 0) for x in base.objects}
    Mul = {(g, h): Mat.hstack(eye, rep[g]) for g, h in base.composable_pairs()}
    return VBGroupoid(base, l, 0, S, T, Mul, U, Inv, name=name)


def vbg_pullback(base: FiniteGroupoid, k, name="pullback") -> VBGroupoid:
    """Pullback groupoid: the fiber over g is (E_M)_t(g) x (E_M)_s(g)."""
    eye = Mat.identity(k)
    zero = Mat.zeros(k, k)
    S = {g: Mat.hstack(zero, eye) for g in base.arrows}
    T = {g: Mat.hstack(eye, zero) for g in base.arrows}
    Inv = {g: Mat.block([[zero, eye], [eye, zero]]) for g in base.arrows}
    U = {x: Mat.vstack(eye, eye) for x in base.objects}
    mul = Mat.block([[eye, zero, zero, zero], [zero, zero, zero, eye]])
    Mul = {pair: mul for pair in base.composable_pairs()}
    return VBGroupoid(base, k, k, S, T, Mul, U, Inv, name=name)


def _action_vb(points, deltas, l, k, name):
    base = gpd_unit(points)
    eye_l, eye_k = Mat.identity(l), Mat.identity(k)
    zero_kl, zero_lk = Mat.zeros(k, l), Mat.zeros(l, k)
    S, T, Inv, U, Mul = {}, {}, {}, {}, {}
    mul = Mat.block([[eye_l, zero_lk, eye_l, zero_lk], [zero_kl, Mat.zeros(k, k), zero_kl, eye_k]])
    for x in base.objects:
        d = deltas[x]
        if d.shape != (k, l):
            raise DimensionMismatch(f"Point {x} has shape {d.shape}, expected {(k, l)}")
        S[x] = Mat.hstack(zero_kl, eye_k)
        T[x] = Mat.hstack(d, eye_k)
        Inv[x] = Mat.block([[-eye_l, zero_lk], [d, eye_k]])
        U[x] = Mat.vstack(zero_lk, eye_k)
        Mul[(x, x)] = mul
    return VBGroupoid(base, l, k, S, T, Mul, U, Inv, name=name)


def vbg_canonical(l, k, sample, name=None) -> VBGroupoid:
    """Canonical VB-groupoid of rank (l, k) restricted to finitely many points d.

    At d: s(w, v) = v, t(w, v) = d w + v, (w1, v1) o (w2, v2) = (w1 + w2, v2).
    Points are named p0, p1, ... in sample order.
    """
    sample = list(sample)
    points = [f"p{i}" for i in range(len(sample))]
    if name is None:
        name = f"canonical_{l}_{k}"
    return _action_vb(points, dict(zip(points, sample)), l, k, name)


def vbg_from_anchored(a: Anchored2VB, name="anchored") -> VBGroupoid:
    """Action groupoid of (v1, v0) -> delta(v1) + v0 over the unit groupoid."""
    return _action_vb(a.points, a.delta, a.e1_dim, a.e0_dim, name)


def vbg_to_anchored(v: VBGroupoid) -> Anchored2VB:
    if not v.base.is_unit_groupoid():
        raise NonUnitBase(f"{v.name} is not a VB-groupoid over a unit groupoid")
    delta = {x: v.core_anchor(x) for x in v.base.objects}
    return Anchored2VB(v.base.objects, v.l, v.k, delta)


def vbg_dual(v: VBGroupoid, name=None) -> VBGroupoid:
    """Dual VB-groupoid of rank (k, l) with object fibers C*.

    Arrow fibers carry coordinates dual to the standard basis; object fibers carry
    coordinates dual to the core bases of `v`. The core basis of the dual at x is the
    image of the dual basis of (E_M)_x under e* -> e* o t[1_x], so the core-anchor of
    the dual is the transpose of the core-anchor of `v`.
    """
    report = vbg_validate(v)
    if not report.ok:
        raise ValidationError(f"Cannot dualize {v.name}: it is not a VB-groupoid", report)
    gpd = v.base
    n, l = v.n, v.l
    S, T, Inv, U, Mul, core_bases = {}, {}, {}, {}, {}, {}
    for g in gpd.arrows:
        src, tgt = gpd.src[g], gpd.tgt[g]
        src_unit, tgt_unit = gpd.unit[src], gpd.unit[tgt]
        # s*(xi)(c) = -xi(m(0_g, i(c))), t*(xi)(c) = xi(m(c, 0_g))
        through_source = v.left_translation_map(g, src_unit) @ v.Inv[src_unit] @ v.core_bases[src]
        through_target = v.right_translation_map(g, tgt_unit) @ v.core_bases[tgt]
        S[g] = -through_source.T
        T[g] = through_target.T
        Inv[g] = -v.Inv[gpd.inv[g]].T
    for x in gpd.objects:
        frame = Mat.hstack(v.core_bases[x], v.U[x])
        projection = mat_inv(frame).rows_range(0, l)
        U[x] = projection.T
        core_bases[x] = v.T[gpd.unit[x]].T
    for g, h in gpd.composable_pairs():
        fibered = v.fibered_basis(g, h)
        product = v.Mul[(g, h)] @ fibered
        dual_fibered = kernel(Mat.hstack(S[g], -T[h])).basis
        # (xi1 o xi2)(m(v1, v2)) = xi1(v1) + xi2(v2)
        values = solve_unique(product.T, fibered.T @ dual_fibered)
        Mul[(g, h)] = linear_extension(dual_fibered, values)
    if name is None:
        name = f"dual({v.name})"
    return VBGroupoid(gpd, v.k, v.l, S, T, Mul, U, Inv, core_bases=core_bases, name=name)


def vbg_same_structure(a: VBGroupoid, b: VBGroupoid) -> bool:
    """Equality of structure maps, with multiplications compared on fibered subspaces."""
    if a.base != b.base or a.rank != b.rank:
        return False
    for g in a.base.arrows:
        if a.S[g] != b.S[g] or a.T[g] != b.T[g] or a.Inv[g] != b.Inv[g]:
            return False
    for x in a.base.objects:
        if a.U[x] != b.U[x] or a.core_bases[x] != b.core_bases[x]:
            return False
    for pair in a.base.composable_pairs():
        fibered = a.fibered_basis(*pair)
        if a.Mul[pair] @ fibered != b.Mul[pair] @ fibered:
            return False
    return True
