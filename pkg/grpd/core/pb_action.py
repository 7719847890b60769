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
"""The principal 2-action of GL(l, k) on s-bisection frames and the associated bundle."""

from dataclasses import dataclass, field
import logging
from typing import Dict, List

from grpd.core.errors import (
    BlockStructureViolation,
    MomentMismatch,
    NotASection,
    SameArrowRequired,
    SameObjectRequired,
    WellDefinednessFailure,
)
from grpd.core.frames import (
    BasePair,
    SFrame,
    basepair_moment,
    frame_bm,
    frame_bs,
    frame_bt,
    frame_bu,
    frame_dphi,
    frame_is_sbis,
)
from grpd.core.gl2 import (
    GL1Element,
    GL2Element,
    gl2_i20,
    gl2_m20,
    gl2_m21,
    gl2_matrix,
    gl2_member,
    gl2_s20,
    gl2_s21,
    gl2_t21,
    gl2_u20,
    gl2_u21,
)
from grpd.core.linalg import Mat, mat_inv, rank, solve_unique
from grpd.core.report import Report
from grpd.core.sampling import (
    random_frame_with_target,
    random_gl2,
    random_invertible,
    random_matrix,
    random_sframe,
    random_vertical,
)
from grpd.core.vb_groupoid import VBGroupoid, vbg_canonical
from grpd.utils.rng import SplitMix64

logger = logging.getLogger(__name__)

__all__ = [
    "SampledPB",
    "BundlePoint",
    "AssociatedBundle",
    "act2",
    "act1",
    "change_of_coords",
    "change_of_coords_base",
    "verify_2action",
    "principality_check",
    "associated_vb",
    "roundtrip_frames",
    "section_translation",
    "pick_composable",
]


@dataclass
class SampledPB:
    """A finite seeded sample of the frame bundle of a VB-groupoid."""
    vb: VBGroupoid
    seed: int
    frames: Dict[str, List[SFrame]] = field(default_factory=dict)
    basepairs: Dict[str, List[BasePair]] = field(default_factory=dict)

    def all_frames(self):
        return [f for g in self.vb.base.arrows for f in self.frames.get(g, [])]

    def all_basepairs(self):
        return [p for x in self.vb.base.objects for p in self.basepairs.get(x, [])]

    def moments(self):
        """Distinct moment values of the sampled frames, in sample order."""
        seen = []
        for f in self.all_frames():
            d = frame_dphi(f)
            if d not in seen:
                seen.append(d)
        return seen

    def is_empty(self):
        return not self.all_frames()


def act2(f: SFrame, e: GL2Element) -> SFrame:
    """Phi . [[A, JB], [0, B]], defined when d_phi = t20(e)."""
    if frame_dphi(f) != e.d:
        raise MomentMismatch(f"Frame at {f.g} has moment {frame_dphi(f)}, the element is based at {e.d}")
    return SFrame(f.vb, f.g, f.Phi @ gl2_matrix(e))


def act1(p: BasePair, f: GL1Element, v: VBGroupoid) -> BasePair:
    if basepair_moment(v, p) != f.d:
        raise MomentMismatch(f"Base pair at {p.x} has moment {basepair_moment(v, p)}, the element is based at {f.d}")
    return BasePair(p.x, p.phi_c @ f.A, p.phi_b @ f.B)


def change_of_coords(f1: SFrame, f2: SFrame) -> GL2Element:
    """The unique e with act2(f1, e) = f2."""
    if f1.g != f2.g:
        raise SameArrowRequired(f"Frames sit at {f1.g} and {f2.g}")
    l, n = f1.vb.l, f1.vb.n
    m = solve_unique(f1.Phi, f2.Phi)
    if not m.sub(l, n, 0, l).is_zero():
        raise BlockStructureViolation(f"Change of coordinates {m} is not block upper triangular")
    A, X, B = m.sub(0, l, 0, l), m.sub(0, l, l, n), m.sub(l, n, l, n)
    return GL2Element(frame_dphi(f1), A, X @ mat_inv(B), B)


def change_of_coords_base(p1: BasePair, p2: BasePair, v: VBGroupoid) -> GL1Element:
    if p1.x != p2.x:
        raise SameObjectRequired(f"Base pairs sit at {p1.x} and {p2.x}")
    return GL1Element(basepair_moment(v, p1), solve_unique(p1.phi_c, p2.phi_c), solve_unique(p1.phi_b, p2.phi_b))


def _pick_frame(rng, sp):
    return rng.choice(sp.all_frames())


def pick_composable(rng, sp):
    """A sampled frame f1 at g and a random frame f2 at h with bs(f1) = bt(f2)."""
    gpd = sp.vb.base
    f1 = _pick_frame(rng, sp)
    h = rng.choice([a for a in gpd.arrows if gpd.tgt[a] == gpd.src[f1.g]])
    return f1, random_frame_with_target(rng, sp.vb, h, frame_bs(f1))


def verify_2action(sp: SampledPB, trials, seed, action=None, instance=None) -> Report:
    """Check the 2-action axioms and the change-of-coordinates identities on random data.

    `action` replaces act2, so that a broken action can be shown to be caught.
    """
    action = action or act2
    v = sp.vb
    report = Report("verify_2action", instance=instance or v.name, seed=seed)
    if sp.is_empty():
        report.note("empty frame sample; nothing to check")
        return report
    rng = SplitMix64(seed)
    eye_l, eye_k = Mat.identity(v.l), Mat.identity(v.k)
    for trial in range(trials):
        f = _pick_frame(rng, sp)
        d = frame_dphi(f)
        report.guard("moment_compatibility", trial, lambda: (
            basepair_moment(v, frame_bs(f)) == d and basepair_moment(v, frame_bt(f)) == d,
            lambda: {"frame": f.Phi, "moment": d}))

        e = random_gl2(rng, d)
        moved = action(f, e)
        report.guard("moment_equivariance", trial, lambda: (
            frame_dphi(moved) == gl2_s20(e), lambda: {"element": str(e), "moment": frame_dphi(moved)}))
        report.guard("source_compatibility", trial, lambda: (
            frame_bs(moved) == act1(frame_bs(f), gl2_s21(e), v), lambda: {"element": str(e)}))
        report.guard("target_compatibility", trial, lambda: (
            frame_bt(moved) == act1(frame_bt(f), gl2_t21(e), v), lambda: {"element": str(e)}))
        report.guard("freeness", trial, lambda: (
            change_of_coords(f, moved) == e, lambda: {"element": str(e), "frame": f.Phi}))

        # successive changes compose vertically
        e2 = random_gl2(rng, gl2_s20(e))
        report.guard("change_of_coords_vertical", trial, lambda: (
            change_of_coords(f, action(moved, e2)) == gl2_m20(e, e2),
            lambda: {"first": str(e), "second": str(e2)}))

        # closed forms on the induced base frames
        def base_forms():
            inv_dj = mat_inv(eye_k + d @ e.J)
            identity = (eye_l - e.J @ inv_dj @ d) @ (eye_l + e.J @ d) == eye_l
            source = change_of_coords_base(frame_bs(f), frame_bs(moved), v)
            target = change_of_coords_base(frame_bt(f), frame_bt(moved), v)
            C = mat_inv(eye_l + e.J @ d) @ e.A
            D = (eye_k + d @ e.J) @ e.B
            passed = (identity and source == GL1Element(d, C, e.B) and target == GL1Element(d, e.A, D))
            return passed, lambda: {"element": str(e), "source": str(source), "target": str(target)}
        report.guard("change_of_coords_base", trial, base_forms)

        f1, f2 = pick_composable(rng, sp)
        g, h = f1.g, f2.g
        product = frame_bm(f1, f2)
        report.guard("d_constancy", trial, lambda: (
            frame_dphi(f1) == frame_dphi(f2) == frame_dphi(product),
            lambda: {"pair": (g, h), "d1": frame_dphi(f1), "d2": frame_dphi(f2)}))
        e1 = random_gl2(rng, frame_dphi(f1))
        e2 = random_vertical(rng, e1)
        report.guard("morphism", trial, lambda: (
            frame_bm(action(f1, e1), action(f2, e2)) == action(product, gl2_m21(e1, e2)),
            lambda: {"pair": (g, h), "e1": str(e1), "e2": str(e2)}))

        def horizontal():
            g1 = random_sframe(rng, v, g)
            g2 = random_frame_with_target(rng, v, h, frame_bs(g1))
            c1, c2 = change_of_coords(f1, g1), change_of_coords(f2, g2)
            whole = change_of_coords(product, frame_bm(g1, g2))
            return whole == gl2_m21(c1, c2), lambda: {"pair": (g, h), "whole": str(whole)}
        report.guard("change_of_coords_horizontal", trial, horizontal)
    logger.debug("verify_2action %s: %d records", report.instance, len(report))
    return report


def principality_check(sp: SampledPB, trials, seed, instance=None) -> Report:
    """Fiberwise bijectivity: transitivity and freeness on arrows and on objects."""
    v = sp.vb
    report = Report("principality_check", instance=instance or v.name, seed=seed)
    if sp.is_empty():
        report.note("empty frame sample; nothing to check")
        return report
    rng = SplitMix64(seed)
    for trial in range(trials):
        f1 = _pick_frame(rng, sp)
        f2 = rng.choice(sp.frames[f1.g])

        def transitive():
            e = change_of_coords(f1, f2)
            passed = gl2_member(e.d, e.A, e.J, e.B) and act2(f1, e) == f2
            return passed, lambda: {"arrow": f1.g, "element": str(e)}
        report.guard("transitivity", trial, transitive)

        def injective():
            d = frame_dphi(f1)
            e, e2 = random_gl2(rng, d), random_gl2(rng, d)
            return (e == e2) == (act2(f1, e) == act2(f1, e2)), lambda: {"e": str(e), "e2": str(e2)}
        report.guard("injectivity", trial, injective)

        others = [g for g in v.base.arrows if g != f1.g and sp.frames.get(g)]
        if others:
            foreign = rng.choice(sp.frames[rng.choice(others)])
            try:
                change_of_coords(f1, foreign)
                report.fail("rejects_foreign_arrow", trial, arrows=(f1.g, foreign.g))
            except SameArrowRequired:
                report.check("rejects_foreign_arrow", True, trial)

        pairs = sp.basepairs.get(rng.choice(v.base.objects), [])
        if pairs:
            p1, p2 = rng.choice(pairs), rng.choice(pairs)
            report.guard("base_transitivity", trial, lambda: (
                act1(p1, change_of_coords_base(p1, p2, v), v) == p2, lambda: {"object": p1.x}))
    return report


@dataclass
class AssociatedBundle:
    """The bundle associated to the sampled frames and the identity 2-representation.

    `model` is the canonical VB-groupoid at the sampled moment values; its point named
    `points[d]` carries the representation at moment value d.
    """
    sample: SampledPB
    model: VBGroupoid
    points: Dict[Mat, str]
    report: Report

    def evaluate(self, f: SFrame, x: Mat) -> Mat:
        """[f, x] -> Phi x."""
        return f.Phi @ x

    def evaluate_base(self, p: BasePair, x: Mat) -> Mat:
        """[p, (w, v)] on the object level: the core and base vectors at p.x."""
        v = self.sample.vb
        l = v.l
        return v.core_bases[p.x] @ p.phi_c @ x.rows_range(0, l), p.phi_b @ x.rows_range(l, v.n)


def associated_vb(sp: SampledPB, trials=20, seed=0, strict=True, instance=None) -> AssociatedBundle:
    """Certify the evaluation maps of the associated bundle on the sample.

    With `strict`, a representative change that moves an evaluation raises
    WellDefinednessFailure.
    """
    v = sp.vb
    report = Report("associated_vb", instance=instance or v.name, seed=seed)
    moments = sp.moments()
    model = vbg_canonical(v.l, v.k, moments, name=f"model({v.name})")
    points = {d: f"p{i}" for i, d in enumerate(moments)}
    bundle = AssociatedBundle(sp, model, points, report)
    if sp.is_empty():
        report.note("empty frame sample; nothing to check")
        return bundle
    rng = SplitMix64(seed)
    for g in v.base.arrows:
        for f in sp.frames.get(g, []):
            report.check("full_rank", rank(f.Phi) == v.n, witness=lambda: {"arrow": g, "frame": f.Phi})
    for trial in range(trials):
        f = _pick_frame(rng, sp)
        d = frame_dphi(f)
        x = random_matrix(rng, v.n, 1)
        e = random_gl2(rng, d)
        moved = act2(f, e)
        transformed = solve_unique(gl2_matrix(e), x)
        same = bundle.evaluate(moved, transformed) == bundle.evaluate(f, x)
        report.check("well_defined", same, trial, lambda: {"arrow": f.g, "element": str(e), "vector": x})
        if strict and not same:
            raise WellDefinednessFailure(f"Evaluation at {f.g} depends on the representative")

        # structure maps of the model go to those of v
        w, b = x.rows_range(0, v.l), x.rows_range(v.l, v.n)
        source, target = frame_bs(f), frame_bt(f)
        report.check("source_equivariance", v.S[f.g] @ bundle.evaluate(f, x) == source.phi_b @ b, trial,
                     lambda: {"arrow": f.g})
        report.check("target_equivariance", v.T[f.g] @ bundle.evaluate(f, x) == target.phi_b @ (d @ w + b), trial,
                     lambda: {"arrow": f.g})

        p = rng.choice(sp.basepairs[source.x]) if sp.basepairs.get(source.x) else source
        core, base = bundle.evaluate_base(p, x)
        base_change = GL1Element(basepair_moment(v, p), random_invertible(rng, v.l), random_invertible(rng, v.k))
        q = act1(p, base_change, v)
        core2, base2 = bundle.evaluate_base(
            q, Mat.vstack(solve_unique(base_change.A, w), solve_unique(base_change.B, b)))
        report.check("base_well_defined", core == core2 and base == base2, trial, lambda: {"object": p.x})

        first, second = pick_composable(rng, sp)
        g, h = first.g, second.g
        d = frame_dphi(first)
        point = points[d]
        x2 = random_matrix(rng, v.n, 1)
        w2, b2 = x2.rows_range(0, v.l), x2.rows_range(v.l, v.n)
        w1 = random_matrix(rng, v.l, 1)
        x1 = Mat.vstack(w1, d @ w2 + b2)
        product = model.Mul[(point, point)] @ Mat.vstack(x1, x2)
        lhs = v.Mul[(g, h)] @ Mat.vstack(bundle.evaluate(first, x1), bundle.evaluate(second, x2))
        rhs = bundle.evaluate(frame_bm(first, second), product)
        report.check("multiplication", lhs == rhs, trial, lambda: {"pair": (g, h), "lhs": lhs, "rhs": rhs})
    return bundle


@dataclass(frozen=True)
class BundlePoint:
    """The abstract point reference . element of the principal bundle."""
    reference: SFrame
    element: GL2Element

    def act(self, e: GL2Element) -> "BundlePoint":
        return BundlePoint(self.reference, gl2_m20(self.element, e))

    def evaluate(self, bundle: AssociatedBundle) -> SFrame:
        """The frame x -> [p, x] of the associated bundle, read off on the standard basis.

        [reference . e, x] is evaluated as [reference, e x].
        """
        Phi = bundle.evaluate(self.reference, gl2_matrix(self.element))
        return SFrame(self.reference.vb, self.reference.g, Phi)


def roundtrip_frames(sp: SampledPB, trials, seed, instance=None, bundle=None) -> Report:
    """Bundle points and s-frames of the associated bundle correspond one to one."""
    v = sp.vb
    report = Report("roundtrip_frames", instance=instance or v.name, seed=seed)
    if sp.is_empty():
        report.note("empty frame sample; nothing to check")
        return report
    if bundle is None:
        bundle = associated_vb(sp, 0, seed, strict=False, instance=instance)
    rng = SplitMix64(seed)
    for trial in range(trials):
        reference = _pick_frame(rng, sp)
        d = frame_dphi(reference)
        report.guard("reference_recovered", trial, lambda: (
            BundlePoint(reference, gl2_u20(d)).evaluate(bundle) == reference, lambda: {"arrow": reference.g}))
        point = BundlePoint(reference, random_gl2(rng, d))
        frame = point.evaluate(bundle)
        report.check("frame_is_sbis", frame_is_sbis(v, frame.g, frame.Phi), trial, lambda: {"frame": frame.Phi})
        e = random_gl2(rng, gl2_s20(point.element))
        report.guard("equivariance", trial, lambda: (
            point.act(e).evaluate(bundle) == act2(frame, e), lambda: {"element": str(e)}))
        report.guard("recovery", trial, lambda: (
            change_of_coords(reference, frame) == point.element, lambda: {"element": str(point.element)}))
        target = rng.choice(sp.frames[reference.g])
        report.guard("surjectivity", trial, lambda: (
            BundlePoint(reference, change_of_coords(reference, target)).evaluate(bundle) == target,
            lambda: {"arrow": reference.g}))
        pairs = sp.basepairs.get(rng.choice(v.base.objects), [])
        if pairs:
            q0, q = rng.choice(pairs), rng.choice(pairs)
            report.guard("base_bijection", trial, lambda: (
                frame_bs(frame_bu(v, q)) == q
                and act1(q0, change_of_coords_base(q0, q, v), v) == q, lambda: {"object": q.x}))
    return report


def section_translation(sp: SampledPB, b, trials, seed, check_morphism=None, instance=None) -> Report:
    """Translation of frames by a section b of moment values into GL(l, k).

    phi_b(f) = act2(f, b(d_f)). On the sampled moment values b must be a bisection,
    t20(b(d)) = d with d -> s20(b(d)) injective, or NotASection is raised. The morphism
    property is checked when every sampled b(d) is a 21-unit, or when `check_morphism`
    asks for it.
    """
    v = sp.vb
    report = Report("section_translation", instance=instance or v.name, seed=seed)
    if sp.is_empty():
        report.note("empty frame sample; nothing to check")
        return report
    moments = sp.moments()
    sources = {}
    for d in moments:
        if b(d).d != d:
            raise NotASection(f"b({d}) is based at {b(d).d}")
        s = gl2_s20(b(d))
        if s in sources:
            raise NotASection(f"s20 of the section takes the value {s} at both {sources[s]} and {d}")
        sources[s] = d
    if check_morphism is None:
        check_morphism = all(b(d).J.is_zero() for d in moments)

    def translate(f):
        return act2(f, b(frame_dphi(f)))

    frames = sp.all_frames()
    images = [translate(f) for f in frames]
    report.check("injective", len(set(images)) == len(set(frames)))
    rng = SplitMix64(seed)
    for trial in range(trials):
        f = _pick_frame(rng, sp)
        d = frame_dphi(f)
        image = translate(f)
        report.guard("inverse", trial, lambda: (
            act2(image, gl2_i20(b(d))) == f, lambda: {"arrow": f.g}))
        report.guard("affine_decomposition", trial, lambda: (
            image == frame_bm(act2(f, gl2_u21(gl2_t21(b(d)))), act2(frame_bu(v, frame_bs(f)), b(d))),
            lambda: {"arrow": f.g, "section": str(b(d))}))
        if check_morphism:
            f1, f2 = pick_composable(rng, sp)
            g, h = f1.g, f2.g
            report.guard("morphism", trial, lambda: (
                translate(frame_bm(f1, f2)) == frame_bm(translate(f1), translate(f2)),
                lambda: {"pair": (g, h)}))
    return report
