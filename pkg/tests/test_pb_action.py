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
"""Tests of the 2-action of GL(l, k) on frames and the associated bundle."""

import pytest

from grpd.core.errors import (
    BlockStructureViolation,
    MomentMismatch,
    NotASection,
    SameArrowRequired,
)
from grpd.core.frames import BasePair, SFrame, basepair_moment, frame_dphi
from grpd.core.gl2 import GL1Element, GL2Element, gl2_s20, gl2_t21, gl2_u20, gl2_u21
from grpd.core.linalg import Mat
from grpd.core.pb_action import (
    AssociatedBundle,
    BundlePoint,
    SampledPB,
    act1,
    act2,
    associated_vb,
    change_of_coords,
    change_of_coords_base,
    principality_check,
    roundtrip_frames,
    section_translation,
    verify_2action,
)
from grpd.core.sampling import random_bisection, random_gl2, random_sframe
from grpd.data.sampler import sample_frames
from grpd.utils.rng import SplitMix64


def one(value):
    return Mat([[value]])


@pytest.fixture
def sample(instance):
    return sample_frames(instance, seed=3, per_arrow=2, basepairs=2)


def test_act1_example(canonical_one):
    p = BasePair("p0", one(1), one(1))
    assert basepair_moment(canonical_one, p) == one(1)
    moved = act1(p, GL1Element(one(1), one(2), one(2)), canonical_one)
    assert moved == BasePair("p0", one(2), one(2))
    assert basepair_moment(canonical_one, moved) == one(1)


def test_act1_checks_the_moment(canonical_one):
    with pytest.raises(MomentMismatch):
        act1(BasePair("p0", one(1), one(1)), GL1Element(one(3), one(1), one(1)), canonical_one)


def test_change_of_coords_example(canonical_one):
    identity = SFrame(canonical_one, "p0", Mat.identity(2))
    sheared = SFrame(canonical_one, "p0", Mat([[1, 1], [0, 1]]))
    e = change_of_coords(identity, sheared)
    assert e == GL2Element(one(1), one(1), one(1), one(1))
    assert act2(identity, e) == sheared


def test_act2_checks_the_moment(canonical_one):
    f = SFrame(canonical_one, "p0", Mat.identity(2))
    with pytest.raises(MomentMismatch):
        act2(f, gl2_u20(one(0)))


def test_change_of_coords_errors(canonical_one, trivial_core, rng):
    with pytest.raises(SameArrowRequired):
        change_of_coords(random_sframe(rng, trivial_core, "(1,2)"), random_sframe(rng, trivial_core, "(2,1)"))
    identity = SFrame(canonical_one, "p0", Mat.identity(2))
    swapped = SFrame(canonical_one, "p0", Mat([[0, 1], [1, 0]]))
    with pytest.raises(BlockStructureViolation):
        change_of_coords(identity, swapped)


def test_change_of_coords_base(canonical_one):
    p1 = BasePair("p0", one(1), one(1))
    p2 = BasePair("p0", one(3), one(3))
    f = change_of_coords_base(p1, p2, canonical_one)
    assert f == GL1Element(one(1), one(3), one(3))
    assert act1(p1, f, canonical_one) == p2


def test_action_axioms(instance, sample):
    report = verify_2action(sample, trials=4, seed=11)
    assert report.ok, report.failures
    assert len(report) > 0


def test_perturbed_action_is_caught(canonical_2_3):
    sample = sample_frames(canonical_2_3, seed=5, per_arrow=2, basepairs=1)

    def perturbed(f, e):
        return act2(f, gl2_u21(gl2_t21(e)))

    report = verify_2action(sample, trials=4, seed=11, action=perturbed)
    assert not report.ok
    assert "freeness" in {r.check for r in report.failures}


def test_principality(instance, sample):
    report = principality_check(sample, trials=6, seed=12)
    assert report.ok, report.failures


def test_section_translation(instance, sample, rng):
    units = random_bisection(rng, sample.moments(), with_j=False)
    report = section_translation(sample, units.__getitem__, trials=4, seed=13)
    assert report.ok, report.failures
    assert "morphism" in report.counts()

    generic = random_bisection(rng, sample.moments())
    report = section_translation(sample, generic.__getitem__, trials=4, seed=14, check_morphism=False)
    assert report.ok, report.failures
    assert report.counts()["injective"] == (1, 0)


def test_section_must_sit_over_its_moment(canonical_0_1):
    sample = sample_frames(canonical_0_1, seed=1, per_arrow=1, basepairs=0)
    with pytest.raises(NotASection):
        section_translation(sample, lambda d: gl2_u20(one(5)), trials=1, seed=0)


def test_associated_bundle(instance, sample):
    bundle = associated_vb(sample, trials=4, seed=15)
    assert bundle.report.ok, bundle.report.failures
    assert set(bundle.points) == set(sample.moments())


def test_associated_bundle_evaluation(canonical_one):
    sample = sample_frames(canonical_one, seed=2, per_arrow=1, basepairs=1)
    bundle = associated_vb(sample, trials=1, seed=0)
    identity = SFrame(canonical_one, "p0", Mat.identity(2))
    assert bundle.evaluate(identity, Mat.column([1, 0])) == Mat.column([1, 0])


def test_bundle_points(instance, sample, rng):
    bundle = associated_vb(sample, trials=2, seed=16)
    report = roundtrip_frames(sample, trials=4, seed=16, bundle=bundle)
    assert report.ok, report.failures
    assert report.counts()["reference_recovered"] == (4, 0)
    f = sample.all_frames()[0]
    point = BundlePoint(f, random_gl2(rng, frame_dphi(f)))
    assert change_of_coords(f, point.evaluate(bundle)) == point.element


class _ScaledBundle(AssociatedBundle):
    """Evaluates [f, x] as 2 Phi x."""

    def evaluate(self, f, x):
        return (f.Phi @ x) * 2


def test_bundle_points_see_the_evaluation_maps(canonical_2_3):
    sample = sample_frames(canonical_2_3, seed=6, per_arrow=2, basepairs=1)
    bundle = associated_vb(sample, trials=1, seed=0)
    scaled = _ScaledBundle(bundle.sample, bundle.model, bundle.points, bundle.report)
    report = roundtrip_frames(sample, trials=3, seed=16, bundle=scaled)
    failed = {r.check for r in report.failures}
    assert {"reference_recovered", "recovery", "surjectivity"} <= failed
    assert roundtrip_frames(sample, trials=3, seed=16, bundle=bundle).ok


def test_empty_sample_passes_with_a_note(canonical_one):
    sample = sample_frames(canonical_one, seed=0, per_arrow=0, basepairs=0)
    for report in (verify_2action(sample, 3, 0), principality_check(sample, 3, 0),
                   roundtrip_frames(sample, 3, 0), associated_vb(sample, 3, 0).report):
        assert report.ok
        assert len(report) == 0
        assert report.notes


def _sample_at(v, arrow, *frames):
    return SampledPB(v, 0, frames={arrow: [SFrame(v, arrow, Phi) for Phi in frames]})


def test_section_with_colliding_sources_is_rejected(canonical_one):
    # moments 1 and 2; b(d) = (d, 1, 0, d) has s20 = 1 at both
    sample = _sample_at(canonical_one, "p0", Mat.identity(2), Mat([[2, 0], [0, 1]]))
    assert sample.moments() == [one(1), one(2)]
    with pytest.raises(NotASection):
        section_translation(sample, lambda d: GL2Element(d, one(1), one(0), d), trials=1, seed=0)


def test_bisection_sources_are_distinct(canonical_2_3, rng):
    sample = sample_frames(canonical_2_3, seed=5, per_arrow=3, basepairs=0)
    sections = random_bisection(rng, sample.moments())
    assert set(sections) == set(sample.moments())
    assert len({gl2_s20(e) for e in sections.values()}) == len(sections)


def test_section_translation_on_pullback_seed_7(pullback):
    sample = sample_frames(pullback, 7, 8, 4)
    units = random_bisection(SplitMix64(7).spawn("sections"), sample.moments(), with_j=False)
    report = section_translation(sample, units.__getitem__, trials=20, seed=9)
    assert report.ok, report.failures
    assert report.counts()["injective"] == (1, 0)


def test_section_with_j_is_not_a_morphism(canonical_one):
    sample = _sample_at(canonical_one, "p0", Mat.identity(2))
    report = section_translation(sample, lambda d: GL2Element(d, one(1), one(1), one(1)), trials=3, seed=2,
                                 check_morphism=True)
    assert "morphism" in {r.check for r in report.failures}
    assert report.counts()["inverse"] == (3, 0)
    assert report.counts()["affine_decomposition"] == (3, 0)
