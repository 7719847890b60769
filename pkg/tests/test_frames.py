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
"""Tests of s-bisection frames and their groupoid structure."""

import pytest

from grpd.core.errors import NotComposable, SameObjectRequired
from grpd.core.fat_groupoid import fat_compose, fat_unit
from grpd.core.frames import (
    BasePair,
    SFrame,
    basepair_moment,
    fat_act_pair,
    frame_bi,
    frame_bm,
    frame_bs,
    frame_bt,
    frame_bu,
    frame_dphi,
    frame_F,
    frame_F_inv,
    frame_is_sbis,
)
from grpd.core.linalg import Mat
from grpd.core.sampling import (
    random_basepair,
    random_composable_frames,
    random_fat,
    random_invertible,
    random_sframe,
)
from grpd.core.vb_groupoid import vbg_canonical


def test_sbis_examples(canonical_one):
    zero = vbg_canonical(1, 1, [Mat([[0]])])
    assert frame_is_sbis(zero, "p0", Mat.identity(2))
    assert frame_is_sbis(canonical_one, "p0", Mat.identity(2))
    assert not frame_is_sbis(canonical_one, "p0", Mat([[1, 1], [0, -1]]))


def test_moment_examples(canonical_one, rng):
    zero = vbg_canonical(1, 1, [Mat([[0]])])
    assert frame_dphi(random_sframe(rng, zero, "p0")) == Mat([[0]])
    assert frame_dphi(SFrame(canonical_one, "p0", Mat.identity(2))) == Mat([[1]])
    assert frame_dphi(SFrame(canonical_one, "p0", Mat([[1, 1], [0, 1]]))) == Mat([["1/2"]])


def test_identity_frame(canonical_one):
    f = SFrame(canonical_one, "p0", Mat.identity(2))
    p = BasePair("p0", Mat([[1]]), Mat([[1]]))
    assert frame_bs(f) == frame_bt(f) == p
    assert frame_bm(f, f) == f
    assert frame_bu(canonical_one, p) == f
    assert frame_F(f) == (fat_unit(canonical_one, "p0"), p)


def test_product_needs_matching_base_pairs(canonical_one):
    f = SFrame(canonical_one, "p0", Mat.identity(2))
    with pytest.raises(NotComposable):
        frame_bm(f, SFrame(canonical_one, "p0", Mat.identity(2) * 2))


def test_groupoid_laws(instance, rng):
    for a, b, c in instance.base.composable_triples():
        f1, f2, f3 = random_composable_frames(rng, instance, [a, b, c])
        f12 = frame_bm(f1, f2)
        assert frame_is_sbis(instance, f12.g, f12.Phi)
        assert frame_bs(f12) == frame_bs(f2)
        assert frame_bt(f12) == frame_bt(f1)
        assert frame_bm(f12, f3) == frame_bm(f1, frame_bm(f2, f3))
        assert frame_bm(f1, frame_bu(instance, frame_bs(f1))) == f1
        assert frame_bm(frame_bi(f1), f1) == frame_bu(instance, frame_bs(f1))
        assert frame_bi(frame_bi(f1)) == f1


def test_moment_is_constant(instance, rng):
    for g, h in instance.base.composable_pairs():
        f1, f2 = random_composable_frames(rng, instance, [g, h])
        d = frame_dphi(f1)
        assert frame_dphi(f2) == d
        assert frame_dphi(frame_bm(f1, f2)) == d
        assert basepair_moment(instance, frame_bs(f1)) == d
        assert basepair_moment(instance, frame_bt(f1)) == d


def test_rank_zero_core_frames_are_all_sbis(trivial_core, rng):
    for g in trivial_core.base.arrows:
        assert frame_is_sbis(trivial_core, g, random_invertible(rng, trivial_core.n))


def test_F_is_a_bijection(instance, rng):
    gpd = instance.base
    for g in gpd.arrows:
        f = random_sframe(rng, instance, g)
        assert frame_F_inv(*frame_F(f)) == f
        assert frame_bt(f) == fat_act_pair(*frame_F(f))
        fe = random_fat(rng, instance, g)
        p = random_basepair(rng, instance, gpd.src[g])
        assert frame_F(frame_F_inv(fe, p)) == (fe, p)


def test_F_is_functorial(instance, rng):
    for g, h in instance.base.composable_pairs():
        f1, f2 = random_composable_frames(rng, instance, [g, h])
        assert frame_F(frame_bm(f1, f2))[0] == fat_compose(frame_F(f1)[0], frame_F(f2)[0])


def test_F_inverse_checks_the_object(trivial_core, rng):
    fe = random_fat(rng, trivial_core, "(2,1)")
    with pytest.raises(SameObjectRequired):
        frame_F_inv(fe, random_basepair(rng, trivial_core, "2"))
