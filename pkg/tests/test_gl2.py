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
"""Tests of the general linear 2-groupoid GL(l, k)."""

import hypothesis
import hypothesis.strategies as strat
import pytest

from grpd.core.errors import NotComposable
from grpd.core.gl2 import (
    GL1Element,
    GL2Element,
    gl1_compose,
    gl1_inverse,
    gl1_s10,
    gl1_unit,
    gl2_i20,
    gl2_i21,
    gl2_isotropy_crossed_module,
    gl2_m20,
    gl2_m21,
    gl2_matrix,
    gl2_member,
    gl2_s20,
    gl2_s21,
    gl2_t21,
    gl2_transpose,
    gl2_u20,
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
from grpd.core.linalg import Mat
from grpd.core.sampling import (
    random_crossed_member,
    random_gl1,
    random_gl2,
    random_isotropy,
    random_matrix,
    random_vertical,
)
from grpd.suites.gl2 import GL2Suite
from grpd.utils.args import Args
from grpd.utils.rng import SplitMix64

RANKS = [(1, 1), (2, 1), (1, 2), (2, 3)]

seeds = strat.integers(min_value=0, max_value=2 ** 64 - 1)
ranks = strat.sampled_from(RANKS)


def s(value):
    return Mat([[value]])


def cell(d, A, J, B):
    return GL2Element(s(d), s(A), s(J), s(B))


def test_membership_examples():
    assert gl2_member(s(0), s(2), s(5), s(3))
    assert not gl2_member(s(1), s(1), s(-1), s(1))
    assert gl2_member(s(1), s(4), s(1), s(1))


def test_structure_map_examples():
    e = cell(1, 4, 1, 1)
    assert gl2_s20(e) == s(2)
    assert gl2_t21(e) == GL1Element(s(1), s(4), s(2))
    assert gl2_s21(e) == GL1Element(s(1), s(2), s(1))
    flat = cell(0, 2, 1, 3)
    assert gl2_s20(flat) == s(0)
    assert gl2_t21(flat) == gl2_s21(flat) == GL1Element(s(0), s(2), s(3))


def test_vertical_composition_example():
    assert gl2_m20(cell(0, 2, 1, 3), cell(0, 1, 0, 2)) == cell(0, 2, 1, 6)
    assert gl2_i20(cell(0, 2, 1, 3)) == cell(0, "1/2", "-3/2", "1/3")


def test_horizontal_composition_example():
    first, second = cell(0, 2, 1, 1), cell(0, 2, 2, 1)
    assert gl2_m21(first, second) == cell(0, 2, 3, 1)
    assert gl2_matrix(gl2_m21(first, second)) == Mat([[2, 3], [0, 1]])


def test_compositions_check_boundaries():
    with pytest.raises(NotComposable):
        gl2_m20(cell(1, 4, 1, 1), cell(1, 1, 0, 1))
    with pytest.raises(NotComposable):
        gl2_m21(cell(1, 4, 1, 1), cell(1, 4, 1, 1))


def test_units():
    e = cell(1, 4, 1, 1)
    assert gl2_i20(gl2_u20(s(1))) == gl2_u20(s(1))
    assert gl2_i21(gl2_u21(GL1Element(s(1), s(3), s(3)))) == gl2_u21(GL1Element(s(1), s(3), s(3)))
    assert gl2_m21(gl2_u21(gl2_t21(e)), e) == e


@hypothesis.given(seeds, ranks)
def test_vertical_laws(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    d = random_matrix(rng, k, l)
    e1 = random_gl2(rng, d)
    e2 = random_gl2(rng, gl2_s20(e1))
    e3 = random_gl2(rng, gl2_s20(e2))
    assert gl2_m20(gl2_m20(e1, e2), e3) == gl2_m20(e1, gl2_m20(e2, e3))
    assert gl2_matrix(gl2_m20(e1, e2)) == gl2_matrix(e1) @ gl2_matrix(e2)
    assert gl2_m20(e1, gl2_i20(e1)) == gl2_u20(d)
    assert gl2_m20(gl2_u20(d), e1) == e1


@hypothesis.given(seeds, ranks)
def test_horizontal_laws(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    e1 = random_gl2(rng, random_matrix(rng, k, l))
    e2 = random_vertical(rng, e1)
    e3 = random_vertical(rng, e2)
    assert gl2_s21(e1) == gl2_t21(e2)
    assert gl2_m21(gl2_m21(e1, e2), e3) == gl2_m21(e1, gl2_m21(e2, e3))
    assert gl2_m21(e1, gl2_i21(e1)) == gl2_u21(gl2_t21(e1))
    assert gl2_i21(gl2_i21(e1)) == e1
    m = gl2_m21(e1, e2)
    assert gl2_member(m.d, m.A, m.J, m.B)


@hypothesis.given(seeds, ranks)
def test_interchange(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    g1 = random_gl2(rng, random_matrix(rng, k, l))
    g3 = random_vertical(rng, g1)
    g2 = random_gl2(rng, gl2_s20(g1))
    g4 = random_vertical(rng, g2)
    assert gl2_s20(g1) == gl2_s20(g3)
    assert gl2_m21(gl2_m20(g1, g2), gl2_m20(g3, g4)) == gl2_m20(gl2_m21(g1, g3), gl2_m21(g2, g4))


@hypothesis.given(seeds, ranks)
def test_transpose_reverses_vertical_composition(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    e1 = random_gl2(rng, random_matrix(rng, k, l))
    e2 = random_gl2(rng, gl2_s20(e1))
    assert gl2_transpose(gl2_m20(e1, e2)) == gl2_m20(gl2_transpose(e2), gl2_transpose(e1))
    assert gl2_transpose(gl2_transpose(e1)) == e1


@hypothesis.given(seeds, ranks)
def test_gl1_laws(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    d = random_matrix(rng, k, l)
    f1 = random_gl1(rng, d)
    f2 = random_gl1(rng, gl1_s10(f1))
    assert gl1_s10(gl1_compose(f1, f2)) == gl1_s10(f2)
    assert gl1_compose(gl1_unit(d), f1) == f1
    assert gl1_compose(f1, gl1_inverse(f1)) == gl1_unit(d)


@hypothesis.given(seeds, ranks)
def test_gle_presentation(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    e = random_gl2(rng, random_matrix(rng, k, l))
    c = gle_from_gl2(e)
    assert gle_member(c.x, c.y, c.d_x, c.d_y, c.A, c.B, c.J, c.A2, c.B2)
    assert gle_member("x", "x", Mat.zeros(k, l), Mat.zeros(k, l), Mat.identity(l), Mat.identity(k))


@hypothesis.given(seeds)
def test_crossed_module_identities(seed):
    rng = SplitMix64(seed)
    module = gl2_isotropy_crossed_module(2, 1, random_matrix(rng, 1, 2))
    J1, J2 = random_crossed_member(rng, module), random_crossed_member(rng, module)
    g = random_isotropy(rng, module)
    assert module.is_isotropy(g)
    assert module.is_isotropy(module.boundary(J1))
    equivariance = gl1_compose(gl1_compose(g, module.boundary(J1)), gl1_inverse(g))
    assert module.boundary(module.conjugate(g, J1)) == equivariance
    peiffer = module.multiply(module.multiply(J1, J2), module.inverse(J1))
    assert module.conjugate(module.boundary(J1), J2) == peiffer
    assert module.multiply(J1, module.unit()) == J1


def _gle(e):
    """The GL(E) 2-cell of e with its points labelled by their complexes."""
    return gle_from_gl2(e, gl2_s20(e), e.d)


def _is_member(c):
    return gle_member(c.x, c.y, c.d_x, c.d_y, c.A, c.B, c.J, c.A2, c.B2)


@hypothesis.given(seeds, ranks)
def test_gle_compositions_match_gl2(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    e1 = random_gl2(rng, random_matrix(rng, k, l))
    e2 = random_gl2(rng, gl2_s20(e1))
    v1 = random_vertical(rng, e1)
    assert gle_compose(_gle(e1), _gle(e2)) == _gle(gl2_m20(e1, e2))
    assert gle_compose_2cells(_gle(e1), _gle(v1)) == _gle(gl2_m21(e1, v1))
    assert gle_inverse(_gle(e1)) == _gle(gl2_i20(e1))
    assert gle_inverse_2cell(_gle(e1)) == _gle(gl2_i21(e1))
    assert _is_member(gle_compose(_gle(e1), _gle(e2)))
    assert gle_target(_gle(e1)) == gle_from_gl1(gl2_t21(e1), gl2_s20(e1), e1.d)
    assert gle_source(_gle(e1)) == gle_from_gl1(gl2_s21(e1), gl2_s20(e1), e1.d)


@hypothesis.given(seeds, ranks)
def test_gle_units_and_inverses(seed, rank):
    rng = SplitMix64(seed)
    l, k = rank
    e = random_gl2(rng, random_matrix(rng, k, l))
    c = _gle(e)
    x, y = c.x, c.y
    assert gle_compose(c, gle_unit_2cell(gle_unit(x, c.d_x))) == c
    assert gle_compose(gle_unit_2cell(gle_unit(y, c.d_y)), c) == c
    assert gle_compose(c, gle_inverse(c)) == gle_unit_2cell(gle_unit(y, c.d_y))
    assert gle_compose_2cells(c, gle_inverse_2cell(c)) == gle_unit_2cell(gle_target(c))
    f = random_gl1(rng, e.d)
    one_cell = gle_from_gl1(f, gl1_s10(f), f.d)
    assert gle_compose(one_cell, gle_inverse(one_cell)) == gle_unit(f.d, f.d)
    assert _is_member(gle_inverse(c))


def test_gle_composition_checks_endpoints():
    c = gle_from_gl2(cell(1, 1, 1, 1), "x", "y")
    with pytest.raises(NotComposable):
        gle_compose(c, c)
    with pytest.raises(NotComposable):
        gle_compose(gle_target(c), gle_inverse(c))
    with pytest.raises(NotComposable):
        gle_compose_2cells(c, c)


def test_gl2_suite_trial_counts():
    suite = GL2Suite(Args(trials=2, gl2_trials=3, crossed_module_trials=1,
                          gl2_ranks="1,1", crossed_module_points=2))
    counts = suite.run().counts()
    assert counts["m20_associativity"] == (3, 0)
    assert counts["crossed_module_peiffer"] == (2, 0)
    defaults = GL2Suite(Args(trials=2, gl2_ranks="1,1", crossed_module_points=1)).run().counts()
    assert defaults["m20_associativity"] == (2, 0)
    assert defaults["crossed_module_peiffer"] == (2, 0)
