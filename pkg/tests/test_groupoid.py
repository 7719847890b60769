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
"""Tests of finite groupoids."""

import pytest

from grpd.core.errors import NotComposable
from grpd.core.groupoid import FiniteGroupoid, gpd_compose, gpd_pair, gpd_unit, gpd_validate


def test_unit_groupoid_validates():
    g = gpd_unit(["x"])
    assert g.arrows == ("x",)
    assert gpd_validate(g).ok
    two = gpd_unit(["p", "q"])
    assert two.composable_pairs() == [("p", "p"), ("q", "q")]
    assert gpd_validate(two).ok
    assert two.is_unit_groupoid()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_groupoid_validates(n):
    g = gpd_pair(n)
    assert len(g.arrows) == n * n
    assert len(set(g.unit.values())) == n
    assert gpd_validate(g).ok
    assert g.is_unit_groupoid() == (n == 1)


def test_compose():
    g = gpd_pair(3)
    assert gpd_compose(g, "(1,2)", "(2,3)") == "(1,3)"
    assert gpd_compose(g, "(1,2)", g.unit["2"]) == "(1,2)"
    assert gpd_compose(g, "(1,2)", g.inv["(1,2)"]) == g.unit["1"]
    with pytest.raises(NotComposable):
        gpd_compose(g, "(1,2)", "(1,2)")


def test_hom_and_triples():
    g = gpd_pair(2)
    assert g.hom("2", "1") == ["(1,2)"]
    assert len(g.composable_triples()) == 16


def test_corrupted_composition_is_reported():
    g = gpd_pair(2)
    comp = dict(g.comp)
    comp[("(1,2)", "(2,1)")] = "(1,2)"
    broken = FiniteGroupoid(g.objects, g.arrows, g.src, g.tgt, comp, g.unit, g.inv)
    report = gpd_validate(broken)
    assert not report.ok
    assert any(r.witness.get("pair") == ("(1,2)", "(2,1)") for r in report.failures)


def test_associativity_failure_names_the_triple():
    # one object, three arrows, (b a) a != b (a a)
    objects = ["x"]
    arrows = ["e", "a", "b"]
    ends = {a: "x" for a in arrows}
    comp = {("e", y): y for y in arrows}
    comp.update({(y, "e"): y for y in arrows})
    comp.update({("a", "a"): "e", ("b", "b"): "e", ("a", "b"): "a", ("b", "a"): "a"})
    inv = {"e": "e", "a": "a", "b": "b"}
    g = FiniteGroupoid(objects, arrows, ends, ends, comp, {"x": "e"}, inv)
    report = gpd_validate(g)
    assert any(r.check == "associativity" for r in report.failures)
