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
"""Finite groupoids."""

from grpd.core.errors import GrpdError, NotComposable
from grpd.core.report import Report

__all__ = [
    "FiniteGroupoid",
    "gpd_validate",
    "gpd_pair",
    "gpd_unit",
    "gpd_compose",
]


class FiniteGroupoid(object):
    """A groupoid with finitely many objects and arrows.

    Composition follows m(g1, g2) = g1 g2, defined when src(g1) = tgt(g2).
    Identifiers are opaque strings.
    """

    def __init__(self, objects, arrows, src, tgt, comp, unit, inv):
        self.objects = tuple(str(x) for x in objects)
        self.arrows = tuple(str(a) for a in arrows)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.comp = dict(comp)
        self.unit = dict(unit)
        self.inv = dict(inv)

    def compose(self, a, b):
        """comp(a, b), defined when src(a) = tgt(b)."""
        if self.src[a] != self.tgt[b]:
            raise NotComposable(f"Cannot compose {a} after {b}: src({a}) = {self.src[a]}, tgt({b}) = {self.tgt[b]}")
        return self.comp[(a, b)]

    def composable_pairs(self):
        return [(a, b) for a in self.arrows for b in self.arrows if self.src[a] == self.tgt[b]]

    def composable_triples(self):
        return [(a, b, c)
                for a, b in self.composable_pairs()
                for c in self.arrows if self.src[b] == self.tgt[c]]

    def hom(self, x, y):
        """Arrows from x to y."""
        return [a for a in self.arrows if self.src[a] == x and self.tgt[a] == y]

    def is_unit_groupoid(self):
        return (len(self.arrows) == len(self.objects)
                and all(self.src.get(self.unit.get(x)) == x for x in self.objects)
                and set(self.unit.values()) == set(self.arrows))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (self.objects == other.objects and self.arrows == other.arrows
                and self.src == other.src and self.tgt == other.tgt
                and self.comp == other.comp and self.unit == other.unit
                and self.inv == other.inv)

    def __repr__(self):
        return f"FiniteGroupoid(objects={list(self.objects)}, arrows={list(self.arrows)})"


def gpd_validate(g: FiniteGroupoid) -> Report:
    """Check the groupoid axioms; the report lists every violated instance."""
    report = Report("gpd_validate")
    objects = set(g.objects)
    for a in g.arrows:
        if g.src.get(a) not in objects or g.tgt.get(a) not in objects:
            report.fail("arrow_endpoints", arrow=a)
            return report
    for x in g.objects:
        u = g.unit.get(x)
        if u not in g.arrows or g.src[u] != x or g.tgt[u] != x:
            report.fail("unit_endpoints", object=x, unit=u)
            return report
    pairs = set(g.composable_pairs())
    for key in g.comp:
        if key not in pairs:
            report.fail("comp_domain", pair=key)
    for a, b in sorted(pairs):
        c = g.comp.get((a, b))
        if c is None:
            report.fail("comp_domain", pair=(a, b))
            continue
        if c not in g.arrows or g.src[c] != g.src[b] or g.tgt[c] != g.tgt[a]:
            report.fail("comp_endpoints", pair=(a, b), result=c)
    if not report.ok:
        return report
    for a, b, c in g.composable_triples():
        left = g.comp[(g.comp[(a, b)], c)]
        right = g.comp[(a, g.comp[(b, c)])]
        if left != right:
            report.fail("associativity", triple=(a, b, c), left=left, right=right)
    for a in g.arrows:
        if g.comp[(g.unit[g.tgt[a]], a)] != a or g.comp[(a, g.unit[g.src[a]])] != a:
            report.fail("unit_law", arrow=a)
        b = g.inv.get(a)
        if b not in g.arrows or g.src[b] != g.tgt[a] or g.tgt[b] != g.src[a]:
            report.fail("inverse_endpoints", arrow=a, inverse=b)
            continue
        if g.comp[(a, b)] != g.unit[g.tgt[a]] or g.comp[(b, a)] != g.unit[g.src[a]]:
            report.fail("inverse_law", arrow=a, inverse=b)
        if g.inv.get(b) != a:
            report.fail("double_inverse", arrow=a)
    return report


def _pair_arrow(a, b):
    return f"({a},{b})"


def gpd_pair(n) -> FiniteGroupoid:
    """Pair groupoid on objects 1..n; the arrow (a,b) goes from b to a."""
    if n < 1:
        raise GrpdError(f"A pair groupoid needs at least one object, got {n}")
    objects = [str(i) for i in range(1, n + 1)]
    arrows, src, tgt, comp, unit, inv = [], {}, {}, {}, {}, {}
    for a in objects:
        for b in objects:
            arrow = _pair_arrow(a, b)
            arrows.append(arrow)
            tgt[arrow] = a
            src[arrow] = b
            inv[arrow] = _pair_arrow(b, a)
        unit[a] = _pair_arrow(a, a)
    for a in objects:
        for b in objects:
            for c in objects:
                comp[(_pair_arrow(a, b), _pair_arrow(b, c))] = _pair_arrow(a, c)
    return FiniteGroupoid(objects, arrows, src, tgt, comp, unit, inv)


def gpd_unit(points) -> FiniteGroupoid:
    """Unit groupoid: one identity arrow per point, named like the point."""
    objects = [str(p) for p in points]
    if len(set(objects)) != len(objects):
        raise GrpdError(f"Duplicate points in {objects}")
    ids = {x: x for x in objects}
    comp = {(x, x): x for x in objects}
    return FiniteGroupoid(objects, objects, ids, ids, comp, ids, ids)


def gpd_compose(g: FiniteGroupoid, a, b):
    return g.compose(a, b)
