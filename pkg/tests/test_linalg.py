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
"""Tests of exact linear algebra."""

from fractions import Fraction

import hypothesis
import hypothesis.strategies as strat
import pytest

from grpd.core.errors import DimensionMismatch, NoSolution, NonUniqueSolution, SingularMatrix
from grpd.core.linalg import (
    Mat,
    Subspace,
    annihilator,
    extend_to_basis,
    image,
    is_complement,
    kernel,
    linear_extension,
    mat_inv,
    rank,
    rref,
    solve_any,
    solve_unique,
)

fractions = strat.fractions(min_value=-4, max_value=4, max_denominator=4)


def matrices(rows, cols):
    return strat.lists(strat.lists(fractions, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda grid: Mat.from_grid(grid, rows, cols))


square = strat.integers(min_value=1, max_value=3).flatmap(lambda n: matrices(n, n))
wide = strat.tuples(strat.integers(1, 3), strat.integers(1, 4)).flatmap(lambda s: matrices(*s))


def test_products():
    assert Mat.identity(2) @ Mat.identity(2) == Mat.identity(2)
    assert Mat([[2]]) @ Mat([[3]]) == Mat([[6]])
    assert Mat([[1, 1], [0, 1]]) @ Mat([[1, 1], [0, 1]]) == Mat([[1, 2], [0, 1]])


def test_product_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        Mat.identity(2) @ Mat.identity(3)


def test_inverses():
    assert mat_inv(Mat.identity(3)) == Mat.identity(3)
    assert mat_inv(Mat([[2]])) == Mat([["1/2"]])
    assert mat_inv(Mat([[1, 1], [0, 1]])) == Mat([[1, -1], [0, 1]])
    with pytest.raises(SingularMatrix):
        mat_inv(Mat([[1, 2], [2, 4]]))


def test_entries_are_exact():
    m = Mat([["1/3", 2], [Fraction(5, 7), "-4/6"]])
    assert m.entry(0, 0) == Fraction(1, 3)
    assert m.to_grid() == [["1/3", "2"], ["5/7", "-2/3"]]
    with pytest.raises(TypeError):
        Mat([[0.5]])


def test_kernel_and_image():
    assert kernel(Mat.identity(2)) == Subspace.zero(2)
    assert kernel(Mat([[1, 1]])) == Subspace.span(Mat([[1], [-1]]))
    assert image(Mat([[1], [1]])) == Subspace.span(Mat([[1], [1]]))


def test_complements():
    e1, e2 = Subspace.span(Mat([[1], [0]])), Subspace.span(Mat([[0], [1]]))
    assert is_complement(e1, e2)
    assert not is_complement(e1, e1)
    assert is_complement(Subspace.span(Mat([[1], [1]])), Subspace.span(Mat([[1], [-1]])))


def test_annihilators():
    assert annihilator(Subspace.zero(2)) == Subspace.full(2)
    assert annihilator(Subspace.full(2)) == Subspace.zero(2)
    assert annihilator(Subspace.span(Mat([[1], [1]]))) == Subspace.span(Mat([[1], [-1]]))


def test_solve_unique():
    b = Mat([[1, 2], [3, 4]])
    assert solve_unique(Mat.identity(2), b) == b
    assert solve_unique(Mat([[2]]), Mat([[6]])) == Mat([[3]])
    assert solve_unique(Mat([[1, 1], [0, 1]]), Mat([[1, 2], [0, 1]])) == Mat([[1, 1], [0, 1]])
    with pytest.raises(NoSolution):
        solve_unique(Mat([[1], [1]]), Mat([[1], [2]]))
    with pytest.raises(NonUniqueSolution):
        solve_unique(Mat([[1, 1]]), Mat([[1]]))


def test_rref_pivots():
    reduced, pivots = rref(Mat([[0, 2, 4], [0, 1, 3]]))
    assert pivots == (1, 2)
    assert reduced == Mat([[0, 1, 0], [0, 0, 1]])


@hypothesis.given(wide)
def test_rank_nullity(a):
    assert rank(a) + kernel(a).dim == a.cols


@hypothesis.given(wide)
def test_kernel_is_annihilated(a):
    assert (a @ kernel(a).basis).is_zero()


@hypothesis.given(square)
def test_inverse_roundtrip(a):
    hypothesis.assume(rank(a) == a.rows)
    assert a @ mat_inv(a) == Mat.identity(a.rows)
    assert mat_inv(mat_inv(a)) == a


@hypothesis.given(wide)
def test_double_annihilator(a):
    u = image(a)
    assert annihilator(annihilator(u)) == u


@hypothesis.given(wide, strat.data())
def test_solve_any_solves_consistent_systems(a, data):
    x = data.draw(matrices(a.cols, 2))
    b = a @ x
    assert a @ solve_any(a, b) == b


@hypothesis.given(wide)
def test_extend_to_basis(a):
    u = image(a)
    extra = extend_to_basis(u)
    assert extra.cols == u.ambient_dim - u.dim
    assert is_complement(u, Subspace.span(extra))


@hypothesis.given(wide, strat.data())
def test_linear_extension_hits_values(a, data):
    basis = image(a).basis
    values = data.draw(matrices(2, basis.cols))
    assert linear_extension(basis, values) @ basis == values


@hypothesis.given(wide)
def test_subspace_coordinates(a):
    u = image(a)
    assert u.contains(a)
    assert u.basis @ u.coordinates(a) == a
