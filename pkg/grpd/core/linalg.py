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
"""Exact rational linear algebra."""

from fractions import Fraction
import numbers

import numpy as np

from grpd.core.errors import (
    AmbientMismatch,
    DimensionMismatch,
    NoSolution,
    NonUniqueSolution,
    SingularMatrix,
)

__all__ = [
    "Mat",
    "Subspace",
    "to_fraction",
    "format_fraction",
    "mat_mul",
    "mat_inv",
    "rref",
    "rank",
    "kernel",
    "image",
    "is_complement",
    "annihilator",
    "solve_unique",
    "solve_any",
    "extend_to_basis",
    "linear_extension",
]


def to_fraction(value) -> Fraction:
    """Convert an exact scalar (int, Fraction or "p/q" string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not matrix entries.")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact entry: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Format as "p/q", or "p" when q = 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _normalize(data, shape=None):
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.ndim != 2:
        raise DimensionMismatch(f"A matrix needs 2 dimensions, got shape {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for index, value in np.ndenumerate(arr):
        out[index] = to_fraction(value)
    out.setflags(write=False)
    return out


class Mat(object):
    """Immutable exact rational matrix.

    Entries are `fractions.Fraction` kept in a numpy object array, so numpy does the
    bookkeeping (slicing, stacking, dot products) while the arithmetic stays exact.
    """

    __slots__ = ("_data",)

    def __init__(self, data, shape=None):
        if isinstance(data, Mat):
            self._data = data._data
        else:
            self._data = _normalize(data, shape)

    @classmethod
    def _wrap(cls, arr):
        """Adopt a 2-d object array whose entries are already Fractions."""
        mat = cls.__new__(cls)
        arr.setflags(write=False)
        mat._data = arr
        return mat

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=int).astype(object))

    @classmethod
    def reversal(cls, n):
        """The anti-identity, reversing the order of coordinates."""
        return cls(np.fliplr(np.eye(n, dtype=int)).astype(object))

    @classmethod
    def column(cls, values):
        values = list(values)
        return cls(values, shape=(len(values), 1))

    @classmethod
    def from_grid(cls, grid, rows=None, cols=None):
        """Build from a list of rows of exact scalars; shapes are needed for empty grids."""
        grid = list(grid)
        if rows is None:
            rows = len(grid)
        if cols is None:
            if len(grid) == 0:
                raise DimensionMismatch("Cannot infer the column count of an empty grid.")
            cols = len(grid[0])
        if len(grid) != rows or any(len(row) != cols for row in grid):
            raise DimensionMismatch(f"Expected a {rows}x{cols} grid.")
        return cls([list(row) for row in grid], shape=(rows, cols))

    @classmethod
    def hstack(cls, *mats):
        mats = [Mat(m) for m in mats]
        rows = {m.rows for m in mats}
        if len(rows) > 1:
            raise DimensionMismatch(f"hstack of row counts {sorted(rows)}")
        return cls._wrap(np.hstack([m._data for m in mats]).reshape(mats[0].rows, sum(m.cols for m in mats)))

    @classmethod
    def vstack(cls, *mats):
        mats = [Mat(m) for m in mats]
        cols = {m.cols for m in mats}
        if len(cols) > 1:
            raise DimensionMismatch(f"vstack of column counts {sorted(cols)}")
        return cls._wrap(np.vstack([m._data for m in mats]).reshape(sum(m.rows for m in mats), mats[0].cols))

    @classmethod
    def block(cls, rows):
        """Assemble a block matrix from a list of block rows."""
        return cls.vstack(*[cls.hstack(*row) for row in rows])

    @property
    def shape(self):
        return self._data.shape

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def entries(self):
        return tuple(self._data.flat)

    @property
    def T(self):
        return Mat._wrap(self._data.T)

    def array(self):
        """A writable copy of the underlying object array."""
        return self._data.copy()

    def entry(self, i, j) -> Fraction:
        return self._data[i, j]

    def sub(self, r0, r1, c0, c1):
        """The block of rows r0:r1 and columns c0:c1."""
        return Mat._wrap(self._data[r0:r1, c0:c1])

    def cols_range(self, c0, c1):
        return self.sub(0, self.rows, c0, c1)

    def rows_range(self, r0, r1):
        return self.sub(r0, r1, 0, self.cols)

    def col(self, j):
        return self.cols_range(j, j + 1)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(x == 0 for x in self._data.flat)

    def to_grid(self):
        """Rows of "p/q" strings."""
        return [[format_fraction(x) for x in row] for row in self._data.tolist()]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        other = Mat(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"Cannot add {self.shape} and {other.shape}")
        return Mat._wrap(self._data + other._data)

    def __sub__(self, other):
        other = Mat(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"Cannot subtract {other.shape} from {self.shape}")
        return Mat._wrap(self._data - other._data)

    def __neg__(self):
        return Mat._wrap(-self._data)

    def __mul__(self, scalar):
        return Mat._wrap(self._data * to_fraction(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self._data.flat, other._data.flat))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"Mat({self.to_grid()}, shape={self.shape})"

    def __str__(self):
        rows = [" ".join(row) for row in self.to_grid()]
        return "[" + "; ".join(rows) + "]"


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Exact product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"Cannot multiply {a.shape} by {b.shape}")
    if a.cols == 0:
        return Mat.zeros(a.rows, b.cols)
    return Mat._wrap(np.dot(a._data, b._data).reshape(a.rows, b.cols))


def rref(a: Mat):
    """Reduced row echelon form of `a` and its pivot columns."""
    m = a.array()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r, :] = m[r, :] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i, :] = m[i, :] - m[i, c] * m[r, :]
        pivots.append(c)
        r += 1
    return Mat._wrap(m), tuple(pivots)


def rank(a: Mat) -> int:
    return len(rref(a)[1])


class Subspace(object):
    """A subspace of Q^n held by its reduced column-echelon basis.

    The canonical basis is unique, so equality of values is equality of subspaces.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis: Mat):
        if basis.rows != ambient_dim:
            raise DimensionMismatch(f"Basis has {basis.rows} rows, ambient dimension is {ambient_dim}")
        reduced, pivots = rref(basis.T)
        self.ambient_dim = ambient_dim
        self.basis = reduced.rows_range(0, len(pivots)).T

    @classmethod
    def span(cls, columns: Mat):
        return cls(columns.rows, columns)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, Mat.zeros(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, Mat.identity(ambient_dim))

    @property
    def dim(self):
        return self.basis.cols

    def contains(self, vectors: Mat) -> bool:
        if vectors.rows != self.ambient_dim:
            raise AmbientMismatch(f"Vectors of length {vectors.rows} in ambient {self.ambient_dim}")
        return rank(Mat.hstack(self.basis, vectors)) == self.dim

    def coordinates(self, vectors: Mat) -> Mat:
        """Coordinates of vectors of the subspace in the canonical basis."""
        return solve_unique(self.basis, vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, basis={self.basis})"


def kernel(a: Mat) -> Subspace:
    """Null space of `a`."""
    reduced, pivots = rref(a)
    free = [c for c in range(a.cols) if c not in pivots]
    vectors = np.zeros((a.cols, len(free)), dtype=object)
    for j, f in enumerate(free):
        vectors[f, j] = 1
        for row, p in enumerate(pivots):
            vectors[p, j] = -reduced.entry(row, f)
    return Subspace(a.cols, Mat(vectors, shape=(a.cols, len(free))))


def image(a: Mat) -> Subspace:
    """Column space of `a`."""
    return Subspace.span(a)


def is_complement(u: Subspace, v: Subspace) -> bool:
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch(f"Ambient dimensions {u.ambient_dim} and {v.ambient_dim} differ")
    if u.dim + v.dim != u.ambient_dim:
        return False
    return rank(Mat.hstack(u.basis, v.basis)) == u.ambient_dim


def annihilator(u: Subspace) -> Subspace:
    """The functionals vanishing on `u`, in dual coordinates."""
    return kernel(u.basis.T)


def solve_unique(a: Mat, b: Mat) -> Mat:
    """The unique X with a @ X = b."""
    if a.rows != b.rows:
        raise DimensionMismatch(f"Cannot solve a {a.shape} system against {b.shape}")
    n = a.cols
    reduced, pivots = rref(Mat.hstack(a, b))
    if any(p >= n for p in pivots):
        raise NoSolution("The linear system is inconsistent.")
    if len(pivots) < n:
        raise NonUniqueSolution(f"The linear system has {n - len(pivots)} free variables.")
    return reduced.sub(0, n, n, n + b.cols)


def solve_any(a: Mat, b: Mat) -> Mat:
    """A particular solution of a @ X = b, with free variables set to zero."""
    if a.rows != b.rows:
        raise DimensionMismatch(f"Cannot solve a {a.shape} system against {b.shape}")
    n = a.cols
    reduced, pivots = rref(Mat.hstack(a, b))
    if any(p >= n for p in pivots):
        raise NoSolution("The linear system is inconsistent.")
    x = np.zeros((n, b.cols), dtype=object)
    for row, p in enumerate(pivots):
        for j in range(b.cols):
            x[p, j] = reduced.entry(row, n + j)
    return Mat(x, shape=(n, b.cols))


def mat_inv(a: Mat) -> Mat:
    """Exact inverse."""
    if not a.is_square():
        raise DimensionMismatch(f"Cannot invert a non-square {a.shape} matrix")
    try:
        return solve_unique(a, Mat.identity(a.rows))
    except (NoSolution, NonUniqueSolution):
        raise SingularMatrix(f"Matrix of shape {a.shape} is not invertible")


def extend_to_basis(u: Subspace) -> Mat:
    """Standard basis vectors completing the basis of `u` to a basis of the ambient space."""
    chosen = u.basis
    extra = []
    identity = Mat.identity(u.ambient_dim)
    for i in range(u.ambient_dim):
        candidate = Mat.hstack(chosen, identity.col(i))
        if rank(candidate) > chosen.cols:
            chosen = candidate
            extra.append(i)
    return Mat.hstack(Mat.zeros(u.ambient_dim, 0), *[identity.col(i) for i in extra])


def linear_extension(domain_basis: Mat, values: Mat) -> Mat:
    """The matrix sending the columns of `domain_basis` to `values`.

    The standard vectors chosen by `extend_to_basis` are sent to zero.
    """
    if domain_basis.cols != values.cols:
        raise DimensionMismatch(f"{domain_basis.cols} basis vectors but {values.cols} values")
    complement = extend_to_basis(Subspace.span(domain_basis))
    full = Mat.hstack(domain_basis, complement)
    images = Mat.hstack(values, Mat.zeros(values.rows, complement.cols))
    return images @ mat_inv(full)
