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
"""Errors."""


class GrpdError(ValueError):
    """Base error of grpd."""


class DimensionMismatch(GrpdError):
    """Matrix shapes do not fit together."""


class SingularMatrix(GrpdError):
    """A matrix which must be invertible is rank deficient."""


class NoSolution(GrpdError):
    """A linear system is inconsistent."""


class NonUniqueSolution(GrpdError):
    """A linear system has more than one solution."""


class AmbientMismatch(GrpdError):
    """Two subspaces live in different ambient spaces."""


class NotComposable(GrpdError):
    """The source of the first argument is not the target of the second."""


class NonFunctorialRep(GrpdError):
    """A representation does not respect units or composition."""


class NonUnitBase(GrpdError):
    """A unit groupoid was required."""


class MomentMismatch(GrpdError):
    """The moment value of a frame does not match the acting element."""


class SameArrowRequired(GrpdError):
    """Two frames must sit over the same arrow."""


class SameObjectRequired(GrpdError):
    """Two base pairs must sit over the same object."""


class BlockStructureViolation(GrpdError):
    """A change of coordinates is not block upper triangular."""


class FatMembershipFailure(GrpdError):
    """A subspace is not an element of the fat groupoid."""


class WellDefinednessFailure(GrpdError):
    """An evaluation map depends on the chosen representative."""


class NotASection(GrpdError):
    """A section does not take values over the requested moment value."""


class SamplingError(GrpdError):
    """Rejection sampling exhausted its attempt budget."""


class ParseError(GrpdError):
    """A spec file cannot be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ValidationError(GrpdError):
    """A spec file parses but does not describe a VB-groupoid."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
