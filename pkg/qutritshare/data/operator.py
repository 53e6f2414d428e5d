# Copyright 2026 The qutritshare Authors
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

"""
This module is used to store operators and measurement bases acting on qutrit registers.

Matrices are dense complex numpy arrays of dimension 3 (one qutrit) or 9 (two qutrits). Indices
follow the big-endian convention of StateVector: for a two-qutrit operator acting on the
labels (p, q), row/column index 3*i_p + i_q.

Stored arrays are made read-only, so an Operator or MeasurementBasis never changes after
construction.
"""
import numpy as np

from ..exceptions import BasisError, DimensionMismatchError, NonUnitaryError, NormalizationError
from .parameters import TOLERANCE

ALLOWED_DIMS = (3, 9)


def _frozen_matrix(matrix):
    m = np.array(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError("operator must be a square matrix, got shape %s" % (m.shape,))
    if m.shape[0] not in ALLOWED_DIMS:
        raise DimensionMismatchError("operator dimension must be 3 or 9, got %d" % m.shape[0])
    if not np.all(np.isfinite(m)):
        raise NormalizationError("operator has non-finite entries")
    m.setflags(write=False)
    return m


class Operator(object):
    """ This class stores a general linear operator on one or two qutrits.

        Attributes:
            dim (int): The matrix dimension, 3 or 9.
            matrix (NumPy dim x dim ndarray[complex]): The read-only matrix.
            name (str): A display name, e.g. "S" or "W1".

        No unitarity is required; the W operators of scheme S2 are in general not unitary.
    """

    def __init__(self, matrix, name=None):
        self._matrix = _frozen_matrix(matrix)
        self.name = name

    @property
    def dim(self):
        return self._matrix.shape[0]

    @property
    def matrix(self):
        return self._matrix

    def dagger(self):
        """ Return the Hermitian adjoint. """
        name = None if self.name is None else self.name + "^dagger"
        return Operator(self._matrix.conj().T, name)

    def __matmul__(self, other):
        return Operator(self._matrix @ other.matrix)

    def unitarity_residual(self):
        """ Largest entrywise deviation of M^dagger M from the identity. """
        product = self._matrix.conj().T @ self._matrix
        return float(np.max(np.abs(product - np.eye(self.dim))))

    def is_unitary(self, tolerance=TOLERANCE):
        return self.unitarity_residual() <= tolerance

    def is_diagonal(self, tolerance=TOLERANCE):
        off_diagonal = self._matrix - np.diag(np.diag(self._matrix))
        return bool(np.all(np.abs(off_diagonal) <= tolerance))

    def is_scaled_unitary(self, tolerance=TOLERANCE):
        """ True if the operator equals c*V for a unitary V and a nonzero complex scalar c. """
        product = self._matrix.conj().T @ self._matrix
        scale = np.trace(product).real / self.dim
        if scale <= tolerance:
            return False
        return bool(np.max(np.abs(product / scale - np.eye(self.dim))) <= tolerance)

    def phase_direction(self, tolerance=TOLERANCE):
        """ Return the unitary direction of a diagonal operator.

            Each nonzero diagonal entry is replaced by its phase, zero entries by 1. For an
            operator proportional to a diagonal unitary this is that unitary up to global phase.
        """
        if not self.is_diagonal(tolerance):
            raise DimensionMismatchError("phase direction is only defined for diagonal operators")
        diagonal = np.diag(self._matrix)
        moduli = np.abs(diagonal)
        phases = np.where(moduli > tolerance, diagonal / np.where(moduli > tolerance, moduli, 1.0), 1.0)
        name = None if self.name is None else "dir(%s)" % self.name
        return Unitary(np.diag(phases), name)

    def allclose(self, other, tolerance=TOLERANCE):
        other_matrix = other.matrix if isinstance(other, Operator) else np.asarray(other)
        if other_matrix.shape != self._matrix.shape:
            return False
        return bool(np.max(np.abs(self._matrix - other_matrix)) <= tolerance)

    def proportional_to(self, other, tolerance=TOLERANCE):
        """ True if self = c*other for some nonzero complex scalar c. """
        a = self._matrix.reshape(-1)
        b = (other.matrix if isinstance(other, Operator) else np.asarray(other)).reshape(-1)
        if a.shape != b.shape:
            return False
        norm_a = np.linalg.norm(a)
        norm_b = np.linalg.norm(b)
        if norm_a <= tolerance or norm_b <= tolerance:
            return False
        overlap = abs(np.vdot(a, b)) / (norm_a * norm_b)
        return bool(overlap >= 1.0 - tolerance)

    def __repr__(self):
        return "%s(name=%r, dim=%d)" % (self.__class__.__name__, self.name, self.dim)


class Unitary(Operator):
    """ This class stores a unitary operator on one or two qutrits.

        The constructor enforces U^dagger U = I within the tolerance and raises NonUnitaryError
        carrying the residual otherwise.
    """

    def __init__(self, matrix, name=None, tolerance=TOLERANCE):
        super(Unitary, self).__init__(matrix, name)
        residual = self.unitarity_residual()
        if residual > tolerance:
            raise NonUnitaryError("matrix %s is not unitary (residual %.3e)" % (name or "", residual),
                                  residual)

    @classmethod
    def identity(cls, dim=3):
        return cls(np.eye(dim), "I")

    def dagger(self):
        name = None if self.name is None else self.name + "^dagger"
        return Unitary(self._matrix.conj().T, name)

    def __matmul__(self, other):
        if isinstance(other, Unitary):
            return Unitary(self._matrix @ other.matrix)
        return Operator(self._matrix @ other.matrix)


class MeasurementBasis(object):
    """ This class stores an ordered orthonormal basis used for projective measurement.

        Attributes:
            dim (int): The space dimension, 3 or 9.
            name (str): A display name, e.g. "GBM" or "xi(C1)".
            outcome_labels (Tuple[str]): One label per basis vector, e.g. "(0,1)" or "xi1".
            vectors (NumPy dim x dim ndarray[complex]): The read-only basis vectors as rows.
    """

    def __init__(self, vectors, outcome_labels=None, name=None, tolerance=TOLERANCE):
        v = np.array(vectors, dtype=complex)
        if v.ndim != 2:
            raise BasisError("basis vectors must form a 2-d array")
        count, dim = v.shape
        if dim not in ALLOWED_DIMS:
            raise DimensionMismatchError("basis dimension must be 3 or 9, got %d" % dim)
        if count != dim:
            raise BasisError("a %d-dimensional basis needs %d vectors, got %d" % (dim, dim, count))
        if not np.all(np.isfinite(v)):
            raise BasisError("basis has non-finite entries")
        if outcome_labels is None:
            outcome_labels = [str(i) for i in range(dim)]
        outcome_labels = tuple(outcome_labels)
        if len(outcome_labels) != dim or len(set(outcome_labels)) != dim:
            raise BasisError("basis needs %d distinct outcome labels" % dim)
        v.setflags(write=False)
        self._vectors = v
        self.outcome_labels = outcome_labels
        self.name = name
        residual = self.orthonormality_residual()
        if residual > tolerance:
            raise BasisError("basis %s is not orthonormal (residual %.3e)" % (name or "", residual))

    @property
    def dim(self):
        return self._vectors.shape[1]

    @property
    def vectors(self):
        return self._vectors

    def __len__(self):
        return self._vectors.shape[0]

    def __getitem__(self, index):
        return self._vectors[index]

    def orthonormality_residual(self):
        """ Largest entrywise deviation of the Gram matrix <v_i|v_j> from the identity. """
        gram = self._vectors.conj() @ self._vectors.T
        return float(np.max(np.abs(gram - np.eye(self.dim))))

    def __repr__(self):
        return "MeasurementBasis(name=%r, dim=%d)" % (self.name, self.dim)
