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
This module is used to build the xi measurement bases of scheme S2 and their W operators.

Bob measures b' in {xi0, xi1, xi2}. xi0 = (1, 1, 1)/sqrt(3) is fixed; xi1 = e^(i tau1)(x1, y1, z1)
with z1 = -x1 - y1 and |x1|^2 + |y1|^2 + |x1 + y1|^2 = 1; xi2 = e^(i tau2)(x2, y2, z2) follows from
the completion formulas

    x2' = -1 + 2 x1 x1* + x1 y1*
    y2' = 2 y1 x1* + y1 y1*
    z2' = 1 - 2 x1 x1* - 2 y1 x1* - x1 y1* - y1 y1*
    (x2, y2, z2) = (x2', y2', z2') / N,   N = |(x2', y2', z2')|

The completion vanishes when y1 = 0 (then |x1|^2 = 1/2). In that case the third vector is taken
as the conjugated cross product of xi0 and xi1, the unique unit vector orthogonal to both up to
phase, unless strict mode asks for SingularBasisError.

Projecting the b' half of U(alpha|00> + beta|11> + gamma|22>) onto xi_k leaves U W_k|chi>/sqrt(3)
on Charlie's qutrit, with W_k = sqrt(3) diag(conj(xi_k)). W_k is proportional to a unitary only
when every component of xi_k has modulus 1/sqrt(3).
"""
import logging
import numpy as np

from ..data.common import BasisCase
from ..data.operator import MeasurementBasis, Operator
from ..data.parameters import QUTRIT_DIM, TOLERANCE
from ..exceptions import BasisParameterError, SingularBasisError
from ..utils.linalg import omega_power

XI_LABELS = ["xi0", "xi1", "xi2"]

XI0 = np.ones(QUTRIT_DIM, dtype=complex) / np.sqrt(3.0)

_logger = logging.getLogger(__name__)


class BasisParams(object):
    """ This class stores the free parameters of a xi basis and the quantities derived from them.

        Attributes:
            N (float): Norm of the unnormalized completion vector (x2', y2', z2').
            tau1, tau2 (float): Phases of xi1 and xi2 in radians.
            x1, y1, z1 (complex): Components of xi1 before its phase.
            x2, y2, z2 (complex): Components of xi2 before its phase; None when N vanishes.
    """

    def __init__(self, x1, y1, tau1=0.0, tau2=0.0, tolerance=TOLERANCE):
        self.x1 = complex(x1)
        self.y1 = complex(y1)
        self.tau1 = float(tau1)
        self.tau2 = float(tau2)
        constraint = abs(self.x1) ** 2 + abs(self.y1) ** 2 + abs(self.x1 + self.y1) ** 2
        if abs(constraint - 1.0) > tolerance:
            raise BasisParameterError("|x1|^2 + |y1|^2 + |x1 + y1|^2 = %.12f, expected 1" % constraint)
        self.z1 = -self.x1 - self.y1
        x1, y1 = self.x1, self.y1
        x1c, y1c = x1.conjugate(), y1.conjugate()
        completion = np.array([
            -1.0 + 2.0 * x1 * x1c + x1 * y1c,
            2.0 * y1 * x1c + y1 * y1c,
            1.0 - 2.0 * x1 * x1c - 2.0 * y1 * x1c - x1 * y1c - y1 * y1c,
        ], dtype=complex)
        self.N = float(np.linalg.norm(completion))
        if self.N > tolerance:
            self.x2, self.y2, self.z2 = (complex(c) for c in completion / self.N)
        else:
            self.x2 = self.y2 = self.z2 = None

    @property
    def is_degenerate(self):
        return self.x2 is None

    def __repr__(self):
        return "BasisParams(x1=%s, y1=%s, tau1=%g, tau2=%g)" % (self.x1, self.y1, self.tau1, self.tau2)


def random_basis_params(rng):
    """ Sample (x1, y1, tau1, tau2) satisfying the xi constraint.

        The constraint is homogeneous of degree two in (x1, y1), so a random complex pair is
        rescaled onto it.
    """
    x, y = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    scale = np.sqrt(abs(x) ** 2 + abs(y) ** 2 + abs(x + y) ** 2)
    tau1, tau2 = rng.uniform(0.0, 2.0 * np.pi, 2)
    return BasisParams(x / scale, y / scale, tau1, tau2)


def xi_vectors(p, strict=False):
    """ Return the three xi vectors as rows of a 3x3 array. """
    xi1 = np.exp(1j * p.tau1) * np.array([p.x1, p.y1, p.z1], dtype=complex)
    if p.is_degenerate:
        if strict:
            raise SingularBasisError("completion of %r vanishes (N = %.3e)" % (p, p.N))
        _logger.debug("completion of %r vanishes, using the cross product", p)
        xi2 = np.conj(np.cross(XI0, xi1))
        xi2 = xi2 / np.linalg.norm(xi2)
    else:
        xi2 = np.array([p.x2, p.y2, p.z2], dtype=complex)
    xi2 = np.exp(1j * p.tau2) * xi2
    return np.array([XI0, xi1, xi2])


def xi_basis(p, strict=False, name="xi"):
    """ Return the orthonormal basis {xi0, xi1, xi2} for the given parameters.

        When the completion vector of p vanishes (p.is_degenerate, N = 0, e.g. y1 = 0 as in the
        C2 preset) xi2 is taken as the normalized conjugated cross product of xi0 and xi1.
        SingularBasisError is raised only for such a degenerate p with strict=True; a
        non-degenerate p never raises.

        Arguments:
            p (BasisParams): The basis parameters.
            strict (bool): Raise SingularBasisError instead of completing a degenerate basis.
            name (str): Display name of the basis.
    """
    return MeasurementBasis(xi_vectors(p, strict), XI_LABELS, name=name)


def w_operator(xi):
    """ W = sqrt(3) diag(conj(xi)), the operator with <xi|_b' J = U W |chi> / sqrt(3). """
    return np.sqrt(3.0) * np.diag(np.conj(np.asarray(xi, dtype=complex)))


def w_operators(p, strict=False):
    """ Return the pair (W1, W2) belonging to xi1 and xi2 as general Operators. """
    vectors = xi_vectors(p, strict)
    return Operator(w_operator(vectors[1]), "W1"), Operator(w_operator(vectors[2]), "W2")


def preset_params(case_id):
    """ Return the BasisParams of a preset case; all phases tau and phi are 0. """
    if case_id == BasisCase.C1:
        return BasisParams(0.0, -1.0 / np.sqrt(2.0))
    elif case_id == BasisCase.C2:
        return BasisParams(-1.0 / np.sqrt(2.0), 0.0)
    elif case_id == BasisCase.C3:
        return BasisParams(1.0 / np.sqrt(2.0), -1.0 / np.sqrt(2.0))
    elif case_id == BasisCase.C4A:
        return BasisParams(1.0 / np.sqrt(3.0), omega_power(1) / np.sqrt(3.0))
    elif case_id == BasisCase.C4B:
        return BasisParams(0.5j, 0.5)
    raise BasisParameterError("unknown basis case '%s'" % (case_id,))


def preset_basis(case_id):
    """ Return (MeasurementBasis, (W1, W2)) for a preset case C1, C2, C3, C4a or C4b. """
    p = preset_params(case_id)
    basis = xi_basis(p, name="xi(%s)" % case_id)
    w1, w2 = w_operators(p)
    w1.name = "W1(%s)" % case_id
    w2.name = "W2(%s)" % case_id
    return basis, (w1, w2)
