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
This module is used to test commutation relations between an operation U and a W operator.

A xi_k outcome of scheme S2 leaves U W_k|chi> on Charlie's qutrit. If U W_k = +W_k U or
U W_k = -W_k U, Charlie can undo W_k without knowing U, so the outcome contributes to the success
probability. Signs are scale invariant: W is normalized to unit Frobenius norm before testing.

The commutant oracle computes the dimension of {M : M W - s W M = 0} from the null space of the
vectorized map vec(M) -> (W^T (x) I - s I (x) W) vec(M).
"""
import logging
from fractions import Fraction

import numpy as np
import scipy.linalg

from ..channels.bases import preset_basis
from ..data.operator import Operator
from ..data.parameters import QUTRIT_DIM, TOLERANCE
from .families import FamilyId, PARAM_COUNTS, sample_family

_logger = logging.getLogger(__name__)

# Fixed generic angles used to probe the sign a family guarantees.
FAMILY_PROBE_ANGLES = [
    [0.37, 1.21, 2.03, 0.83, 0.59],
    [2.71, 0.44, 5.12, 1.93, 1.07],
    [4.05, 3.33, 0.91, 2.62, 2.29],
]


class SignName(object):
    """ Commutation signs. """
    PLUS = "Plus"
    MINUS = "Minus"
    NONE = "None"
    names = [PLUS, MINUS, NONE]


class CommutationSign(object):
    """ This class stores the result of a commutation test.

        Attributes:
            residual (float): Smallest of ||UW - WU||_F and ||UW + WU||_F for the normalized W.
            sign (str): The sign, taken from SignName.
    """

    def __init__(self, sign, residual):
        self.sign = sign
        self.residual = residual

    @property
    def is_signed(self):
        return self.sign != SignName.NONE

    def __repr__(self):
        return "CommutationSign(%s, residual=%.3e)" % (self.sign, self.residual)


def _matrix(op):
    return op.matrix if isinstance(op, Operator) else np.asarray(op, dtype=complex)


def _normalized(w):
    w = _matrix(w)
    norm = np.linalg.norm(w, "fro")
    if norm <= TOLERANCE:
        return w
    return w / norm


def commutation_sign(u, w, tolerance=TOLERANCE):
    """ Return Plus if UW = WU, Minus if UW = -WU, otherwise None.

        Arguments:
            u (Operator): A 3x3 operator, normally a Unitary.
            w (Operator): A 3x3 operator; it need not be unitary.
    """
    u = _matrix(u)
    w = _normalized(w)
    minus_residual = float(np.linalg.norm(u @ w - w @ u, "fro"))
    plus_residual = float(np.linalg.norm(u @ w + w @ u, "fro"))
    if minus_residual < tolerance:
        return CommutationSign(SignName.PLUS, minus_residual)
    if plus_residual < tolerance:
        return CommutationSign(SignName.MINUS, plus_residual)
    return CommutationSign(SignName.NONE, min(minus_residual, plus_residual))


def _commutator_map(w, sign):
    if sign not in (SignName.PLUS, SignName.MINUS):
        raise ValueError("commutant sign must be Plus or Minus, got %r" % (sign,))
    s = 1.0 if sign == SignName.PLUS else -1.0
    w = _normalized(w)
    identity = np.eye(QUTRIT_DIM)
    # Column-major vec: vec(MW) = (W^T (x) I) vec(M), vec(WM) = (I (x) W) vec(M).
    return np.kron(w.T, identity) - s * np.kron(identity, w)


def commutant_basis(w, sign, tolerance=TOLERANCE):
    """ Return an orthonormal basis of {M : MW = +WM} (Plus) or {M : MW = -WM} (Minus).

        Returns a list of 3x3 matrices.
    """
    a = _commutator_map(w, sign)
    singular_values = scipy.linalg.svdvals(a)
    largest = float(np.max(singular_values))
    if largest <= tolerance:
        kernel = np.eye(QUTRIT_DIM ** 2, dtype=complex)
    else:
        kernel = scipy.linalg.null_space(a, rcond=tolerance / largest)
    return [kernel[:, k].reshape((QUTRIT_DIM, QUTRIT_DIM), order="F") for k in range(kernel.shape[1])]


def commutant_dimension(w, sign, tolerance=TOLERANCE):
    """ Return the complex dimension of the Plus or Minus commutant of w.

        Singular values of the vectorized map below the tolerance count as null.
    """
    singular_values = scipy.linalg.svdvals(_commutator_map(w, sign))
    return int(np.sum(singular_values <= tolerance))


def span_dimension(matrices, tolerance=TOLERANCE):
    """ Return the complex dimension of the linear span of a list of 3x3 matrices. """
    if not matrices:
        return 0
    stacked = np.array([_matrix(m).reshape(-1) for m in matrices])
    return int(np.linalg.matrix_rank(stacked, tol=tolerance))


def family_commutation_sign(family, w, tolerance=TOLERANCE):
    """ Return the sign every member of a family is guaranteed to have with w.

        Each base family behind the id is probed at fixed generic angles. A base family guarantees
        a sign when all probes agree on it; a union or difference guarantees a sign when every
        constituent does. When constituents guarantee different signs the result is reported as
        signed with the sign of the first one, since the correction does not depend on it.

        Returns a CommutationSign; its sign is None when no guarantee exists.
    """
    signs = []
    worst = 0.0
    for base in FamilyId.resolve(family):
        probes = [commutation_sign(sample_family(base, angles[:PARAM_COUNTS[base]]), w, tolerance)
                  for angles in FAMILY_PROBE_ANGLES]
        base_signs = set(p.sign for p in probes)
        worst = max([worst] + [p.residual for p in probes])
        if len(base_signs) != 1 or SignName.NONE in base_signs:
            return CommutationSign(SignName.NONE, worst)
        signs.append(base_signs.pop())
    return CommutationSign(signs[0], worst)


def guaranteed_outcomes(families, w_operators, tolerance=TOLERANCE):
    """ Return, per W operator, whether any of the families guarantees a commutation sign. """
    families = list(families or [])
    return [any(family_commutation_sign(family, w, tolerance).is_signed for family in families)
            for w in w_operators]


def predicted_probability(families, case_id):
    """ Return the success probability of scheme S2 for a preset basis as an exact fraction.

        The xi0 outcome always succeeds; each xi_k outcome adds 1/3 when one of the declared
        families guarantees a commutation sign with W_k.

        Arguments:
            families (Iterable[str]): Family ids known to contain U; empty for an arbitrary U.
            case_id (str): A preset basis, taken from BasisCase.
    """
    _, w_operators = preset_basis(case_id)
    guaranteed = guaranteed_outcomes(families, w_operators)
    probability = Fraction(1, 3) + Fraction(sum(guaranteed), 3)
    _logger.debug("predicted P for %s in %s: %s", sorted(families or []), case_id, probability)
    return probability
