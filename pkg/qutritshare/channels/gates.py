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
This module is used to build the gates and correction operators of the schemes.

It also provides the projection oracle: the linear map that a sequence of projective outcomes
induces on the one qutrit that survives them. The oracle derives the corrections of the
teleportation and state-splitting stages of scheme S1 and validates the sigma convention.
"""
import numpy as np

from ..data.operator import Unitary
from ..data.parameters import NULL_PROBABILITY, QUTRIT_DIM, TOLERANCE
from ..data.state import StateVector, project_amplitudes, trits_to_index
from ..exceptions import DimensionMismatchError, ProtocolError
from ..utils.linalg import omega_power

# Terms |out><in| of the two-qutrit gate V acting on (b', b'').
V_GATE_TERMS = [
    ("00", "00"), ("01", "01"), ("02", "02"),
    ("10", "11"), ("11", "12"), ("12", "10"),
    ("20", "22"), ("21", "20"), ("22", "21"),
]


def _ket_bra(ket, bra):
    m = np.zeros((QUTRIT_DIM, QUTRIT_DIM), dtype=complex)
    m[ket, bra] = 1.0
    return m


def shift_s():
    """ S = |0><2| + |2><1| + |1><0|, i.e. S|j> = |j+1 mod 3>. """
    return Unitary(_ket_bra(0, 2) + _ket_bra(2, 1) + _ket_bra(1, 0), "S")


def shift_t():
    """ T = |0><1| + |2><0| + |1><2|, i.e. T|j> = |j-1 mod 3>; the inverse of S. """
    return Unitary(_ket_bra(0, 1) + _ket_bra(2, 0) + _ket_bra(1, 2), "T")


def shift_correction(outcome):
    """ Return Bob's step-II correction for his b'' outcome: I, S or T for 0, 1, 2. """
    if outcome == 0:
        return Unitary.identity()
    elif outcome == 1:
        return shift_s()
    elif outcome == 2:
        return shift_t()
    raise DimensionMismatchError("single-qutrit outcome out of range: %r" % (outcome,))


def v_gate():
    """ Return the 9x9 permutation V on (b', b''); V|x, y> = |x, y - x mod 3>. """
    m = np.zeros((QUTRIT_DIM ** 2, QUTRIT_DIM ** 2), dtype=complex)
    for ket, bra in V_GATE_TERMS:
        m[trits_to_index([int(t) for t in ket]), trits_to_index([int(t) for t in bra])] = 1.0
    return Unitary(m, "V")


def sigma(idx):
    """ Return sigma^(n,m) = |m><0| + e^(4n pi i/3)|m+1><1| + e^(2n pi i/3)|m+2><2|.

        This is the operator left on Charlie's qutrit when Alice's Bell measurement yields (n, m),
        i.e. sigma|j> = omega^(-n j)|j+m>.
    """
    phases = [1.0, omega_power(2 * idx.n), omega_power(idx.n)]
    m = np.zeros((QUTRIT_DIM, QUTRIT_DIM), dtype=complex)
    for j in range(QUTRIT_DIM):
        m[(idx.m + j) % QUTRIT_DIM, j] = phases[j]
    return Unitary(m, "sigma%s" % idx.label)


def collapse_operator(prepare, projections):
    """ Derive the linear map induced by a sequence of projections.

        Arguments:
            prepare (Callable): Maps a single-qutrit amplitude vector to the StateVector just before
                the first projection. It must be linear in its argument.
            projections (List[Tuple[List[str], ndarray]]): (target labels, basis vector) pairs, applied
                in order.

        Returns a pair (K, label): the 3x3 matrix with K[:, j] the unnormalized amplitudes of the
        surviving qutrit when the input is |j>, and the label of that qutrit.
    """
    columns = []
    label = None
    for j in range(QUTRIT_DIM):
        state = prepare(np.eye(QUTRIT_DIM, dtype=complex)[j])
        remaining = state.labels
        weight = 1.0
        column = None
        for targets, vector in projections:
            amps, remaining = project_amplitudes(state, targets, vector)
            norm = np.linalg.norm(amps)
            if norm <= NULL_PROBABILITY:
                column = np.zeros(amps.size, dtype=complex)
                break
            weight *= norm
            state = StateVector(amps / norm, remaining)
        if len(remaining) != 1:
            raise DimensionMismatchError("projections must leave exactly one qutrit, left %s" % (remaining,))
        if column is None:
            column = weight * state.amps
        label = remaining[0]
        columns.append(column)
    return np.column_stack(columns), label


def correction_from_collapse(collapse, name=None, tolerance=TOLERANCE):
    """ Return the unitary undoing a collapse map that is proportional to a unitary.

        Raises ProtocolError if the collapse is not proportional to a unitary, i.e. no
        deterministic correction exists.
    """
    collapse = np.asarray(collapse, dtype=complex)
    scale = np.sqrt(np.trace(collapse.conj().T @ collapse).real / QUTRIT_DIM)
    if scale <= tolerance:
        raise ProtocolError("collapse map vanishes")
    direction = collapse / scale
    residual = float(np.max(np.abs(direction.conj().T @ direction - np.eye(QUTRIT_DIM))))
    if residual > tolerance:
        raise ProtocolError("collapse map is not proportional to a unitary (residual %.3e)" % residual)
    return Unitary(direction.conj().T, name)
