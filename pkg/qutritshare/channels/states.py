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
This module is used to build the named states and fixed measurement bases of the schemes.

    generalized Bell states   |Psi_nm> = sum_j omega^(n j) |j>|j+m mod 3> / sqrt(3)
    GHZ state                 (|000> + |111> + |222>) / sqrt(3)
    computational basis       {|0>, |1>, |2>}
    Fourier basis             {sum_j omega^(k j) |j> / sqrt(3)}

Classical messages follow the prior agreement that |i> corresponds to the trit i and
|Psi_nm> to the trit pair (n, m).
"""
from itertools import product

import numpy as np

from ..data.operator import MeasurementBasis
from ..data.parameters import QUTRIT_DIM
from ..data.state import StateVector
from ..exceptions import DimensionMismatchError
from ..utils.linalg import omega_power


class BellIndex(object):
    """ This class stores the index (n, m) of a generalized Bell state.

        Attributes:
            m (int): The shift, 0..2.
            n (int): The phase, 0..2.
    """

    def __init__(self, n, m):
        if n not in (0, 1, 2) or m not in (0, 1, 2):
            raise DimensionMismatchError("Bell index (%r, %r) out of range" % (n, m))
        self.n = n
        self.m = m

    @property
    def trits(self):
        return [self.n, self.m]

    @property
    def label(self):
        return "(%d,%d)" % (self.n, self.m)

    @classmethod
    def all(cls):
        """ All nine indices in (n, m) lexicographic order. """
        return [cls(n, m) for n, m in product(range(3), range(3))]

    def __eq__(self, other):
        return isinstance(other, BellIndex) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return "BellIndex%s" % self.label


def bell_amplitudes(idx):
    amps = np.zeros(QUTRIT_DIM ** 2, dtype=complex)
    for j in range(QUTRIT_DIM):
        amps[QUTRIT_DIM * j + (j + idx.m) % QUTRIT_DIM] = omega_power(idx.n * j) / np.sqrt(3.0)
    return amps


def generalized_bell(idx, labels=("p", "q")):
    """ Return the generalized Bell state |Psi_nm> on two qutrits; (0, 0) is the shared channel B00. """
    return StateVector(bell_amplitudes(idx), labels)


def gbm_basis():
    """ Return the generalized Bell measurement basis, outcomes labelled "(n,m)" in lexicographic order. """
    indices = BellIndex.all()
    return MeasurementBasis([bell_amplitudes(idx) for idx in indices],
                            [idx.label for idx in indices], name="GBM")


def ghz3(labels=("a", "b", "c")):
    """ Return the three-qutrit GHZ state. """
    amps = np.zeros(QUTRIT_DIM ** 3, dtype=complex)
    for j in range(QUTRIT_DIM):
        amps[13 * j] = 1.0 / np.sqrt(3.0)
    return StateVector(amps, labels)


def computational_basis():
    return MeasurementBasis(np.eye(QUTRIT_DIM), ["0", "1", "2"], name="Z")


def fourier_basis():
    """ Return the single-qutrit Fourier basis {sum_j omega^(k j)|j>/sqrt(3)}, outcome k labelled "k". """
    vectors = [[omega_power(k * j) / np.sqrt(3.0) for j in range(QUTRIT_DIM)] for k in range(QUTRIT_DIM)]
    return MeasurementBasis(vectors, ["0", "1", "2"], name="F")


def chi_state(coefficients, label="b''"):
    """ Return the single-qutrit state alpha|0> + beta|1> + gamma|2> to be operated on.

        Arguments:
            coefficients (Sequence[complex]): (alpha, beta, gamma), normalized within the tolerance.
            label (str): The qutrit label, Bob's b'' by default.
    """
    return StateVector(np.asarray(coefficients, dtype=complex), [label])
