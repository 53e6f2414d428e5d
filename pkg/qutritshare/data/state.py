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
This module is used to store and transform pure states of labelled qutrit registers.

A register of n qutrits is a complex amplitude vector of length 3^n together with one unique
label per qutrit (e.g. "a'", "b''", "c"). The first label is the most significant trit of the
amplitude index (big-endian): for labels (p, q, r) the amplitude of |i j k> sits at 9i + 3j + k.

Operations never modify a state in place. Unitaries act on the listed target labels in the
listed order, and measurement enumerates every outcome deterministically, removing the measured
qutrits from the post-measurement register.
"""
import logging
import numpy as np

from ..exceptions import DimensionMismatchError, LabelCollisionError, NonUnitaryError, NormalizationError
from .parameters import NULL_PROBABILITY, QUTRIT_DIM, TOLERANCE

MAX_QUTRITS = 5

_logger = logging.getLogger(__name__)


class StateVector(object):
    """ This class stores a normalized pure state of a labelled qutrit register.

        Attributes:
            amps (NumPy 3^n ndarray[complex]): The read-only amplitude vector.
            labels (Tuple[str]): The qutrit labels, most significant first.
            num_qutrits (int): The number of qutrits n.

        A register with no qutrits is a single unit-modulus amplitude; it is what remains after
        every qutrit of a register has been measured.
    """

    def __init__(self, amps, labels, tolerance=TOLERANCE):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise LabelCollisionError("duplicate qutrit labels %s" % (labels,))
        if len(labels) > MAX_QUTRITS:
            raise DimensionMismatchError("registers are limited to %d qutrits" % MAX_QUTRITS)
        amps = np.array(amps, dtype=complex).reshape(-1)
        if amps.size != QUTRIT_DIM ** len(labels):
            raise DimensionMismatchError("%d labels need %d amplitudes, got %d" %
                                         (len(labels), QUTRIT_DIM ** len(labels), amps.size))
        if not np.all(np.isfinite(amps)):
            raise NormalizationError("state has non-finite amplitudes")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > tolerance:
            raise NormalizationError("state norm is %.12f, expected 1" % norm)
        amps.setflags(write=False)
        self._amps = amps
        self.labels = labels

    @classmethod
    def from_unnormalized(cls, amps, labels):
        """ Create a state by normalizing the given amplitudes. """
        amps = np.array(amps, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm <= NULL_PROBABILITY:
            raise NormalizationError("cannot normalize a zero vector")
        return cls(amps / norm, labels)

    @classmethod
    def basis_state(cls, trits, labels):
        """ Create the computational basis state |trits> on the given labels. """
        trits = list(trits)
        if len(trits) != len(tuple(labels)):
            raise DimensionMismatchError("need one trit per label")
        amps = np.zeros(QUTRIT_DIM ** len(trits), dtype=complex)
        amps[trits_to_index(trits)] = 1.0
        return cls(amps, labels)

    @property
    def amps(self):
        return self._amps

    @property
    def num_qutrits(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise DimensionMismatchError("qutrit '%s' is not in register %s" % (label, self.labels))

    def amplitude(self, trits):
        """ Amplitude of the computational basis state given as a trit list, e.g. [0, 1, 2]. """
        return complex(self._amps[trits_to_index(trits)])

    def as_tensor(self):
        """ The amplitudes reshaped to one axis per qutrit. """
        return self._amps.reshape((QUTRIT_DIM,) * self.num_qutrits)

    def permute(self, labels):
        """ Return the same state with its qutrits reordered to the given label order. """
        labels = tuple(labels)
        if sorted(labels) != sorted(self.labels):
            raise DimensionMismatchError("cannot reorder %s into %s" % (self.labels, labels))
        if labels == self.labels:
            return self
        axes = [self.index(label) for label in labels]
        return StateVector(np.transpose(self.as_tensor(), axes).reshape(-1), labels)

    def allclose(self, other, tolerance=TOLERANCE):
        """ Entrywise comparison after aligning the label order of other to this state. """
        other = other.permute(self.labels)
        return bool(np.max(np.abs(self._amps - other.amps)) <= tolerance)

    def __repr__(self):
        return "StateVector(labels=%s)" % (self.labels,)


class MeasurementRecord(object):
    """ This class stores one outcome of a projective measurement.

        Attributes:
            is_null (bool): True if the probability fell below the null threshold; post_state is then None.
            measured_labels (Tuple[str]): The measured qutrits, in measurement order.
            outcome_index (int): Index of the basis vector.
            outcome_label (str): Outcome label of the basis vector.
            post_state (StateVector): The renormalized state of the remaining qutrits.
            probability (float): The Born probability of the outcome.
    """

    def __init__(self, measured_labels, outcome_index, outcome_label, probability, post_state, is_null=False):
        self.measured_labels = tuple(measured_labels)
        self.outcome_index = outcome_index
        self.outcome_label = outcome_label
        self.probability = probability
        self.post_state = post_state
        self.is_null = is_null

    def __repr__(self):
        return "MeasurementRecord(%s=%s, p=%.6f)" % (self.measured_labels, self.outcome_label, self.probability)


def trits_to_index(trits):
    index = 0
    for trit in trits:
        if trit not in (0, 1, 2):
            raise DimensionMismatchError("trit out of range: %r" % (trit,))
        index = QUTRIT_DIM * index + trit
    return index


def index_to_trits(index, num_qutrits):
    trits = []
    for _ in range(num_qutrits):
        index, trit = divmod(index, QUTRIT_DIM)
        trits.append(trit)
    return trits[::-1]


def tensor(a, b):
    """Return the Kronecker product a (x) b with the labels of a followed by those of b.

    Raises LabelCollisionError if the registers share a label.
    """
    shared = set(a.labels) & set(b.labels)
    if shared:
        raise LabelCollisionError("registers share qutrit labels %s" % sorted(shared))
    return StateVector(np.kron(a.amps, b.amps), a.labels + b.labels)


def _target_axes(s, targets):
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise LabelCollisionError("target labels repeat: %s" % targets)
    return [s.index(label) for label in targets]


def apply_unitary(s, u, targets):
    """ Apply a one- or two-qutrit unitary to the target qutrits of a state.

        Arguments:
            s (StateVector): The state to transform.
            u (Operator): A unitary with u.dim = 3^len(targets).
            targets (List[str]): One or two qutrit labels; the first is the most significant
                index of u.

        Returns the transformed StateVector with unchanged labels.
    """
    axes = _target_axes(s, targets)
    k = len(axes)
    if k not in (1, 2):
        raise DimensionMismatchError("unitaries act on one or two qutrits, got %d targets" % k)
    if u.dim != QUTRIT_DIM ** k:
        raise DimensionMismatchError("a %dx%d operator cannot act on %d qutrits" % (u.dim, u.dim, k))
    if not u.is_unitary():
        raise NonUnitaryError("operator %s is not unitary" % (u.name or ""), u.unitarity_residual())
    psi = np.moveaxis(s.as_tensor(), axes, list(range(k)))
    rest_shape = psi.shape[k:]
    psi = (u.matrix @ psi.reshape(u.dim, -1)).reshape((QUTRIT_DIM,) * k + rest_shape)
    psi = np.moveaxis(psi, list(range(k)), axes)
    return StateVector(psi.reshape(-1), s.labels)


def project_amplitudes(s, targets, vector):
    """ Project the target qutrits onto a vector without renormalizing.

        Arguments:
            s (StateVector): The state to project.
            targets (List[str]): The measured qutrits, most significant first.
            vector (NumPy ndarray[complex]): A vector of length 3^len(targets).

        Returns a pair (amplitudes, labels): the raw amplitudes <vector|s> of the remaining qutrits
        and their labels in register order. The squared norm of the amplitudes is the Born
        probability of the outcome.
    """
    axes = _target_axes(s, targets)
    k = len(axes)
    vector = np.asarray(vector, dtype=complex).reshape(-1)
    if vector.size != QUTRIT_DIM ** k:
        raise DimensionMismatchError("a vector of length %d cannot project %d qutrits" % (vector.size, k))
    psi = np.moveaxis(s.as_tensor(), axes, list(range(k))).reshape(vector.size, -1)
    remaining = tuple(label for label in s.labels if label not in targets)
    return vector.conj() @ psi, remaining


def measure(s, targets, basis, tolerance=TOLERANCE, null_probability=NULL_PROBABILITY):
    """ Enumerate every outcome of measuring the target qutrits in a basis.

        Arguments:
            s (StateVector): The state to measure.
            targets (List[str]): The measured qutrits, most significant first.
            basis (MeasurementBasis): A basis with basis.dim = 3^len(targets).

        Returns one MeasurementRecord per basis vector, in basis order. The measured qutrits are
        removed from each post-measurement state. Outcomes below the null threshold are kept with
        probability 0 and is_null set.
    """
    targets = list(targets)
    if basis.dim != QUTRIT_DIM ** len(targets):
        raise DimensionMismatchError("a %d-dimensional basis cannot measure %d qutrits" % (basis.dim, len(targets)))
    records = []
    total = 0.0
    for index, vector in enumerate(basis.vectors):
        amps, remaining = project_amplitudes(s, targets, vector)
        probability = float(np.vdot(amps, amps).real)
        total += probability
        label = basis.outcome_labels[index]
        if probability < null_probability:
            records.append(MeasurementRecord(targets, index, label, 0.0, None, is_null=True))
        else:
            post_state = StateVector(amps / np.sqrt(probability), remaining)
            records.append(MeasurementRecord(targets, index, label, probability, post_state))
    if abs(total - 1.0) > tolerance:
        raise NormalizationError("outcome probabilities sum to %.12f" % total)
    _logger.debug("measured %s in %s: %s", targets, basis.name,
                  ", ".join("%s:%.6f" % (r.outcome_label, r.probability) for r in records))
    return records


def fidelity_up_to_phase(a, b):
    """ Return |<a|b>|, the overlap of two states ignoring global phase.

        The label order of b is aligned to a first; both registers must hold the same labels.
    """
    if sorted(a.labels) != sorted(b.labels):
        raise DimensionMismatchError("cannot compare registers %s and %s" % (a.labels, b.labels))
    b = b.permute(a.labels)
    return min(1.0, float(abs(np.vdot(a.amps, b.amps))))
