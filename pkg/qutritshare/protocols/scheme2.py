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
This module is used to run scheme S2, the operation-sharing scheme built on two Bell channels.

Registers: Alice holds a' and a, Bob holds b' and b'', Charlie holds c. The channels
|Psi_00>_{a'b'} and |Psi_00>_{ac} are shared in advance and Bob holds |chi> in b''.

    I    Bob applies V to (b', b'') and measures b'' in the computational basis (outcome t).
    II   Bob applies I, S or T to b' and sends t to Alice, who applies the same shift to a'.
         (a', b') now holds alpha|00> + beta|11> + gamma|22>; Alice applies U to a'.
    III  Alice measures (a', a) in the generalized Bell basis and sends (n, m) to Charlie,
         who applies sigma^(n,m)^dagger to c.
    IV   Bob measures b' in the xi basis and sends k to Charlie. For xi0 Charlie is done. For
         xi1 and xi2 Charlie holds U W_k|chi> up to normalization and applies the inverse phase
         direction of W_k only if the declared family guarantees U W_k = +-W_k U.

Every path is enumerated: 3 x 9 x 3 = 81 branches.
"""
import logging

from ..algorithms.commutation import guaranteed_outcomes
from ..algorithms.families import FamilyId
from ..channels.bases import BasisParams, preset_basis, w_operators, xi_basis
from ..channels.gates import shift_correction, sigma, v_gate
from ..channels.states import BellIndex, chi_state, computational_basis, gbm_basis, generalized_bell
from ..data.common import ChannelName, MessageMeaning, OperationKind, PartyName, SchemeName
from ..data.operator import Unitary
from ..data.parameters import TOLERANCE
from ..data.state import StateVector, apply_unitary, fidelity_up_to_phase, measure, tensor
from ..exceptions import BasisError, DimensionMismatchError, NonUnitaryError
from .common import Branch, BranchEnumeration, ClassicalMessage, TraceStep, make_parties, null_records

OWNERSHIP = {
    PartyName.ALICE: ["a'", "a"],
    PartyName.BOB: ["b'", "b''"],
    PartyName.CHARLIE: ["c"],
}

CHANNELS = [ChannelName.BELL, ChannelName.BELL]

_logger = logging.getLogger(__name__)


def as_unitary(u):
    """ Return u as a single-qutrit Unitary, raising NonUnitaryError with the residual otherwise. """
    if not isinstance(u, Unitary):
        u = Unitary(getattr(u, "matrix", u), getattr(u, "name", "U"))
    if u.dim != 3:
        raise DimensionMismatchError("the shared operation acts on one qutrit, got dimension %d" % u.dim)
    return u


def as_chi(chi, label="b''"):
    """ Return the state to be operated on from a StateVector or (alpha, beta, gamma). """
    if isinstance(chi, StateVector):
        return StateVector(chi.amps, [label])
    return chi_state(chi, label)


def resolve_basis(basis):
    """ Return (MeasurementBasis, (W1, W2)) for a preset case id or BasisParams. """
    if isinstance(basis, BasisParams):
        name = "xi(x1=%s, y1=%s)" % (basis.x1, basis.y1)
        return xi_basis(basis, name=name), w_operators(basis)
    if basis is None:
        raise BasisError("scheme S2 needs a xi basis")
    return preset_basis(basis)


def target_state(u, chi, label):
    """ U|chi> on the given qutrit. """
    return StateVector(apply_unitary(chi, u, [chi.labels[0]]).amps, [label])


def run_scheme2(u, chi, basis, declared=None, tolerance=TOLERANCE):
    """ Enumerate every branch of scheme S2.

        Arguments:
            u (Unitary): The single-qutrit operation Alice applies.
            chi (StateVector or Sequence[complex]): The state Bob holds in b''.
            basis (str or BasisParams): A preset case id taken from BasisCase, or free parameters.
            declared (str): The family id known in advance to contain U, or None.
            tolerance (float): Fidelity tolerance of the success oracle.

        Returns a BranchEnumeration with 81 branches.
    """
    u = as_unitary(u)
    chi = as_chi(chi)
    if declared is not None:
        FamilyId.resolve(declared)
    xi, (w1, w2) = resolve_basis(basis)
    guaranteed = [True] + guaranteed_outcomes([declared] if declared else [], (w1, w2), tolerance)
    charlie_corrections = [Unitary.identity()]
    for w, ok in zip((w1, w2), guaranteed[1:]):
        charlie_corrections.append(w.phase_direction(tolerance).dagger() if ok else Unitary.identity())
    _logger.debug("S2 basis %s, declared %s, guaranteed outcomes %s", xi.name, declared, guaranteed)

    parties = make_parties(OWNERSHIP)
    target = target_state(u, chi, "c")
    bell = generalized_bell(BellIndex(0, 0), ("a'", "b'"))
    state = tensor(tensor(bell, chi), generalized_bell(BellIndex(0, 0), ("a", "c")))
    v = v_gate()
    state = apply_unitary(state, v, ["b'", "b''"])
    gbm = gbm_basis()
    indices = BellIndex.all()

    branches = []
    for rec_t in measure(state, ["b''"], computational_basis()):
        t = rec_t.outcome_index
        shift = shift_correction(t)
        s_t = rec_t.post_state
        if s_t is not None:
            s_t = apply_unitary(s_t, shift, ["b'"])
            s_t = apply_unitary(s_t, shift, ["a'"])
            s_t = apply_unitary(s_t, u, ["a'"])
        gbm_records = measure(s_t, ["a'", "a"], gbm) if s_t is not None else null_records(["a'", "a"], gbm)
        for rec_nm in gbm_records:
            idx = indices[rec_nm.outcome_index]
            undo_sigma = sigma(idx).dagger()
            s_nm = rec_nm.post_state
            if s_nm is not None:
                s_nm = apply_unitary(s_nm, undo_sigma, ["c"])
            xi_records = measure(s_nm, ["b'"], xi) if s_nm is not None else null_records(["b'"], xi)
            for rec_k in xi_records:
                k = rec_k.outcome_index
                final = rec_k.post_state
                if final is not None:
                    final = apply_unitary(final, charlie_corrections[k], ["c"])
                fidelity = fidelity_up_to_phase(target, final) if final is not None else 0.0
                trace = [
                    TraceStep(PartyName.BOB, OperationKind.V, ["b'", "b''"], v.name),
                    TraceStep(PartyName.BOB, OperationKind.SM, ["b''"], "Z"),
                    TraceStep(PartyName.BOB, OperationKind.SO, ["b'"], shift.name),
                    TraceStep(PartyName.ALICE, OperationKind.SO, ["a'"], shift.name),
                    TraceStep(PartyName.ALICE, OperationKind.TARGET, ["a'"], u.name),
                    TraceStep(PartyName.ALICE, OperationKind.GBM, ["a'", "a"], gbm.name),
                    TraceStep(PartyName.CHARLIE, OperationKind.SO, ["c"], undo_sigma.name),
                    TraceStep(PartyName.BOB, OperationKind.SM, ["b'"], xi.name),
                    TraceStep(PartyName.CHARLIE, OperationKind.SO, ["c"], charlie_corrections[k].name),
                ]
                messages = [
                    ClassicalMessage(PartyName.BOB, [PartyName.ALICE], [t], MessageMeaning.SINGLE_OUTCOME),
                    ClassicalMessage(PartyName.ALICE, [PartyName.CHARLIE], idx.trits, MessageMeaning.BELL_OUTCOME),
                    ClassicalMessage(PartyName.BOB, [PartyName.CHARLIE], [k], MessageMeaning.SINGLE_OUTCOME),
                ]
                path = [("b''", t, rec_t.outcome_label),
                        ("a'a", rec_nm.outcome_index, rec_nm.outcome_label),
                        ("b'", k, rec_k.outcome_label)]
                probability = rec_t.probability * rec_nm.probability * rec_k.probability
                branches.append(Branch(path, probability, messages, trace, final,
                                       protocol_success=guaranteed[k],
                                       oracle_success=fidelity >= 1.0 - tolerance,
                                       fidelity=fidelity))

    enumeration = BranchEnumeration(SchemeName.S2, branches, parties, CHANNELS, target,
                                    declared=declared, basis_name=xi.name)
    _logger.debug("S2 enumerated %d branches, nominal P = %s, exact P = %.12f", len(branches),
                  enumeration.nominal_success_probability, enumeration.success_probability)
    return enumeration
