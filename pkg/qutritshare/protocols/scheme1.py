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
This module is used to run scheme S1, the general operation-sharing scheme.

S1 teleports |chi> from Bob to Alice, lets Alice apply U and then splits U|chi> between Bob and
Charlie so that Charlie reconstructs it with Bob's help. It works for an arbitrary U.

Registers: Alice holds a' and a, Bob holds b'', b' and b, Charlie holds c. The Bell channel
|Psi_00>_{a'b'} and the GHZ channel on (a, b, c) are shared in advance. The GHZ channel is only
joined to the register once b'' and b' have been measured, which keeps registers at four qutrits.

    i    Bob measures (b'', b') in the generalized Bell basis and sends (n, m) to Alice, who
         applies the correction undoing the collapse on a'.
    ii   Alice applies U to a'.
    iii  Alice measures (a', a) in the generalized Bell basis and sends (n, m) to Charlie. Bob
         measures b in the Fourier basis and sends k to Charlie.
    iv   Charlie applies the correction undoing the joint collapse on c.

Corrections are derived from the projection oracle and cached per outcome. Every path is
enumerated: 9 x 9 x 3 = 243 branches.
"""
import logging
from functools import lru_cache

import numpy as np

from ..channels.gates import collapse_operator, correction_from_collapse
from ..channels.states import BellIndex, bell_amplitudes, fourier_basis, gbm_basis, generalized_bell, ghz3
from ..data.common import ChannelName, MessageMeaning, OperationKind, PartyName, SchemeName
from ..data.parameters import TOLERANCE
from ..data.state import StateVector, apply_unitary, fidelity_up_to_phase, measure, tensor
from .common import Branch, BranchEnumeration, ClassicalMessage, TraceStep, make_parties
from .scheme2 import as_chi, as_unitary, target_state

OWNERSHIP = {
    PartyName.ALICE: ["a'", "a"],
    PartyName.BOB: ["b''", "b'", "b"],
    PartyName.CHARLIE: ["c"],
}

CHANNELS = [ChannelName.BELL, ChannelName.GHZ]

GHZ_LABELS = ("a", "b", "c")

_logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def teleportation_correction(idx):
    """ Alice's correction on a' after Bob's Bell outcome idx on (b'', b'). """
    bell = generalized_bell(BellIndex(0, 0), ("a'", "b'"))
    collapse, label = collapse_operator(
        lambda v: tensor(StateVector(v, ["b''"]), bell),
        [(["b''", "b'"], bell_amplitudes(idx))])
    return correction_from_collapse(collapse, "QT%s^dagger" % idx.label)


@lru_cache(maxsize=None)
def splitting_correction(idx, k):
    """ Charlie's correction on c after Alice's Bell outcome idx on (a', a) and Bob's Fourier outcome k. """
    ghz = ghz3(GHZ_LABELS)
    fourier = fourier_basis()
    collapse, label = collapse_operator(
        lambda v: tensor(StateVector(v, ["a'"]), ghz),
        [(["a'", "a"], bell_amplitudes(idx)), (["b"], fourier[k])])
    return correction_from_collapse(collapse, "QSTS%s%d^dagger" % (idx.label, k))


def run_scheme1(u, chi, tolerance=TOLERANCE):
    """ Enumerate every branch of scheme S1.

        Arguments:
            u (Unitary): The single-qutrit operation Alice applies.
            chi (StateVector or Sequence[complex]): The state Bob holds in b''.
            tolerance (float): Fidelity tolerance of the success oracle.

        Returns a BranchEnumeration with 243 branches, all declared successful.
    """
    u = as_unitary(u)
    chi = as_chi(chi)
    parties = make_parties(OWNERSHIP)
    target = target_state(u, chi, "c")
    gbm = gbm_basis()
    fourier = fourier_basis()
    indices = BellIndex.all()
    state = tensor(chi, generalized_bell(BellIndex(0, 0), ("a'", "b'")))

    branches = []
    for rec_qt in measure(state, ["b''", "b'"], gbm):
        idx_qt = indices[rec_qt.outcome_index]
        fix_qt = teleportation_correction(idx_qt)
        s_qt = apply_unitary(rec_qt.post_state, fix_qt, ["a'"])
        s_qt = apply_unitary(s_qt, u, ["a'"])
        s_qt = tensor(s_qt, ghz3(GHZ_LABELS))
        for rec_split in measure(s_qt, ["a'", "a"], gbm):
            idx_split = indices[rec_split.outcome_index]
            for rec_k in measure(rec_split.post_state, ["b"], fourier):
                k = rec_k.outcome_index
                fix_split = splitting_correction(idx_split, k)
                final = apply_unitary(rec_k.post_state, fix_split, ["c"])
                fidelity = fidelity_up_to_phase(target, final)
                trace = [
                    TraceStep(PartyName.BOB, OperationKind.GBM, ["b''", "b'"], gbm.name),
                    TraceStep(PartyName.ALICE, OperationKind.SO, ["a'"], fix_qt.name),
                    TraceStep(PartyName.ALICE, OperationKind.TARGET, ["a'"], u.name),
                    TraceStep(PartyName.ALICE, OperationKind.GBM, ["a'", "a"], gbm.name),
                    TraceStep(PartyName.BOB, OperationKind.SM, ["b"], fourier.name),
                    TraceStep(PartyName.CHARLIE, OperationKind.SO, ["c"], fix_split.name),
                ]
                messages = [
                    ClassicalMessage(PartyName.BOB, [PartyName.ALICE], idx_qt.trits, MessageMeaning.BELL_OUTCOME),
                    ClassicalMessage(PartyName.ALICE, [PartyName.CHARLIE], idx_split.trits,
                                     MessageMeaning.BELL_OUTCOME),
                    ClassicalMessage(PartyName.BOB, [PartyName.CHARLIE], [k], MessageMeaning.SINGLE_OUTCOME),
                ]
                path = [("b''b'", rec_qt.outcome_index, rec_qt.outcome_label),
                        ("a'a", rec_split.outcome_index, rec_split.outcome_label),
                        ("b", k, rec_k.outcome_label)]
                probability = rec_qt.probability * rec_split.probability * rec_k.probability
                branches.append(Branch(path, probability, messages, trace, final,
                                       protocol_success=True,
                                       oracle_success=fidelity >= 1.0 - tolerance,
                                       fidelity=fidelity))

    enumeration = BranchEnumeration(SchemeName.S1, branches, parties, CHANNELS, target)
    failed = [branch for branch in branches if not branch.oracle_success]
    if failed:
        _logger.error("S1 failed to reconstruct U|chi> in %d branches, lowest fidelity %.12f",
                      len(failed), float(np.min([branch.fidelity for branch in failed])))
    return enumeration
