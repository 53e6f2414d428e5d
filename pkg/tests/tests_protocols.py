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

import os.path
import sys
from fractions import Fraction

import numpy as np
import pytest

###################
# Setup path data #
###################

tests_path = os.path.dirname(os.path.abspath(__file__))
base_path = os.path.abspath(os.path.join(tests_path, '../'))
sys.path.insert(0, base_path)

from qutritshare.algorithms.commutation import predicted_probability  # noqa: E402
from qutritshare.algorithms.families import FamilyId, random_member, sample_family  # noqa: E402
from qutritshare.channels.bases import random_basis_params  # noqa: E402
from qutritshare.channels.gates import sigma  # noqa: E402
from qutritshare.channels.states import BellIndex  # noqa: E402
from qutritshare.data.common import (BasisCase, ChannelName, MessageMeaning, OperationKind, PartyName,  # noqa: E402
                                     SchemeName)
from qutritshare.exceptions import BasisError, FamilyError, NonUnitaryError, ProtocolError  # noqa: E402
from qutritshare.protocols import scheme2  # noqa: E402
from qutritshare.protocols.common import (Branch, BranchEnumeration, ClassicalMessage, TraceStep,  # noqa: E402
                                          make_parties)
from qutritshare.protocols.resources import (channel_summary, necessary_operations, resources,  # noqa: E402
                                             summarize_operations, verify_branch_messages)
from qutritshare.protocols.scheme1 import run_scheme1, teleportation_correction  # noqa: E402
from qutritshare.protocols.scheme2 import run_scheme2  # noqa: E402
from qutritshare.utils.linalg import random_amplitudes, random_generic_unitary, random_unitary  # noqa: E402

ATOL = 1e-9

# chi with no |0> component, reproduced exactly by restricted operations in basis C1.
CHI_WITHOUT_ZERO = [0.0, 0.6, 0.8j]

SCHEME1_RUNS = 50
GENERIC_RUNS = 50
FAMILY_SAMPLES = 20
END_TO_END_RUNS = 50

# (declared family, preset basis) pairs where every xi outcome is corrected.
FULLY_CORRECTED = [(FamilyId.U12, BasisCase.C1), (FamilyId.U15, BasisCase.C2), (FamilyId.U18, BasisCase.C3),
                   (FamilyId.U1, BasisCase.C4A), (FamilyId.U1, BasisCase.C4B)]

# Pairs where the xi0 and one more outcome are corrected.
TWO_THIRDS_CORRECTED = [(FamilyId.U34_MINUS_12, BasisCase.C1), (FamilyId.U67_MINUS_15, BasisCase.C2),
                        (FamilyId.U910_MINUS_18, BasisCase.C3)]

####################
# Helper Functions #
####################


def branches_of_outcome(e, k):
    return [branch for branch in e.branches if branch.outcome_path[-1][1] == k]


def non_null(branches):
    return [branch for branch in branches if not branch.is_null]


############
# Fixtures #
############


@pytest.fixture()
def rng():
    return np.random.default_rng(2026)


@pytest.fixture()
def scheme1_run(rng):
    return run_scheme1(random_unitary(rng, name="U"), random_amplitudes(rng))


@pytest.fixture()
def generic_scheme2_run(rng):
    return run_scheme2(random_generic_unitary(rng), random_amplitudes(rng), BasisCase.C1)


#########
# Tests #
#########

def test_scheme1_enumerates_every_branch(scheme1_run):
    assert len(scheme1_run) == 243
    assert abs(scheme1_run.total_probability - 1.0) < ATOL
    scheme1_run.check_invariants()


def test_scheme1_always_succeeds(scheme1_run):
    for branch in scheme1_run.branches:
        assert branch.protocol_success and branch.oracle_success
        assert branch.fidelity > 1.0 - ATOL
        assert abs(branch.probability - 1.0 / 243.0) < ATOL
    assert scheme1_run.nominal_success_probability == 1
    assert abs(scheme1_run.success_probability - 1.0) < ATOL
    assert scheme1_run.unsupported_claims == []


def test_scheme1_succeeds_for_fifty_operations(rng):
    for _ in range(SCHEME1_RUNS):
        e = run_scheme1(random_unitary(rng), random_amplitudes(rng))
        assert len(e) == 243
        assert min(branch.fidelity for branch in e.branches) >= 1.0 - ATOL
        assert abs(e.success_probability - 1.0) < ATOL
        assert e.nominal_success_probability == 1


def test_scheme1_resources(scheme1_run):
    report = verify_branch_messages(scheme1_run)
    assert (report.q_t, report.c_t) == (5, 5)
    assert report.eta == Fraction(1, 10)
    assert necessary_operations(scheme1_run) == "2 GMs, SM, 2 SOs"
    assert channel_summary(scheme1_run.channels) == "GB, GG"


def test_scheme1_messages(scheme1_run):
    branch = scheme1_run.branches[0]
    assert [(m.sender, m.receivers) for m in branch.messages] == [
        (PartyName.BOB, (PartyName.ALICE,)),
        (PartyName.ALICE, (PartyName.CHARLIE,)),
        (PartyName.BOB, (PartyName.CHARLIE,)),
    ]
    assert branch.message_trits == 5


def test_teleportation_correction_undoes_sigma():
    for idx in BellIndex.all():
        assert teleportation_correction(idx).proportional_to(sigma(idx).dagger())


def test_scheme2_enumerates_every_branch(generic_scheme2_run):
    assert len(generic_scheme2_run) == 81
    generic_scheme2_run.check_invariants()
    assert generic_scheme2_run.basis_name == "xi(C1)"


def test_scheme2_arbitrary_operation(generic_scheme2_run):
    e = generic_scheme2_run
    assert e.nominal_success_probability == Fraction(1, 3)
    assert abs(e.success_probability - 1.0 / 3.0) < ATOL
    for branch in branches_of_outcome(e, 0):
        assert branch.protocol_success and branch.oracle_success
        assert abs(branch.probability - 1.0 / 81.0) < ATOL
    for k in (1, 2):
        for branch in non_null(branches_of_outcome(e, k)):
            assert not branch.protocol_success
            assert not branch.oracle_success
    assert e.unsupported_claims == []


def test_scheme2_arbitrary_operations_fifty_runs(rng):
    for _ in range(GENERIC_RUNS):
        e = run_scheme2(random_generic_unitary(rng), random_amplitudes(rng), BasisCase.C1)
        assert e.nominal_success_probability == Fraction(27, 81)
        for k in (1, 2):
            assert not any(branch.oracle_success for branch in branches_of_outcome(e, k))


def test_scheme2_resources(generic_scheme2_run):
    report = verify_branch_messages(generic_scheme2_run)
    assert (report.q_t, report.c_t) == (4, 4)
    assert report.eta == Fraction(1, 24)
    assert necessary_operations(generic_scheme2_run) == "V, GM, 2 SMs, 3 SOs"
    assert channel_summary(generic_scheme2_run.channels) == "2 GBs"
    assert all(branch.message_trits == 4 for branch in generic_scheme2_run.branches)


def test_scheme2_messages(generic_scheme2_run):
    branch = generic_scheme2_run.branches[0]
    meanings = [m.meaning for m in branch.messages]
    assert meanings == [MessageMeaning.SINGLE_OUTCOME, MessageMeaning.BELL_OUTCOME, MessageMeaning.SINGLE_OUTCOME]
    assert [m.receivers for m in branch.messages] == [(PartyName.ALICE,), (PartyName.CHARLIE,),
                                                       (PartyName.CHARLIE,)]


@pytest.mark.parametrize("family,case_id", FULLY_CORRECTED)
def test_scheme2_full_union_declared(rng, family, case_id):
    for _ in range(FAMILY_SAMPLES):
        e = run_scheme2(random_member(rng, family), random_amplitudes(rng), case_id, declared=family)
        assert e.nominal_success_probability == 1
        assert verify_branch_messages(e).eta == Fraction(1, 8)
        e.check_invariants()


@pytest.mark.parametrize("family,case_id", TWO_THIRDS_CORRECTED)
def test_scheme2_difference_declared(rng, family, case_id):
    for _ in range(FAMILY_SAMPLES):
        e = run_scheme2(random_member(rng, family), random_amplitudes(rng), case_id, declared=family)
        assert e.nominal_success_probability == Fraction(2, 3)
        assert verify_branch_messages(e).eta == Fraction(1, 12)


def test_scheme2_exact_when_chi_avoids_the_frozen_level(rng):
    for _ in range(5):
        e = run_scheme2(random_member(rng, FamilyId.U12), CHI_WITHOUT_ZERO, BasisCase.C1, declared=FamilyId.U12)
        assert abs(e.success_probability - 1.0) < ATOL
        assert e.unsupported_claims == []


def test_scheme2_difference_succeeds_on_second_outcome(rng):
    u = random_member(rng, FamilyId.U34_MINUS_12)
    e = run_scheme2(u, CHI_WITHOUT_ZERO, BasisCase.C1, declared=FamilyId.U34_MINUS_12)
    for branch in non_null(branches_of_outcome(e, 2)):
        assert branch.protocol_success and branch.oracle_success


def test_scheme2_reports_unsupported_claims(rng):
    u = sample_family(FamilyId.U1, [0.4, 1.9, 3.1])
    e = run_scheme2(u, random_amplitudes(rng), BasisCase.C1, declared=FamilyId.U12)
    assert e.nominal_success_probability == 1
    assert e.unsupported_claims
    assert e.success_probability < 1.0 - 1e-6


def test_scheme2_fourier_basis_is_exact_and_uniform(rng):
    u = sample_family(FamilyId.U1, [0.4, 1.9, 3.1])
    e = run_scheme2(u, random_amplitudes(rng), BasisCase.C4A, declared=FamilyId.U1)
    assert e.nominal_success_probability == 1
    assert abs(e.success_probability - 1.0) < ATOL
    for branch in e.branches:
        assert abs(branch.probability - 1.0 / 81.0) < ATOL
        assert branch.oracle_success


def test_scheme2_free_basis_parameters(rng):
    e = run_scheme2(random_generic_unitary(rng), random_amplitudes(rng), random_basis_params(rng))
    e.check_invariants()
    assert abs(e.success_probability - 1.0 / 3.0) < ATOL


def test_scheme2_degenerate_preset(rng):
    e = run_scheme2(random_generic_unitary(rng), random_amplitudes(rng), BasisCase.C2)
    e.check_invariants()


def test_scheme2_input_errors(rng):
    with pytest.raises(NonUnitaryError):
        run_scheme2(np.diag([1.0, 2.0, 1.0]), random_amplitudes(rng), BasisCase.C1)
    with pytest.raises(FamilyError):
        run_scheme2(random_unitary(rng), random_amplitudes(rng), BasisCase.C1, declared="U11")
    with pytest.raises(BasisError):
        run_scheme2(random_unitary(rng), random_amplitudes(rng), None)


def test_locality_violation_is_detected():
    parties = make_parties(scheme2.OWNERSHIP)
    trace = [TraceStep(PartyName.BOB, OperationKind.SO, ["c"], "S")]
    branch = Branch([], 1.0, [], trace, None, True, True)
    e = BranchEnumeration(SchemeName.S2, [branch], parties, scheme2.CHANNELS, None)
    with pytest.raises(ProtocolError):
        e.check_invariants()


def test_probability_completeness_is_checked():
    parties = make_parties(scheme2.OWNERSHIP)
    e = BranchEnumeration(SchemeName.S2, [Branch([], 0.5, [], [], None, True, True)], parties,
                          scheme2.CHANNELS, None)
    with pytest.raises(ProtocolError):
        e.check_invariants()


def test_ownership_must_be_disjoint():
    with pytest.raises(ProtocolError):
        make_parties({PartyName.ALICE: ["a"], PartyName.BOB: ["a"]})


def test_message_validation():
    with pytest.raises(ProtocolError):
        ClassicalMessage(PartyName.BOB, [PartyName.ALICE], [0, 1], MessageMeaning.SINGLE_OUTCOME)
    with pytest.raises(ProtocolError):
        ClassicalMessage(PartyName.BOB, [PartyName.ALICE], [3], MessageMeaning.SINGLE_OUTCOME)


def test_resource_table():
    assert resources(SchemeName.S1, 1).eta == Fraction(1, 10)
    assert resources(SchemeName.S2, Fraction(1, 3)).eta == Fraction(1, 24)
    assert resources(SchemeName.S2, Fraction(2, 3)).eta == Fraction(1, 12)
    assert resources(SchemeName.S2, 1).eta == Fraction(1, 8)
    assert resources(SchemeName.S2, 1).channels == [ChannelName.BELL, ChannelName.BELL]


def test_resource_errors():
    with pytest.raises(ProtocolError):
        resources(SchemeName.S1, Fraction(1, 3))
    with pytest.raises(ProtocolError):
        resources("S3", 1)
    empty = BranchEnumeration(SchemeName.S2, [], make_parties(scheme2.OWNERSHIP), scheme2.CHANNELS, None)
    with pytest.raises(ProtocolError):
        verify_branch_messages(empty)
    with pytest.raises(ProtocolError):
        empty.nominal_success_probability


def test_table_labels_of_operations_and_channels():
    assert (OperationKind.GBM, OperationKind.SM, OperationKind.SO) == ("GM", "SM", "SO")
    assert (ChannelName.BELL, ChannelName.GHZ) == ("GB", "GG")
    trace = [TraceStep(PartyName.ALICE, OperationKind.GBM, ["a'", "a"], "GBM"),
             TraceStep(PartyName.BOB, OperationKind.GBM, ["b''", "b'"], "GBM")]
    assert summarize_operations(trace) == "2 GMs"
    assert channel_summary([ChannelName.BELL, ChannelName.GHZ]) == "GB, GG"


def test_operation_summary_merges_consecutive_operations():
    trace = [
        TraceStep(PartyName.CHARLIE, OperationKind.SO, ["c"], "a"),
        TraceStep(PartyName.BOB, OperationKind.SM, ["b'"], "Z"),
        TraceStep(PartyName.CHARLIE, OperationKind.SO, ["c"], "b"),
        TraceStep(PartyName.ALICE, OperationKind.TARGET, ["a'"], "U"),
    ]
    assert summarize_operations(trace) == "SM, SO"


def test_scheme1_trivial_operations():
    identity = run_scheme1(np.eye(3), [1.0, 0.0, 0.0])
    shift = run_scheme1(np.eye(3)[[2, 0, 1]], [1.0, 0.0, 0.0])
    for branch in identity.branches:
        assert abs(abs(branch.final_state.amplitude([0])) - 1.0) < ATOL
    for branch in shift.branches:
        assert abs(abs(branch.final_state.amplitude([1])) - 1.0) < ATOL


def test_prediction_matches_enumeration(rng):
    pairs = FULLY_CORRECTED + TWO_THIRDS_CORRECTED
    for _ in range(END_TO_END_RUNS):
        family, case_id = pairs[rng.integers(len(pairs))]
        e = run_scheme2(random_member(rng, family), random_amplitudes(rng), case_id, declared=family)
        e.check_invariants()
        assert e.nominal_success_probability == predicted_probability([family], case_id)
