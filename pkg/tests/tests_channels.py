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

import numpy as np
import pytest
from numpy.testing import assert_allclose

###################
# Setup path data #
###################

tests_path = os.path.dirname(os.path.abspath(__file__))
base_path = os.path.abspath(os.path.join(tests_path, '../'))
sys.path.insert(0, base_path)

from qutritshare.channels.bases import (BasisParams, XI0, preset_basis, preset_params,  # noqa: E402
                                        random_basis_params, w_operators, xi_basis)
from qutritshare.channels.gates import (collapse_operator, shift_correction, shift_s, shift_t, sigma,  # noqa: E402
                                        v_gate)
from qutritshare.channels.states import (BellIndex, bell_amplitudes, chi_state, computational_basis,  # noqa: E402
                                         fourier_basis, gbm_basis, generalized_bell, ghz3)
from qutritshare.data.common import BasisCase  # noqa: E402
from qutritshare.data.operator import Operator, Unitary  # noqa: E402
from qutritshare.data.state import (StateVector, apply_unitary, fidelity_up_to_phase, measure,  # noqa: E402
                                    project_amplitudes, tensor)
from qutritshare.exceptions import BasisParameterError, DimensionMismatchError, SingularBasisError  # noqa: E402
from qutritshare.utils.linalg import OMEGA, random_amplitudes, random_unitary  # noqa: E402

ATOL = 1e-9

####################
# Helper Functions #
####################


def parallel(a, b):
    """ True if two vectors are equal up to a complex scalar of modulus one after normalization. """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return abs(abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b)) - 1.0) < ATOL


def permutation(i, j):
    p = np.eye(3)
    p[[i, j]] = p[[j, i]]
    return p


############
# Fixtures #
############


@pytest.fixture()
def rng():
    return np.random.default_rng(99)


@pytest.fixture(params=BasisCase.names)
def case_id(request):
    return request.param


#########
# Tests #
#########

def test_bell_00():
    s = generalized_bell(BellIndex(0, 0))
    expected = np.zeros(9, dtype=complex)
    expected[[0, 4, 8]] = 1.0 / np.sqrt(3.0)
    assert_allclose(s.amps, expected, atol=ATOL)


def test_bell_01():
    s = generalized_bell(BellIndex(0, 1))
    expected = np.zeros(9, dtype=complex)
    expected[[1, 5, 6]] = 1.0 / np.sqrt(3.0)
    assert_allclose(s.amps, expected, atol=ATOL)


def test_bell_10():
    s = generalized_bell(BellIndex(1, 0))
    expected = np.zeros(9, dtype=complex)
    expected[[0, 4, 8]] = np.array([1.0, OMEGA, OMEGA ** 2]) / np.sqrt(3.0)
    assert_allclose(s.amps, expected, atol=ATOL)


def test_bell_index_range():
    with pytest.raises(DimensionMismatchError):
        BellIndex(3, 0)


def test_gbm_basis():
    basis = gbm_basis()
    assert basis.outcome_labels[0] == "(0,0)"
    assert basis.outcome_labels[5] == "(1,2)"
    assert_allclose(basis[0], generalized_bell(BellIndex(0, 0)).amps, atol=ATOL)
    assert basis.orthonormality_residual() < ATOL


def test_measure_bell_pair_in_gbm():
    records = measure(generalized_bell(BellIndex(0, 0)), ["p", "q"], gbm_basis())
    assert abs(records[0].probability - 1.0) < ATOL
    assert all(r.is_null for r in records[1:])


def test_ghz3():
    s = ghz3()
    assert abs(s.amplitude([0, 0, 0]) - 1.0 / np.sqrt(3.0)) < ATOL
    assert abs(s.amplitude([2, 2, 2]) - 1.0 / np.sqrt(3.0)) < ATOL
    assert abs(s.amplitude([0, 1, 2])) < ATOL
    for record in measure(s, ["a"], computational_basis()):
        assert abs(record.probability - 1.0 / 3.0) < ATOL


def test_fourier_basis_orthonormal():
    basis = fourier_basis()
    assert basis.orthonormality_residual() < ATOL
    assert_allclose(basis[1], np.array([1.0, OMEGA, OMEGA ** 2]) / np.sqrt(3.0), atol=ATOL)


def test_shift_corrections():
    assert shift_correction(0).allclose(np.eye(3))
    s = shift_correction(1)
    for j in range(3):
        assert_allclose(s.matrix @ np.eye(3)[j], np.eye(3)[(j + 1) % 3], atol=ATOL)
    assert shift_correction(2).allclose(shift_t())
    with pytest.raises(DimensionMismatchError):
        shift_correction(3)


def test_shifts_are_mutually_inverse():
    assert_allclose(shift_s().matrix @ shift_t().matrix, np.eye(3), atol=ATOL)
    assert_allclose(shift_t().matrix @ shift_s().matrix, np.eye(3), atol=ATOL)


def test_v_gate_terms():
    v = v_gate().matrix
    assert abs(v[0, 0] - 1.0) < ATOL        # V|00> = |00>
    assert abs(v[3, 4] - 1.0) < ATOL        # V|11> = |10>
    assert abs(v[5, 3] - 1.0) < ATOL        # V|10> = |12>


def test_v_gate_is_permutation():
    v = np.abs(v_gate().matrix)
    assert_allclose(v.sum(axis=0), np.ones(9), atol=ATOL)
    assert_allclose(v.sum(axis=1), np.ones(9), atol=ATOL)
    assert set(np.unique(v)) == {0.0, 1.0}


def test_v_gate_on_bell_and_chi(rng):
    chi = random_amplitudes(rng)
    s = tensor(generalized_bell(BellIndex(0, 0), ("a'", "b'")), chi_state(chi))
    s = apply_unitary(s, v_gate(), ["b'", "b''"])
    for x in range(3):
        for y in range(3):
            assert abs(s.amplitude([x, x, (y - x) % 3]) - chi[y] / np.sqrt(3.0)) < ATOL


def test_shift_corrections_restore_diagonal_pair(rng):
    for _ in range(100):
        chi = random_amplitudes(rng)
        s = tensor(generalized_bell(BellIndex(0, 0), ("a'", "b'")), chi_state(chi))
        s = apply_unitary(s, v_gate(), ["b'", "b''"])
        expected = np.zeros(9, dtype=complex)
        expected[[0, 4, 8]] = chi
        expected = StateVector(expected, ["a'", "b'"])
        for record in measure(s, ["b''"], computational_basis()):
            shift = shift_correction(record.outcome_index)
            t = apply_unitary(record.post_state, shift, ["b'"])
            t = apply_unitary(t, shift, ["a'"])
            assert fidelity_up_to_phase(expected, t) > 1.0 - ATOL


def test_sigma_special_cases():
    assert sigma(BellIndex(0, 0)).allclose(np.eye(3))
    cyclic = np.zeros((3, 3))
    cyclic[1, 0] = cyclic[2, 1] = cyclic[0, 2] = 1.0
    assert sigma(BellIndex(0, 1)).allclose(cyclic)
    for idx in BellIndex.all():
        assert sigma(idx).is_unitary()


def test_sigma_matches_bell_projection(rng):
    u = random_unitary(rng).matrix
    chi = random_amplitudes(rng)
    j_state = StateVector((u * chi[np.newaxis, :]).reshape(-1), ["a'", "b'"])
    q_state = tensor(j_state, generalized_bell(BellIndex(0, 0), ("a", "c")))
    for idx in BellIndex.all():
        amps, labels = project_amplitudes(q_state, ["a'", "a"], bell_amplitudes(idx))
        assert labels == ("b'", "c")
        expected = (sigma(idx).matrix @ u * chi[np.newaxis, :]).T / 3.0
        assert_allclose(amps.reshape(3, 3), expected, atol=ATOL)


def test_collapse_operator_recovers_sigma():
    bell = generalized_bell(BellIndex(0, 0), ("a", "c"))
    for idx in BellIndex.all():
        collapse, label = collapse_operator(lambda v: tensor(StateVector(v, ["a'"]), bell),
                                            [(["a'", "a"], bell_amplitudes(idx))])
        assert label == "c"
        assert Operator(collapse).proportional_to(sigma(idx))


def test_xi_basis_case_1():
    basis, _ = preset_basis(BasisCase.C1)
    assert parallel(basis[1], [0, -1, 1])
    assert parallel(basis[2], [-2, 1, 1])


def test_xi_basis_case_2_completes_degenerate_formula():
    p = preset_params(BasisCase.C2)
    assert p.is_degenerate
    basis = xi_basis(p)
    assert parallel(basis[1], [-1, 0, 1])
    assert parallel(basis[2], [1, -2, 1])
    with pytest.raises(SingularBasisError):
        xi_basis(p, strict=True)


def test_strict_basis_raises_only_when_degenerate():
    for case_id in (BasisCase.C1, BasisCase.C3, BasisCase.C4A, BasisCase.C4B):
        p = preset_params(case_id)
        assert not p.is_degenerate
        assert_allclose(xi_basis(p, strict=True).vectors, xi_basis(p).vectors, atol=ATOL)
    degenerate = BasisParams(1.0 / np.sqrt(2.0), 0.0)
    assert degenerate.is_degenerate
    assert xi_basis(degenerate).orthonormality_residual() < ATOL
    with pytest.raises(SingularBasisError):
        xi_basis(degenerate, strict=True)


def test_xi_basis_case_4():
    basis_a, _ = preset_basis(BasisCase.C4A)
    assert parallel(basis_a[1], [1, OMEGA, OMEGA ** 2])
    assert parallel(basis_a[2], [1, OMEGA ** 2, OMEGA])
    basis_b, _ = preset_basis(BasisCase.C4B)
    assert parallel(basis_b[1], [0.5j, 0.5, -(1 + 1j) / 2])


def test_presets_are_orthonormal(case_id):
    basis, _ = preset_basis(case_id)
    assert basis.orthonormality_residual() < ATOL
    assert_allclose(basis[0], XI0, atol=ATOL)


def test_basis_parameter_constraint():
    with pytest.raises(BasisParameterError):
        BasisParams(1.0, 1.0)


def test_random_bases_are_orthonormal(rng):
    for _ in range(1000):
        basis = xi_basis(random_basis_params(rng))
        assert basis.orthonormality_residual() < ATOL


def test_w_operators_of_presets():
    _, (w11, w12) = preset_basis(BasisCase.C1)
    assert w11.proportional_to(np.diag([0, -1, 1]))
    assert w12.proportional_to(np.diag([-2, 1, 1]))
    _, (w31, _) = preset_basis(BasisCase.C3)
    assert w31.proportional_to(np.diag([-1, 1, 0]))


def test_only_fourier_preset_gives_unitary_w(case_id):
    _, (w1, w2) = preset_basis(case_id)
    balanced = case_id == BasisCase.C4A
    assert w1.is_scaled_unitary() == balanced
    assert w2.is_scaled_unitary() == balanced


def test_xi_decomposition(rng):
    for _ in range(100):
        p = random_basis_params(rng)
        basis = xi_basis(p)
        w_ops = [Unitary.identity()] + list(w_operators(p))
        u = random_unitary(rng).matrix
        chi = random_amplitudes(rng)
        j_state = StateVector((u * chi[np.newaxis, :]).reshape(-1), ["c", "b'"])
        for k in range(3):
            amps, labels = project_amplitudes(j_state, ["b'"], basis[k])
            assert labels == ("c",)
            assert_allclose(amps, u @ w_ops[k].matrix @ chi / np.sqrt(3.0), atol=ATOL)


def test_permutations_map_case_1_onto_cases_2_and_3():
    _, (w11, w12) = preset_basis(BasisCase.C1)
    _, (w21, w22) = preset_basis(BasisCase.C2)
    _, (w31, w32) = preset_basis(BasisCase.C3)
    p01, p02, p12 = permutation(0, 1), permutation(0, 2), permutation(1, 2)
    assert Operator(p01 @ w11.matrix @ p01).proportional_to(w21)
    assert Operator(p01 @ w12.matrix @ p01).proportional_to(w22)
    assert Operator(p02 @ w11.matrix @ p02).proportional_to(w31)
    assert Operator(p02 @ w12.matrix @ p02).proportional_to(w32)
    assert Operator(p12 @ w21.matrix @ p12).proportional_to(w31)
