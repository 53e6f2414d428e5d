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
This module is used to run the commands of the command-line front end.

Each command returns an exit status and a report document: a dict of plain JSON types that the
writers render as text or as a JSON document.
"""
import logging
from collections import OrderedDict
from fractions import Fraction

import numpy as np

from ..algorithms.commutation import commutation_sign, predicted_probability
from ..algorithms.families import FamilyId, classify, expand_memberships, random_member
from ..channels.bases import preset_basis, preset_params
from ..channels.states import chi_state
from ..data.common import BasisCase, SchemeName
from ..exceptions import ProtocolError, QutritError
from ..protocols.resources import channel_summary, necessary_operations, verify_branch_messages
from ..protocols.scheme1 import run_scheme1
from ..protocols.scheme2 import run_scheme2
from ..utils.linalg import random_amplitudes, random_generic_unitary

# Denominators of the uniform branch probabilities of S1 and S2.
EXACT_DENOMINATORS = (243, 81)

DIGITS = 12


class TableRow(object):
    """ This class stores one row of the scheme comparison table and its expected values.

        Attributes:
            basis (str): The preset basis for S2 rows, None for S1.
            eta (Fraction): The expected efficiency.
            family (str): The family the operation is drawn from, None for an arbitrary operation.
            operations (str): The expected operation summary.
            p (Fraction): The expected success probability.
            q_t, c_t (int): The expected quantum and classical resources.
            qrc (str): The expected channel summary.
            scheme (str): The scheme, taken from SchemeName.
    """

    def __init__(self, scheme, family, basis, p, eta):
        self.scheme = scheme
        self.family = family
        self.basis = basis
        self.p = Fraction(p)
        self.eta = Fraction(eta)
        if scheme == SchemeName.S1:
            self.qrc, self.operations, self.q_t, self.c_t = "GB, GG", "2 GMs, SM, 2 SOs", 5, 5
        else:
            self.qrc, self.operations, self.q_t, self.c_t = "2 GBs", "V, GM, 2 SMs, 3 SOs", 4, 4

    @property
    def operation_label(self):
        if self.family is None:
            return "arbitrary"
        return "%s (%s)" % (FamilyId.display(self.family), self.basis)


TABLE_ROWS = [
    TableRow(SchemeName.S1, None, None, 1, Fraction(1, 10)),
    TableRow(SchemeName.S2, None, BasisCase.C1, Fraction(1, 3), Fraction(1, 24)),
    TableRow(SchemeName.S2, FamilyId.U34_MINUS_12, BasisCase.C1, Fraction(2, 3), Fraction(1, 12)),
    TableRow(SchemeName.S2, FamilyId.U67_MINUS_15, BasisCase.C2, Fraction(2, 3), Fraction(1, 12)),
    TableRow(SchemeName.S2, FamilyId.U910_MINUS_18, BasisCase.C3, Fraction(2, 3), Fraction(1, 12)),
    TableRow(SchemeName.S2, FamilyId.U12, BasisCase.C1, 1, Fraction(1, 8)),
    TableRow(SchemeName.S2, FamilyId.U15, BasisCase.C2, 1, Fraction(1, 8)),
    TableRow(SchemeName.S2, FamilyId.U18, BasisCase.C3, 1, Fraction(1, 8)),
]


def probability_text(value, denominators=EXACT_DENOMINATORS, tolerance=1e-9):
    """ Format a probability as an exact fraction with one of the denominators, else as a decimal. """
    for denominator in denominators:
        numerator = int(round(value * denominator))
        if abs(value - float(numerator) / denominator) <= tolerance:
            return str(Fraction(numerator, denominator))
    return "%.*f" % (DIGITS, value)


def complex_pair(z):
    return [round(float(np.real(z)), DIGITS) + 0.0, round(float(np.imag(z)), DIGITS) + 0.0]


def matrix_document(m):
    return [[complex_pair(z) for z in row] for row in np.asarray(m)]


def vector_document(v):
    return [complex_pair(z) for z in np.asarray(v).reshape(-1)]


class Runner(object):
    """ This class runs the commands of the front end.

        Attributes:
            parameters (SimulationParameters): The runtime settings.
    """

    def __init__(self, parameters):
        self.parameters = parameters
        self._logger = logging.getLogger(__name__)

    def run(self, cfg):
        """ Run the command of a RunConfig and return (exit status, document). """
        commands = {"simulate": self.simulate, "classify": self.classify, "table1": self.table1,
                    "bases": self.bases}
        if cfg.command not in commands:
            raise ProtocolError("unknown command '%s'" % cfg.command)
        if cfg.command in ("table1", "bases"):
            return commands[cfg.command](cfg.rng)
        return commands[cfg.command](cfg)

    def enumerate(self, scheme, u, chi, basis=None, declared=None):
        tolerance = self.parameters.tolerance
        if scheme == SchemeName.S1:
            return run_scheme1(u, chi, tolerance)
        return run_scheme2(u, chi, basis, declared, tolerance)

    def simulate(self, cfg):
        """ Enumerate a scheme and report every branch. Exit status 0 iff the invariants hold. """
        e = self.enumerate(cfg.scheme, cfg.u, cfg.chi, cfg.basis, cfg.declared)
        problems = []
        try:
            e.check_invariants(self.parameters.tolerance)
            report = verify_branch_messages(e)
            operations = necessary_operations(e)
        except ProtocolError as error:
            problems.append(str(error))
            report, operations = None, None
        if cfg.scheme == SchemeName.S1 and any(not b.oracle_success for b in e.branches):
            problems.append("S1 failed to reconstruct U|chi> in some branches")
        unsupported = e.unsupported_claims
        if unsupported:
            self._logger.warning("%d branches are declared successful but do not reproduce U|chi>" %
                                 len(unsupported))
        for problem in problems:
            self._logger.error(problem)

        doc = OrderedDict()
        doc["command"] = "simulate"
        doc["scheme"] = cfg.scheme
        doc["seed"] = self.parameters.seed
        doc["u"] = OrderedDict([("spec", cfg.u_spec), ("name", cfg.u.name), ("matrix", matrix_document(cfg.u.matrix))])
        doc["chi"] = OrderedDict([("spec", cfg.chi_spec), ("amplitudes", vector_document(cfg.chi.amps))])
        doc["basis"] = e.basis_name
        doc["declared"] = cfg.declared
        doc["branch_count"] = len(e)
        doc["total_probability"] = probability_text(e.total_probability, (1,))
        doc["nominal_success_probability"] = str(e.nominal_success_probability)
        doc["success_probability"] = probability_text(e.success_probability)
        fidelities = [b.fidelity for b in e.branches if b.protocol_success and not b.is_null]
        doc["min_success_fidelity"] = round(min(fidelities), DIGITS) if fidelities else None
        doc["unsupported_claims"] = len(unsupported)
        if report is not None:
            doc["resources"] = OrderedDict([
                ("QRC", channel_summary(e.channels)),
                ("NO", operations),
                ("Q_t", report.q_t),
                ("C_t", report.c_t),
                ("P", str(report.p)),
                ("eta", str(report.eta)),
            ])
        doc["branches"] = [self._branch_document(b) for b in e.branches]
        if cfg.sample:
            doc["samples"] = self._sample(e, cfg.sample, cfg.rng)
        doc["problems"] = problems
        doc["status"] = "FAIL" if problems else "OK"
        self._logger.info("%s: %d branches, nominal P = %s, exact P = %s" %
                          (cfg.scheme, len(e), doc["nominal_success_probability"], doc["success_probability"]))
        return (1 if problems else 0), doc

    def _branch_document(self, b):
        doc = OrderedDict()
        doc["path"] = [OrderedDict([("measurement", mid), ("outcome", label)]) for mid, _, label in b.outcome_path]
        doc["probability"] = probability_text(b.probability)
        doc["messages"] = [m.to_dict() for m in b.messages]
        doc["protocol_success"] = b.protocol_success
        doc["oracle_success"] = b.oracle_success
        doc["fidelity"] = round(b.fidelity, DIGITS)
        return doc

    def _sample(self, e, count, rng):
        """ Draw branches by their exact probabilities; for demonstration traces only. """
        probabilities = np.array([b.probability for b in e.branches])
        picks = rng.choice(len(e.branches), size=count, p=probabilities / probabilities.sum())
        samples = []
        for index in picks:
            b = e.branches[int(index)]
            samples.append(OrderedDict([
                ("branch", int(index)),
                ("path", b.path_label),
                ("trace", [repr(step) for step in b.trace]),
                ("messages", [repr(m) for m in b.messages]),
                ("oracle_success", b.oracle_success),
            ]))
        return samples

    def classify(self, cfg):
        """ Report family memberships, commutation signs with every preset W and predicted P. """
        u = cfg.u
        members = expand_memberships(classify(u, self.parameters.tolerance))
        doc = OrderedDict()
        doc["command"] = "classify"
        doc["u"] = OrderedDict([("spec", cfg.u_spec), ("name", u.name), ("matrix", matrix_document(u.matrix)),
                                ("unitarity_residual", float("%.3e" % u.unitarity_residual()))])
        doc["memberships"] = members
        signs = OrderedDict()
        predicted = OrderedDict()
        for case_id in BasisCase.names:
            _, w_operators = preset_basis(case_id)
            signs[case_id] = OrderedDict()
            for w in w_operators:
                sign = commutation_sign(u, w, self.parameters.tolerance)
                signs[case_id][w.name] = sign.sign
            predicted[case_id] = str(predicted_probability(members, case_id))
        doc["commutation"] = signs
        doc["predicted_probability"] = predicted
        return 0, doc

    def table1(self, rng):
        """ Recompute every row of the scheme comparison table and compare with the expected values. """
        rows = []
        status = 0
        for row in TABLE_ROWS:
            if row.family is None:
                u = random_generic_unitary(rng)
            else:
                u = random_member(rng, row.family)
            chi = chi_state(random_amplitudes(rng))
            e = self.enumerate(row.scheme, u, chi, row.basis, row.family)
            checks = OrderedDict()
            try:
                e.check_invariants(self.parameters.tolerance)
                report = verify_branch_messages(e)
                operations = necessary_operations(e)
            except QutritError as error:
                self._logger.error("%s %s: %s" % (row.scheme, row.operation_label, error))
                rows.append(OrderedDict([("scheme", row.scheme), ("operation", row.operation_label),
                                         ("status", "FAIL")]))
                status = 1
                continue
            qrc = channel_summary(e.channels)
            checks["QRC"] = qrc == row.qrc
            checks["NO"] = operations == row.operations
            checks["Q_t"] = report.q_t == row.q_t
            checks["C_t"] = report.c_t == row.c_t
            checks["P"] = report.p == row.p
            checks["eta"] = report.eta == row.eta
            if row.scheme == SchemeName.S2:
                families = [row.family] if row.family else []
                checks["predicted"] = predicted_probability(families, row.basis) == report.p
            passed = all(checks.values())
            if not passed:
                status = 1
                self._logger.error("%s %s failed checks %s" %
                                   (row.scheme, row.operation_label, [k for k, v in checks.items() if not v]))
            rows.append(OrderedDict([
                ("scheme", row.scheme),
                ("operation", row.operation_label),
                ("QRC", qrc),
                ("NO", operations),
                ("CRC", "%d ctrits" % report.c_t),
                ("Q_t", report.q_t),
                ("C_t", report.c_t),
                ("P", str(report.p)),
                ("eta", str(report.eta)),
                ("expected_P", str(row.p)),
                ("expected_eta", str(row.eta)),
                ("exact_P", probability_text(e.success_probability)),
                ("status", "PASS" if passed else "FAIL"),
            ]))
        doc = OrderedDict([("command", "table1"), ("seed", self.parameters.seed), ("rows", rows),
                           ("status", "PASS" if status == 0 else "FAIL")])
        return status, doc

    def bases(self, rng=None):
        """ Report every preset xi basis with its W operators. """
        cases = []
        for case_id in BasisCase.names:
            basis, w_operators = preset_basis(case_id)
            p = preset_params(case_id)
            case = OrderedDict()
            case["case"] = case_id
            case["x1"] = complex_pair(p.x1)
            case["y1"] = complex_pair(p.y1)
            case["completed_by_cross_product"] = p.is_degenerate
            case["vectors"] = OrderedDict((label, vector_document(basis[i]))
                                          for i, label in enumerate(basis.outcome_labels))
            case["orthonormality_residual"] = float("%.3e" % basis.orthonormality_residual())
            case["W"] = OrderedDict()
            for w in w_operators:
                case["W"][w.name] = OrderedDict([
                    ("diagonal", vector_document(np.diag(w.matrix))),
                    ("scaled_unitary", w.is_scaled_unitary(self.parameters.tolerance)),
                ])
            cases.append(case)
        return 0, OrderedDict([("command", "bases"), ("cases", cases)])
