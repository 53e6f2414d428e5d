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
This module is used to generate and recognize the restricted single-qutrit operation families.

Ten base families are defined by their matrix forms. Each is a zero pattern intersected with the
unitary group:

    U1   diagonal phases                          U2   |0><0| phase, anti-diagonal {1,2} block
    U3   |0><0| phase, {1,2} block, det-like form U4   |0><0| phase, {1,2} block, reflected form
    U5   |1><1| phase, anti-diagonal {0,2} block  U6   |1><1| phase, {0,2} block, det-like form
    U7   |1><1| phase, {0,2} block, reflected     U8   |2><2| phase, anti-diagonal {0,1} block
    U9   |2><2| phase, {0,1} block, det-like form U10  |2><2| phase, {0,1} block, reflected

The unions U12, U34, U15, U67, U18, U910 and the differences U34minus12, U67minus15,
U910minus18 resolve to these base families.

Membership is decided structurally: the zero pattern must hold within the tolerance, the single
isolated entry must have modulus 1 and the 2x2 block must satisfy the sign and conjugation
relations of its form. Every family is closed under global phase, so membership up to global
phase and exact membership coincide.
"""
import logging
import numpy as np

from ..data.operator import Unitary
from ..data.parameters import TOLERANCE
from ..exceptions import FamilyError

_logger = logging.getLogger(__name__)


class FamilyId(object):
    """ Names of the restricted families, their unions and their differences. """
    U1 = "U1"
    U2 = "U2"
    U3 = "U3"
    U4 = "U4"
    U5 = "U5"
    U6 = "U6"
    U7 = "U7"
    U8 = "U8"
    U9 = "U9"
    U10 = "U10"
    base_names = [U1, U2, U3, U4, U5, U6, U7, U8, U9, U10]

    U12 = "U12"
    U34 = "U34"
    U15 = "U15"
    U67 = "U67"
    U18 = "U18"
    U910 = "U910"
    U34_MINUS_12 = "U34minus12"
    U67_MINUS_15 = "U67minus15"
    U910_MINUS_18 = "U910minus18"

    constituents = {
        U12: [U1, U2],
        U34: [U3, U4],
        U15: [U1, U5],
        U67: [U6, U7],
        U18: [U1, U8],
        U910: [U9, U10],
        U34_MINUS_12: [U3, U4],
        U67_MINUS_15: [U6, U7],
        U910_MINUS_18: [U9, U10],
    }

    excluded = {
        U34_MINUS_12: [U1, U2],
        U67_MINUS_15: [U1, U5],
        U910_MINUS_18: [U1, U8],
    }

    names = base_names + [U12, U34, U15, U67, U18, U910, U34_MINUS_12, U67_MINUS_15, U910_MINUS_18]

    @staticmethod
    def lookup(name):
        """ Case-insensitive lookup accepting "u34minus12", "U34\\12" and "u34-12"; None if unknown. """
        key = str(name).strip().lower().replace("\\", "minus").replace("-", "minus")
        for family in FamilyId.names:
            if family.lower() == key:
                return family
        return None

    @staticmethod
    def resolve(family):
        """ Return the base families a family id stands for. """
        if family in FamilyId.base_names:
            return [family]
        if family in FamilyId.constituents:
            return list(FamilyId.constituents[family])
        raise FamilyError("unknown family '%s'" % (family,))

    @staticmethod
    def display(family):
        """ Display name, e.g. "U^(34\\12)" for U34minus12. """
        return "U^(%s)" % family[1:].replace("minus", "\\")


PARAM_COUNTS = {
    FamilyId.U1: 3, FamilyId.U2: 3, FamilyId.U5: 3, FamilyId.U8: 3,
    FamilyId.U3: 5, FamilyId.U4: 5, FamilyId.U6: 5, FamilyId.U7: 5, FamilyId.U9: 5, FamilyId.U10: 5,
}

# Block families: (isolated level, block levels, reflected form).
BLOCK_FAMILIES = {
    FamilyId.U3: (0, (1, 2), False),
    FamilyId.U4: (0, (1, 2), True),
    FamilyId.U6: (1, (0, 2), False),
    FamilyId.U7: (1, (0, 2), True),
    FamilyId.U9: (2, (0, 1), False),
    FamilyId.U10: (2, (0, 1), True),
}

# Anti-diagonal families: the isolated level and the two swapped levels.
SWAP_FAMILIES = {
    FamilyId.U2: (0, (1, 2)),
    FamilyId.U5: (1, (0, 2)),
    FamilyId.U8: (2, (0, 1)),
}


class FamilyParams(object):
    """ This class stores the mu angles of a family member.

        Attributes:
            family (str): The base family, taken from FamilyId.
            mu (List[float]): The angles in radians, in the order they are numbered in the matrix forms.
    """

    def __init__(self, family, mu):
        if family not in PARAM_COUNTS:
            raise FamilyError("'%s' is not a base family" % (family,))
        mu = [float(angle) for angle in mu]
        if len(mu) != PARAM_COUNTS[family]:
            raise FamilyError("%s takes %d angles, got %d" % (family, PARAM_COUNTS[family], len(mu)))
        self.family = family
        self.mu = mu

    def __repr__(self):
        return "FamilyParams(%s, %s)" % (self.family, self.mu)


def _block(mu, reflected):
    """ The 2x2 block of the five-angle forms; mu = (mu_2, mu_3, mu_4, mu_5). """
    m2, m3, m4, m5 = mu
    c, s = np.cos(m5), np.sin(m5)
    top = [c * np.exp(1j * (m2 + m4)), s * np.exp(1j * (m3 + m4))]
    if reflected:
        bottom = [s * np.exp(-1j * (m3 - m4)), -c * np.exp(-1j * (m2 - m4))]
    else:
        bottom = [-s * np.exp(-1j * (m3 - m4)), c * np.exp(-1j * (m2 - m4))]
    return np.array([top, bottom], dtype=complex)


def sample_family(p, mu=None):
    """ Return the member of a base family given by its mu angles.

        Arguments:
            p (FamilyParams or str): The parameters, or a base family id together with mu.
            mu (List[float]): The angles when p is a family id.
    """
    if not isinstance(p, FamilyParams):
        p = FamilyParams(p, mu)
    family, mu = p.family, p.mu
    m = np.zeros((3, 3), dtype=complex)
    if family == FamilyId.U1:
        m[np.diag_indices(3)] = np.exp(1j * np.array(mu))
    elif family in SWAP_FAMILIES:
        level, (i, j) = SWAP_FAMILIES[family]
        # Angles follow the rows of the form.
        entries = {level: (level, level), i: (i, j), j: (j, i)}
        for angle, row in zip(mu, sorted(entries)):
            m[entries[row]] = np.exp(1j * angle)
    else:
        level, (i, j), reflected = BLOCK_FAMILIES[family]
        m[level, level] = np.exp(1j * mu[0])
        block = _block(mu[1:], reflected)
        m[np.ix_([i, j], [i, j])] = block
    return Unitary(m, "%s%s" % (family, tuple(round(angle, 6) for angle in mu)))


def random_family_params(rng, family):
    """ Sample uniform angles in [0, 2 pi) for a base family. """
    if family not in PARAM_COUNTS:
        raise FamilyError("'%s' is not a base family" % (family,))
    return FamilyParams(family, rng.uniform(0.0, 2.0 * np.pi, PARAM_COUNTS[family]))


def random_member(rng, family, max_draws=1000):
    """ Sample a member of any family id.

        A union picks one of its constituents uniformly. A difference additionally rejects draws
        that classify into one of its excluded families.
    """
    bases = FamilyId.resolve(family)
    excluded = set(FamilyId.excluded.get(family, []))
    for _ in range(max_draws):
        base = bases[rng.integers(len(bases))]
        u = sample_family(random_family_params(rng, base))
        if not excluded or not excluded & classify(u):
            return u
    raise FamilyError("no member of %s found in %d draws" % (family, max_draws))


def _isolated(m, level, tolerance):
    """ True if the row and column of level are zero apart from a unit-modulus diagonal entry. """
    others = [k for k in range(3) if k != level]
    if np.any(np.abs(m[level, others]) > tolerance) or np.any(np.abs(m[others, level]) > tolerance):
        return False
    return abs(abs(m[level, level]) - 1.0) <= tolerance


def _block_relation(b, reflected, tolerance):
    """ Check the relations between the entries of a 2x2 block form.

        The det-like form has b11 = k conj(b00) and b10 = -k conj(b01); the reflected form has
        b11 = -k conj(b00) and b10 = k conj(b01); in both |k| = 1.
    """
    sign = -1.0 if reflected else 1.0
    if max(abs(b[0, 0]), abs(b[0, 1])) <= tolerance:
        return False
    if abs(b[0, 0]) > abs(b[0, 1]):
        k = sign * b[1, 1] / np.conj(b[0, 0])
    else:
        k = -sign * b[1, 0] / np.conj(b[0, 1])
    if abs(abs(k) - 1.0) > tolerance:
        return False
    if abs(b[1, 1] - sign * k * np.conj(b[0, 0])) > tolerance:
        return False
    if abs(b[1, 0] + sign * k * np.conj(b[0, 1])) > tolerance:
        return False
    return abs(abs(b[0, 0]) ** 2 + abs(b[0, 1]) ** 2 - 1.0) <= tolerance


def is_member(u, family, tolerance=TOLERANCE):
    """ Return True if u belongs to the given family id, computed structurally. """
    m = u.matrix if isinstance(u, Unitary) else np.asarray(u, dtype=complex)
    if family in FamilyId.constituents:
        inside = any(is_member(m, base, tolerance) for base in FamilyId.constituents[family])
        outside = any(is_member(m, base, tolerance) for base in FamilyId.excluded.get(family, []))
        return inside and not outside
    if family == FamilyId.U1:
        return all(_isolated(m, level, tolerance) for level in range(3))
    if family in SWAP_FAMILIES:
        level, (i, j) = SWAP_FAMILIES[family]
        if not _isolated(m, level, tolerance):
            return False
        if abs(m[i, i]) > tolerance or abs(m[j, j]) > tolerance:
            return False
        return abs(abs(m[i, j]) - 1.0) <= tolerance and abs(abs(m[j, i]) - 1.0) <= tolerance
    if family in BLOCK_FAMILIES:
        level, (i, j), reflected = BLOCK_FAMILIES[family]
        if not _isolated(m, level, tolerance):
            return False
        return _block_relation(m[np.ix_([i, j], [i, j])], reflected, tolerance)
    raise FamilyError("unknown family '%s'" % (family,))


def classify(u, tolerance=TOLERANCE):
    """ Return the set of base families containing u.

        The det-like and reflected block forms both cover every unitary 2x2 block, so U3 and U4
        (likewise U6/U7 and U9/U10) always appear together.
    """
    members = set(family for family in FamilyId.base_names if is_member(u, family, tolerance))
    _logger.debug("classified %s as %s", getattr(u, "name", None), sorted(members, key=FamilyId.names.index))
    return members


def expand_memberships(base_members):
    """ Return every family id, unions and differences included, implied by a set of base families. """
    expanded = set(base_members)
    for family, bases in FamilyId.constituents.items():
        if set(bases) & base_members and not set(FamilyId.excluded.get(family, [])) & base_members:
            expanded.add(family)
    return [family for family in FamilyId.names if family in expanded]


def frozen_level_block(u, level, tolerance=TOLERANCE):
    """ Return the 2x2 block left on the two other levels when u leaves a level invariant.

        For members of U12, U15 and U18 with the isolated level frozen the block is diagonal or
        anti-diagonal, i.e. a qubit phase or swap-phase operation.

        Raises FamilyError if the level is coupled to the others.
    """
    m = u.matrix if isinstance(u, Unitary) else np.asarray(u, dtype=complex)
    if level not in (0, 1, 2):
        raise FamilyError("level out of range: %r" % (level,))
    if not _isolated(m, level, tolerance):
        raise FamilyError("level %d is not invariant under %s" % (level, getattr(u, "name", "u")))
    others = [k for k in range(3) if k != level]
    return m[np.ix_(others, others)].copy()
