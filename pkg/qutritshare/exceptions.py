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
Exceptions raised by the qutritshare package.

Library code raises these; the command-line front end catches QutritError, logs it and
exits with a nonzero status.
"""


class QutritError(Exception):
    """Base class of every error raised by qutritshare."""


class LabelCollisionError(QutritError):
    """Two registers share a qutrit label, or a label list repeats a name."""


class DimensionMismatchError(QutritError):
    """An operator, basis or state does not have the dimension its use requires."""


class NormalizationError(QutritError):
    """A state vector does not have unit norm, or holds non-finite amplitudes."""


class NonUnitaryError(QutritError):
    """A matrix used as a unitary fails U^dagger U = I.

    Attributes:
        residual (float): The largest entrywise deviation of U^dagger U from the identity.
    """

    def __init__(self, message, residual=None):
        super(NonUnitaryError, self).__init__(message)
        self.residual = residual


class BasisError(QutritError):
    """A measurement basis is not orthonormal or not complete."""


class BasisParameterError(BasisError):
    """The (x1, y1) parameters of a xi basis violate their constraint."""


class SingularBasisError(BasisError):
    """The completion formula for the third xi vector degenerates (N = 0)."""


class FamilyError(QutritError):
    """Unknown family id or a parameter list of the wrong length."""


class ProtocolError(QutritError):
    """A protocol run broke one of its own invariants (locality, message counts, probabilities)."""


class ConfigError(QutritError):
    """A run configuration could not be parsed or is inconsistent."""
