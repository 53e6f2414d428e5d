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
This module is used for random sampling and small dense linear algebra on qutrit operators.

Every sampler takes a numpy Generator so runs are reproducible from a seed.
"""
import numpy as np

from ..data.operator import Unitary
from ..data.parameters import GENERIC_ENTRY_FLOOR, QUTRIT_DIM

OMEGA = complex(np.cos(2.0 * np.pi / 3.0), np.sin(2.0 * np.pi / 3.0))

MAX_REJECTIONS = 10000


def omega_power(k):
    """ Return omega^k for omega = exp(2 pi i / 3), computed from cosine and sine. """
    angle = 2.0 * np.pi * (k % 3) / 3.0
    return complex(np.cos(angle), np.sin(angle))


def random_unitary(rng, dim=QUTRIT_DIM, name=None):
    """ Sample a Haar-random unitary.

        The QR decomposition of a complex Ginibre matrix is made unique by forcing the diagonal
        of R to be positive, which gives the Haar measure.
    """
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    q = q * (d / np.abs(d))
    return Unitary(q, name)


def random_generic_unitary(rng, floor=GENERIC_ENTRY_FLOOR, name="U"):
    """ Sample a random unitary whose entries all have modulus at least floor.

        Such a matrix has no zero pattern, so it lies far from every restricted family.
    """
    for _ in range(MAX_REJECTIONS):
        u = random_unitary(rng, QUTRIT_DIM, name)
        if np.min(np.abs(u.matrix)) >= floor:
            return u
    raise RuntimeError("generic unitary sampler exhausted %d draws" % MAX_REJECTIONS)


def random_amplitudes(rng, dim=QUTRIT_DIM):
    """ Sample a normalized complex vector uniformly from the unit sphere. """
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)
