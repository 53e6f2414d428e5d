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
This module is used to store the numerical parameters of a simulation.
"""
import os

from ..exceptions import ConfigError

QUTRIT_DIM = 3

# Entrywise tolerance for unitarity, orthonormality, normalization and fidelity checks.
TOLERANCE = 1e-9

# Outcomes with a smaller Born probability are listed but flagged as null.
NULL_PROBABILITY = 1e-12

# The generic-unitary sampler rejects matrices with an entry modulus below this floor.
GENERIC_ENTRY_FLOOR = 0.05

DEFAULT_SEED = 0

SEED_ENVIRONMENT_VARIABLE = "QOS3_SEED"


class OutputFormat:
    """ Report formats written by the command-line front end. """
    HUMAN = "human"
    STRUCTURED = "structured"
    names = [HUMAN, STRUCTURED]


class SimulationParameters(object):
    """ This class stores the runtime settings of a simulation run.

        Attributes:
            null_probability (float): Probability below which a measurement outcome is flagged as null.
            output_format (str): One of OutputFormat.names.
            seed (int): Seed for every random draw made during the run.
            tolerance (float): Entrywise tolerance used by all numerical checks.
    """

    def __init__(self, seed=None):
        self.tolerance = TOLERANCE
        self.null_probability = NULL_PROBABILITY
        self.output_format = OutputFormat.HUMAN
        self.seed = resolve_seed(seed)


def resolve_seed(seed=None, environ=None):
    """ Resolve the seed of a run.

        Arguments:
            seed (int, optional): An explicit seed, e.g. from the --seed flag.
            environ (Mapping, optional): Environment to read QOS3_SEED from, defaults to os.environ.

        The explicit seed wins, then the QOS3_SEED environment variable, then DEFAULT_SEED.
    """
    if seed is None:
        if environ is None:
            environ = os.environ
        value = environ.get(SEED_ENVIRONMENT_VARIABLE)
        if value is None or value.strip() == "":
            return DEFAULT_SEED
        try:
            seed = int(value)
        except ValueError:
            raise ConfigError("%s must be an integer, got '%s'" % (SEED_ENVIRONMENT_VARIABLE, value))
    seed = int(seed)
    if seed < 0 or seed >= 2**64:
        raise ConfigError("seed must be a 64-bit unsigned integer, got %d" % seed)
    return seed
