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
This module is used to turn command-line arguments into a run configuration.

The operation, state and basis are given in small text formats:

    --u        random | family:<id>[:mu1,mu2,...] | nine comma-separated "re+imi" tokens, row-major
    --chi      random | three comma-separated "re+imi" tokens (alpha, beta, gamma)
    --basis    c1 | c2 | c3 | c4a | c4b | xy:<x1>,<y1>[,<tau1>,<tau2>]
    --declared none | a family id such as u12 or u34minus12

Random draws are made from one numpy Generator seeded with the run seed, operation first.
"""
import logging
import re

import numpy as np

from ..algorithms.families import FamilyId, random_member, sample_family
from ..channels.bases import BasisParams
from ..channels.states import chi_state
from ..data.common import BasisCase, SchemeName
from ..data.operator import Unitary
from ..data.parameters import OutputFormat, SimulationParameters
from ..exceptions import ConfigError
from ..utils.linalg import random_amplitudes, random_generic_unitary

RANDOM = "random"

_COMPLEX_UNIT = re.compile(r"(^|[+-])i$")

_logger = logging.getLogger(__name__)


class RunConfig(object):
    """ This class stores the configuration of one command.

        Attributes:
            basis (str or BasisParams): Preset case id or free xi parameters, S2 only.
            basis_spec (str): The basis as given on the command line.
            chi (StateVector): The state to be operated on.
            chi_spec (str): The state as given on the command line.
            command (str): The subcommand.
            declared (str): The family id known to contain U, or None.
            parameters (SimulationParameters): Seed, tolerance and output format.
            rng (numpy Generator): The generator seeded with parameters.seed.
            sample (int): Number of branches to draw in sampling mode, 0 for none.
            scheme (str): The scheme, taken from SchemeName.
            u (Unitary): The shared operation.
            u_spec (str): The operation as given on the command line.
    """

    def __init__(self, command, parameters):
        self.command = command
        self.parameters = parameters
        self.rng = np.random.default_rng(parameters.seed)
        self.scheme = None
        self.u_spec = None
        self.u = None
        self.chi_spec = None
        self.chi = None
        self.basis_spec = None
        self.basis = None
        self.declared = None
        self.sample = 0


def parse_complex(token):
    """ Parse a complex number written as "re+imi", e.g. "0.5", "-0.2i", "0.6-0.8i" or "i". """
    text = token.strip().replace(" ", "")
    text = _COMPLEX_UNIT.sub(lambda m: m.group(1) + "1i", text)
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise ConfigError("cannot parse complex number '%s'" % token)


def parse_complex_list(text, count, what):
    tokens = [t for t in text.split(",") if t.strip()]
    if len(tokens) != count:
        raise ConfigError("%s needs %d comma-separated values, got %d" % (what, count, len(tokens)))
    return [parse_complex(t) for t in tokens]


def parse_u(spec, rng):
    """ Return the Unitary described by a --u value. """
    spec = spec.strip()
    if spec.lower() == RANDOM:
        return random_generic_unitary(rng)
    if spec.lower().startswith("family:"):
        parts = spec.split(":")
        family = FamilyId.lookup(parts[1]) if len(parts) > 1 else None
        if family is None:
            raise ConfigError("unknown family in '%s'" % spec)
        if len(parts) == 2 or not parts[2].strip():
            return random_member(rng, family)
        if family not in FamilyId.base_names:
            raise ConfigError("angles can only be given for a base family, not %s" % family)
        try:
            mu = [float(angle) for angle in parts[2].split(",")]
        except ValueError:
            raise ConfigError("cannot parse angles in '%s'" % spec)
        return sample_family(family, mu)
    entries = parse_complex_list(spec, 9, "a matrix")
    return Unitary(np.array(entries).reshape(3, 3), "U")


def parse_chi(spec, rng):
    """ Return the state described by a --chi value, on Bob's qutrit b''. """
    spec = spec.strip()
    if spec.lower() == RANDOM:
        return chi_state(random_amplitudes(rng))
    return chi_state(parse_complex_list(spec, 3, "chi"))


def parse_basis(spec):
    """ Return a preset case id or BasisParams for a --basis value. """
    spec = spec.strip()
    case_id = BasisCase.lookup(spec)
    if case_id is not None:
        return case_id
    if spec.lower().startswith("xy:"):
        tokens = [t for t in spec[3:].split(",") if t.strip()]
        if len(tokens) not in (2, 4):
            raise ConfigError("xy basis needs x1,y1 or x1,y1,tau1,tau2, got '%s'" % spec)
        x1, y1 = parse_complex(tokens[0]), parse_complex(tokens[1])
        taus = [float(t) for t in tokens[2:]] if len(tokens) == 4 else [0.0, 0.0]
        return BasisParams(x1, y1, taus[0], taus[1])
    raise ConfigError("unknown basis '%s', expected one of %s or xy:x1,y1" %
                      (spec, ", ".join(c.lower() for c in BasisCase.names)))


def parse_declared(spec):
    """ Return the family id of a --declared value, None for "none". """
    if spec is None or spec.strip().lower() in ("", "none"):
        return None
    family = FamilyId.lookup(spec)
    if family is None:
        raise ConfigError("unknown declared family '%s'" % spec)
    return family


def parse_scheme(spec):
    scheme = str(spec).strip().upper()
    if scheme not in SchemeName.names:
        raise ConfigError("unknown scheme '%s'" % spec)
    return scheme


def config_from_args(args):
    """ Create a RunConfig from an argparse namespace.

        Raises ConfigError if a value cannot be parsed or the options are inconsistent, e.g. a
        basis given for scheme S1.
    """
    parameters = SimulationParameters(getattr(args, "seed", None))
    output = getattr(args, "output", None) or OutputFormat.HUMAN
    if output not in OutputFormat.names:
        raise ConfigError("unknown output format '%s'" % output)
    parameters.output_format = output
    cfg = RunConfig(args.command, parameters)
    _logger.info("Command %s, seed %d" % (cfg.command, parameters.seed))

    if cfg.command == "simulate":
        cfg.scheme = parse_scheme(args.scheme)
        cfg.u_spec = args.u
        cfg.u = parse_u(args.u, cfg.rng)
        cfg.chi_spec = args.chi
        cfg.chi = parse_chi(args.chi, cfg.rng)
        cfg.sample = args.sample or 0
        if cfg.sample < 0:
            raise ConfigError("--sample must not be negative")
        if cfg.scheme == SchemeName.S1:
            if args.basis is not None or args.declared is not None:
                raise ConfigError("--basis and --declared only apply to scheme S2")
        else:
            cfg.basis_spec = args.basis or BasisCase.C1.lower()
            if args.basis is None:
                _logger.info("No basis given, using %s" % BasisCase.C1)
            cfg.basis = parse_basis(cfg.basis_spec)
            cfg.declared = parse_declared(args.declared)
    elif cfg.command == "classify":
        cfg.u_spec = args.u
        cfg.u = parse_u(args.u, cfg.rng)
    return cfg
