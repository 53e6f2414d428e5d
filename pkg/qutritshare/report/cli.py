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
This module is used to run the operation-sharing simulator from the command line.

    qos3 simulate --scheme s1 --u random --chi random --seed 7
    qos3 simulate --scheme s2 --u family:U1:0.3,1.1,2.0 --basis c1 --declared u12
    qos3 classify --u 1,0,0,0,1,0,0,0,1
    qos3 table1
    qos3 bases

The report goes to standard output, log messages to standard error.
"""
import argparse
import logging
import sys

from ..data.parameters import OutputFormat
from ..exceptions import QutritError
from .config import config_from_args
from .runner import Runner
from .writer import ReportWriter

PACKAGE_LOGGER = "qutritshare"

# Exit status for configuration and input errors.
ERROR_STATUS = 2


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("-dbg", "--debug", help="set modules debugging logger, e.g. qutritshare.protocols.scheme2")
    parser.add_argument("-q", "--quiet", action="store_true", help="only log warnings and errors")
    parser.add_argument("--seed", type=int, help="seed for random draws (default: $QOS3_SEED or 0)")
    parser.add_argument("-o", "--output", choices=OutputFormat.names, default=OutputFormat.HUMAN,
                        help="report format: human or structured (JSON)")
    return parser


def parse_args(argv=None):
    """Parse command-line arguments."""
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="qos3", description="Simulate three-party qutrit operation sharing.")
    commands = parser.add_subparsers(dest="command")

    simulate = commands.add_parser("simulate", parents=[common], help="enumerate every branch of a scheme")
    simulate.add_argument("--scheme", required=True, help="scheme: s1 or s2")
    simulate.add_argument("--u", default="random",
                          help="operation: random, family:<id>[:mu1,...] or nine re+imi values")
    simulate.add_argument("--chi", default="random", help="state: random or three re+imi values")
    simulate.add_argument("--basis", help="xi basis for s2: c1, c2, c3, c4a, c4b or xy:x1,y1")
    simulate.add_argument("--declared", help="family known to contain the operation, e.g. u12")
    simulate.add_argument("--sample", type=int, default=0, help="also draw this many branches by probability")

    classify = commands.add_parser("classify", parents=[common], help="classify an operation")
    classify.add_argument("--u", required=True,
                          help="operation: random, family:<id>[:mu1,...] or nine re+imi values")

    commands.add_parser("table1", parents=[common], help="recompute the scheme comparison table")
    commands.add_parser("bases", parents=[common], help="print the preset xi bases and W operators")
    return parser.parse_args(argv), parser.print_help


def set_module_loggers(names):
    for module in names.split(","):
        logging.getLogger(module.strip()).setLevel(logging.DEBUG)


def main(argv=None):
    logger = logging.getLogger("qutritshare.cli")
    args, print_help = parse_args(argv)

    if args.command is None:
        logger.error("No command given.")
        print_help()
        return ERROR_STATUS

    if args.quiet:
        logging.getLogger(PACKAGE_LOGGER).setLevel(logging.WARNING)
    if args.debug:
        set_module_loggers(args.debug)

    try:
        cfg = config_from_args(args)
        runner = Runner(cfg.parameters)
        status, document = runner.run(cfg)
    except QutritError as error:
        residual = getattr(error, "residual", None)
        if residual is not None:
            logger.error("%s (U^dagger U residual %.3e)" % (error, residual))
        else:
            logger.error(str(error))
        return ERROR_STATUS

    ReportWriter(cfg.parameters.output_format).write(document, sys.stdout)
    return status
