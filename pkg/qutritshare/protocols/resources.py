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
This module is used to account for the resources a scheme consumes.

Q_t counts the qutrits of the entangled channels shared before a run, C_t the classical trits
transmitted in one run (a broadcast counts once) and eta = P / (Q_t + C_t) the intrinsic
efficiency. All quantities are exact rationals.
"""
import logging
from collections import OrderedDict
from fractions import Fraction

from ..data.common import ChannelName, OperationKind, SchemeName
from ..exceptions import ProtocolError

_logger = logging.getLogger(__name__)

SCHEME_CHANNELS = {
    SchemeName.S1: [ChannelName.BELL, ChannelName.GHZ],
    SchemeName.S2: [ChannelName.BELL, ChannelName.BELL],
}

SCHEME_CLASSICAL_TRITS = {
    SchemeName.S1: 5,
    SchemeName.S2: 4,
}

PROBABILITY_CLASSES = {
    SchemeName.S1: [Fraction(1)],
    SchemeName.S2: [Fraction(1, 3), Fraction(2, 3), Fraction(1)],
}


class ResourceReport(object):
    """ This class stores the resource accounting of a scheme.

        Attributes:
            c_t (int): Classical trits transmitted.
            channels (List[str]): The entangled channels, taken from ChannelName.
            eta (Fraction): The intrinsic efficiency P / (Q_t + C_t).
            p (Fraction): The success probability.
            q_t (int): Qutrits in the shared channels.
            scheme (str): The scheme, taken from SchemeName.
    """

    def __init__(self, scheme, q_t, c_t, p, channels=None):
        self.scheme = scheme
        self.q_t = q_t
        self.c_t = c_t
        self.p = Fraction(p)
        self.eta = self.p / (q_t + c_t)
        self.channels = list(channels or [])

    def __eq__(self, other):
        return (isinstance(other, ResourceReport) and
                (self.scheme, self.q_t, self.c_t, self.p) == (other.scheme, other.q_t, other.c_t, other.p))

    def __repr__(self):
        return "ResourceReport(%s, Q_t=%d, C_t=%d, P=%s, eta=%s)" % (self.scheme, self.q_t, self.c_t,
                                                                    self.p, self.eta)


def channel_qutrits(channels):
    return sum(ChannelName.qutrit_counts[channel] for channel in channels)


def resources(scheme, probability_class):
    """ Return the resource report of a scheme for a success-probability class.

        Arguments:
            scheme (str): S1 or S2.
            probability_class (Fraction): 1 for S1; 1/3, 2/3 or 1 for S2.

        Raises ProtocolError for an unknown scheme or a class the scheme does not admit.
    """
    if scheme not in SCHEME_CHANNELS:
        raise ProtocolError("unknown scheme '%s'" % (scheme,))
    p = Fraction(probability_class)
    if p not in PROBABILITY_CLASSES[scheme]:
        raise ProtocolError("%s does not admit success probability %s" % (scheme, p))
    channels = SCHEME_CHANNELS[scheme]
    return ResourceReport(scheme, channel_qutrits(channels), SCHEME_CLASSICAL_TRITS[scheme], p, channels)


def verify_branch_messages(e):
    """ Count the resources an enumeration actually used and check them against resources().

        The trits sent must be the same in every branch. P is the nominal success probability.

        Raises ProtocolError for an empty enumeration, non-uniform message counts or a mismatch.
    """
    if not e.branches:
        raise ProtocolError("enumeration has no branches")
    counts = set(branch.message_trits for branch in e.branches)
    if len(counts) != 1:
        raise ProtocolError("branches send different numbers of trits: %s" % sorted(counts))
    measured = ResourceReport(e.scheme, channel_qutrits(e.channels), counts.pop(),
                              e.nominal_success_probability, e.channels)
    expected = resources(e.scheme, measured.p)
    if measured != expected:
        raise ProtocolError("measured %r, expected %r" % (measured, expected))
    _logger.debug("verified %r", measured)
    return measured


def _count_label(count, name):
    if count == 1:
        return name
    return "%d %ss" % (count, name)


def summarize_operations(trace):
    """ Summarize a branch trace as counts of V gates, Bell measurements, single measurements and operations.

        Consecutive single-qutrit operations one party performs on the same qutrit count once,
        the shared operation U itself is not counted.
    """
    counts = OrderedDict((kind, 0) for kind in [OperationKind.V, OperationKind.GBM, OperationKind.SM,
                                                 OperationKind.SO])
    previous = {}
    for step in trace:
        if step.kind == OperationKind.TARGET:
            continue
        last = previous.get(step.party)
        previous[step.party] = step
        if (step.kind == OperationKind.SO and last is not None and last.kind == OperationKind.SO and
                last.labels == step.labels):
            continue
        counts[step.kind] += 1
    return ", ".join(_count_label(count, kind) for kind, count in counts.items() if count)


def necessary_operations(e):
    """ Return the operation summary of an enumeration; it must be the same in every branch. """
    if not e.branches:
        raise ProtocolError("enumeration has no branches")
    summaries = set(summarize_operations(branch.trace) for branch in e.branches)
    if len(summaries) != 1:
        raise ProtocolError("branches perform different operations: %s" % sorted(summaries))
    return summaries.pop()


def channel_summary(channels):
    """ Summarize the shared channels, e.g. "GB, GG" or "2 GBs". """
    counts = OrderedDict()
    for channel in channels:
        counts[channel] = counts.get(channel, 0) + 1
    return ", ".join(_count_label(count, channel) for channel, count in counts.items())
