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
This module is used to store the parties, messages and branches of a protocol run.

A protocol run is enumerated as a tree of measurement outcomes. Each leaf is a Branch holding the
outcome path, the Born probability of the path, the classical messages exchanged, the trace of
operations performed and the final state of the reconstruction qutrit.
"""
import logging
from fractions import Fraction

from ..data.common import MessageMeaning, OperationKind, PartyName
from ..data.parameters import TOLERANCE
from ..data.state import MeasurementRecord
from ..exceptions import ProtocolError

_logger = logging.getLogger(__name__)


class Party(object):
    """ This class stores a legitimate user and the qutrits it holds.

        Attributes:
            name (str): The party name, taken from PartyName.
            owned_labels (FrozenSet[str]): The labels of the qutrits the party may act on.
    """

    def __init__(self, name, owned_labels):
        if name not in PartyName.names:
            raise ProtocolError("unknown party '%s'" % (name,))
        self.name = name
        self.owned_labels = frozenset(owned_labels)

    def owns(self, labels):
        return set(labels) <= self.owned_labels

    def __repr__(self):
        return "Party(%s, %s)" % (self.name, sorted(self.owned_labels))


def make_parties(ownership):
    """ Create the parties from a {name: labels} map, checking that ownership is disjoint. """
    parties = {}
    seen = set()
    for name in PartyName.names:
        labels = set(ownership.get(name, []))
        if labels & seen:
            raise ProtocolError("qutrits %s are owned by more than one party" % sorted(labels & seen))
        seen |= labels
        parties[name] = Party(name, labels)
    return parties


class ClassicalMessage(object):
    """ This class stores a classical trit message.

        Attributes:
            meaning (str): What the trits encode, taken from MessageMeaning.
            receivers (Tuple[str]): The receiving parties.
            sender (str): The sending party.
            trits (Tuple[int]): The trits; one for a single outcome, two (n, m) for a Bell outcome.

        A message sent to several receivers is one broadcast and is counted once.
    """

    def __init__(self, sender, receivers, trits, meaning):
        if meaning not in MessageMeaning.trit_counts:
            raise ProtocolError("unknown message meaning '%s'" % (meaning,))
        trits = tuple(int(t) for t in trits)
        if len(trits) != MessageMeaning.trit_counts[meaning]:
            raise ProtocolError("a %s message carries %d trits, got %d" %
                                (meaning, MessageMeaning.trit_counts[meaning], len(trits)))
        if any(t not in (0, 1, 2) for t in trits):
            raise ProtocolError("trits out of range: %s" % (trits,))
        self.sender = sender
        self.receivers = tuple(receivers)
        self.trits = trits
        self.meaning = meaning

    def to_dict(self):
        return {"from": self.sender, "to": list(self.receivers), "trits": list(self.trits), "meaning": self.meaning}

    def __repr__(self):
        return "%s->%s:%s" % (self.sender, ",".join(self.receivers), "".join(str(t) for t in self.trits))


class TraceStep(object):
    """ This class stores one operation performed in a branch.

        Attributes:
            kind (str): The kind of operation, taken from OperationKind.
            labels (Tuple[str]): The qutrits acted on.
            name (str): The gate, correction or basis name.
            party (str): The acting party.
    """

    def __init__(self, party, kind, labels, name=None):
        if kind not in OperationKind.names:
            raise ProtocolError("unknown operation kind '%s'" % (kind,))
        self.party = party
        self.kind = kind
        self.labels = tuple(labels)
        self.name = name

    def to_dict(self):
        return {"party": self.party, "kind": self.kind, "qutrits": list(self.labels), "name": self.name}

    def __repr__(self):
        return "%s:%s%s" % (self.party, self.kind, list(self.labels))


class Branch(object):
    """ This class stores one leaf of the outcome tree.

        Attributes:
            fidelity (float): |<final|U chi>|, 0 for a null branch.
            final_state (StateVector): The state of the reconstruction qutrit, None for a null branch.
            messages (List[ClassicalMessage]): Messages in the order they were sent.
            oracle_success (bool): True if the final state equals U|chi> up to global phase.
            outcome_path (List[Tuple[str, int, str]]): (measurement id, outcome index, outcome label) triples.
            probability (float): The Born probability of the outcome path.
            protocol_success (bool): True if the parties' decision rule declares success.
            trace (List[TraceStep]): Operations in the order they were performed.
    """

    def __init__(self, outcome_path, probability, messages, trace, final_state,
                 protocol_success, oracle_success, fidelity=0.0):
        self.outcome_path = list(outcome_path)
        self.probability = probability
        self.messages = list(messages)
        self.trace = list(trace)
        self.final_state = final_state
        self.protocol_success = protocol_success
        self.oracle_success = oracle_success
        self.fidelity = fidelity

    @property
    def is_null(self):
        return self.final_state is None

    @property
    def path_label(self):
        return " ".join("%s=%s" % (mid, label) for mid, _, label in self.outcome_path)

    @property
    def message_trits(self):
        return sum(len(message.trits) for message in self.messages)

    def __repr__(self):
        return "Branch(%s, p=%.6f, ok=%s/%s)" % (self.path_label, self.probability,
                                                self.protocol_success, self.oracle_success)


class BranchEnumeration(object):
    """ This class stores every branch of one protocol run.

        Attributes:
            basis_name (str): The xi basis of scheme S2, None for S1.
            branches (List[Branch]): The leaves in enumeration order.
            channels (List[str]): The entangled channels consumed, taken from ChannelName.
            declared (str): The family id known to contain U, or None.
            parties (Dict[str, Party]): The parties by name.
            scheme (str): The scheme, taken from SchemeName.
            target (StateVector): U|chi> on the reconstruction qutrit.
    """

    def __init__(self, scheme, branches, parties, channels, target, declared=None, basis_name=None):
        self.scheme = scheme
        self.branches = list(branches)
        self.parties = parties
        self.channels = list(channels)
        self.target = target
        self.declared = declared
        self.basis_name = basis_name

    def __len__(self):
        return len(self.branches)

    @property
    def total_probability(self):
        return sum(branch.probability for branch in self.branches)

    @property
    def success_probability(self):
        """ The exact success probability: the Born weight of branches reproducing U|chi>. """
        return sum(branch.probability for branch in self.branches if branch.oracle_success)

    @property
    def nominal_success_probability(self):
        """ The fraction of outcome paths the decision rule declares successful, as a Fraction. """
        if not self.branches:
            raise ProtocolError("enumeration has no branches")
        return Fraction(sum(1 for branch in self.branches if branch.protocol_success), len(self.branches))

    @property
    def unsupported_claims(self):
        """ Non-null branches declared successful that do not reproduce U|chi>. """
        return [branch for branch in self.branches
                if branch.protocol_success and not branch.oracle_success and not branch.is_null]

    def check_invariants(self, tolerance=TOLERANCE):
        """ Check probability completeness and party locality; raise ProtocolError on violation. """
        if not self.branches:
            raise ProtocolError("enumeration has no branches")
        total = self.total_probability
        if abs(total - 1.0) > tolerance:
            raise ProtocolError("branch probabilities sum to %.12f" % total)
        for branch in self.branches:
            if branch.probability < -tolerance or branch.probability > 1.0 + tolerance:
                raise ProtocolError("branch %s has probability %r" % (branch.path_label, branch.probability))
            for step in branch.trace:
                if not self.parties[step.party].owns(step.labels):
                    raise ProtocolError("%s acts on %s it does not own" % (step.party, list(step.labels)))
            for message in branch.messages:
                if message.sender in message.receivers:
                    raise ProtocolError("%s sends a message to itself" % message.sender)


def null_records(targets, basis):
    """ Records for every outcome of a measurement on a branch that already has probability zero. """
    return [MeasurementRecord(targets, index, label, 0.0, None, is_null=True)
            for index, label in enumerate(basis.outcome_labels)]
