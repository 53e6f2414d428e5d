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
Common names.

This module defines the names shared by the channel library, the protocol engine and the
command-line front end: parties, schemes, preset measurement bases, message meanings and
the kinds of operations recorded in a branch trace.
"""


class PartyName:
    """Names of the three legitimate users."""
    ALICE = "Alice"
    BOB = "Bob"
    CHARLIE = "Charlie"
    names = [ALICE, BOB, CHARLIE]


class SchemeName:
    """Operation-sharing schemes."""
    S1 = "S1"
    S2 = "S2"
    names = [S1, S2]


class BasisCase:
    """Preset xi measurement bases of scheme S2."""
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4A = "C4a"
    C4B = "C4b"
    names = [C1, C2, C3, C4A, C4B]

    @staticmethod
    def lookup(name):
        """Case-insensitive lookup, returns None for unknown names."""
        for case_id in BasisCase.names:
            if case_id.lower() == str(name).lower():
                return case_id
        return None


class MessageMeaning:
    """What the trits of a classical message encode."""
    SINGLE_OUTCOME = "SingleOutcome"
    BELL_OUTCOME = "BellOutcome"
    trit_counts = {SINGLE_OUTCOME: 1, BELL_OUTCOME: 2}


class OperationKind:
    """Kinds of steps recorded in a branch trace.

    GBM and SM are measurements, SO is a single-qutrit unitary operation, V is the two-qutrit
    gate of scheme S2 and TARGET is the shared operation U itself.

    The values are the labels of the NO column of the comparison table, so a generalized
    Bell measurement (GBM) is recorded as "GM", as in "2 GMs, SM, 2 SOs".
    """
    GBM = "GM"
    SM = "SM"
    SO = "SO"
    V = "V"
    TARGET = "U"
    names = [GBM, SM, SO, V, TARGET]


class ChannelName:
    """Entangled resources shared before a run.

    The values are the labels of the QRC column of the comparison table: a generalized Bell
    pair (BELL) is "GB" and a three-qutrit GHZ state (GHZ) is "GG", as in "GB, GG".
    """
    BELL = "GB"
    GHZ = "GG"
    qutrit_counts = {BELL: 2, GHZ: 3}
