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
qutritshare
===========

Provides
  1. An exact state-vector simulator for small labelled qutrit registers.
  2. The two three-party schemes for sharing a single-qutrit operation, enumerated over every
     measurement outcome with explicit classical trit messages.
  3. The restricted operation families, commutation tests and resource accounting used to
     compare the schemes.

Available subpackages
---------------------

data
    Qutrit states, operators, measurement and parameters
channels
    Named states, gates, corrections and measurement bases
protocols
    Schemes S1 and S2 and their resource accounting
algorithms
    Operation families and commutation analysis
report
    Command-line front end and report writers
utils
    Random sampling and linear algebra helpers
"""


# Create a logger console handler and set logging output format.
def _init_logging():
    import logging
    logger = logging.getLogger(__name__)
    logger.setLevel(logging.INFO)
    console_handler = logging.StreamHandler()
    formatter = logging.Formatter('[%(name)s] %(levelname)s - %(message)s')
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)


_init_logging()
