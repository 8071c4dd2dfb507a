#
# Copyright 2026 The opagbs Authors
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
"""OPA-network Gaussian boson sampling simulator."""

from ._core import (
    NumericalFailure,
    ResourceLimit,
    covariance,
    cp_min_eigenvalue,
    enumerate_distribution,
    fock_oracle_two_mode,
    hafnian,
    log_negativity,
    log_negativity_of,
    loss_channel,
    pattern_probability,
    sample,
)

__all__ = [
    "NumericalFailure",
    "ResourceLimit",
    "covariance",
    "cp_min_eigenvalue",
    "enumerate_distribution",
    "fock_oracle_two_mode",
    "hafnian",
    "log_negativity",
    "log_negativity_of",
    "loss_channel",
    "pattern_probability",
    "sample",
]
