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

import math
import os
import subprocess

import numpy as np
import pytest

import opagbs


def test_tmsv_negativity():
    for r in (0.4, 0.8, 1.6):
        assert opagbs.log_negativity(2, 1, r, partition=1) == pytest.approx(2 * r / math.log(2), rel=1e-12)
        assert opagbs.log_negativity(2, 1, r, partition=1, base="e") == pytest.approx(2 * r, rel=1e-12)


def test_covariance_engines_agree():
    a = opagbs.covariance(4, 4, 0.6, theta=0.2, t=0.85)
    b = opagbs.covariance(4, 4, 0.6, theta=0.2, t=0.85, engine="moment")
    assert a.shape == (8, 8)
    assert np.allclose(a, a.T)
    assert np.max(np.abs(a - b)) < 1e-12


def test_negativity_from_matrix():
    sigma = opagbs.covariance(2, 1, 0.8)
    assert opagbs.log_negativity_of(sigma, [0]) == pytest.approx(1.6 / math.log(2), rel=1e-10)
    with pytest.raises(ValueError):
        opagbs.log_negativity_of(0.5 * np.eye(4), [0])


def test_hafnian():
    assert opagbs.hafnian(np.ones((8, 8))) == 105.0
    assert opagbs.hafnian(np.array([[0, 3], [3, 0]]), algorithm="brute") == 3.0
    rng = np.random.default_rng(1)
    m = rng.uniform(-1, 1, (6, 6)) + 1j * rng.uniform(-1, 1, (6, 6))
    m = m + m.T
    assert opagbs.hafnian(m) == pytest.approx(opagbs.hafnian(m, algorithm="brute"), rel=1e-10)
    with pytest.raises(ValueError):
        opagbs.hafnian(np.ones((3, 3)))
    with pytest.raises(opagbs.ResourceLimit):
        opagbs.hafnian(np.ones((14, 14)), algorithm="brute")


def test_probabilities_match_fock_oracle():
    sigma = opagbs.covariance(2, 1, 0.8, t=0.9)
    fock = opagbs.fock_oracle_two_mode(0.8, 0.81, 20)
    patterns, probs, residual = opagbs.enumerate_distribution(sigma, 8)
    for pattern, p in zip(patterns, probs):
        assert abs(p - fock[pattern]) < 1e-8
    assert 0 <= residual < 0.02


def test_sampling_is_deterministic():
    sigma = opagbs.covariance(2, 1, 0.8)
    a = opagbs.sample(sigma, 200, seed=42)
    assert a == opagbs.sample(sigma, 200, seed=42)
    assert all(p is None or sum(p) % 2 == 0 for p in a)


def test_loss_channel_is_cp():
    x, y = opagbs.loss_channel(2, 0.5)
    assert np.allclose(x, math.sqrt(0.5) * np.eye(4))
    assert opagbs.cp_min_eigenvalue(x, y) >= -1e-10
    assert opagbs.cp_min_eigenvalue(2 * np.eye(2), np.zeros((2, 2))) < 0


@pytest.mark.skipif("OPAGBS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_hafnian(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("1,1,1,1\n1,1,1,1\n1,1,1,1\n1,1,1,1\n")
    out = subprocess.run([os.environ["OPAGBS_CLI"], "hafnian", str(path)], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "3\n"
