#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import math
import pickle

import pytest

from spinerase import ParameterError, DegenerateMemoryError
from spinerase.core import gamma_from_alpha, alpha_from_gamma, equilibrium_up_prob, critical_alpha, \
    classify_reservoir, reservoir_weight_ratio, memory_inverse_temperature, default_max_cycles, \
    ReservoirParams, ProtocolConfig


def test_gamma_from_alpha():
    assert gamma_from_alpha(0.2) == pytest.approx(math.log(4))
    assert 1.0 / gamma_from_alpha(0.4) == pytest.approx(2.466, abs=1e-3)
    assert 1.0 / gamma_from_alpha(0.48) == pytest.approx(12.49, abs=1e-2)


@pytest.mark.parametrize('alpha', [0.0, 0.5, -0.1, 0.7, 1.0])
def test_gamma_from_alpha_rejects_out_of_range(alpha):
    with pytest.raises(ParameterError):
        gamma_from_alpha(alpha)


def test_alpha_gamma_round_trip():
    for alpha in [1e-6, 0.01, 0.2, 0.4, 0.49, 0.4999]:
        assert alpha_from_gamma(gamma_from_alpha(alpha)) == pytest.approx(alpha, rel=1e-12)


def test_gamma_is_decreasing_in_alpha():
    values = [gamma_from_alpha(a) for a in [0.05, 0.1, 0.2, 0.3, 0.4, 0.45]]
    assert all(a > b > 0 for a, b in zip(values, values[1:]))


def test_equilibrium_up_prob():
    gamma = math.log(4)
    assert equilibrium_up_prob(gamma, 0) == pytest.approx(0.2)
    assert equilibrium_up_prob(gamma, 1) == pytest.approx(1.0 / 17)
    # very large exponents underflow to zero instead of raising
    assert equilibrium_up_prob(gamma, 10 ** 6) == 0.0

    with pytest.raises(ParameterError):
        equilibrium_up_prob(0.0, 1)
    with pytest.raises(ParameterError):
        equilibrium_up_prob(gamma, -1)


def test_critical_alpha():
    assert critical_alpha(0) == pytest.approx(0.2689, abs=1e-4)
    assert critical_alpha(1) == pytest.approx(0.3775, abs=1e-4)
    assert critical_alpha(4) == pytest.approx(0.4502, abs=1e-4)
    assert critical_alpha(10) == pytest.approx(0.4773, abs=1e-4)

    for C in range(20):
        assert gamma_from_alpha(critical_alpha(C)) * (C + 1) == pytest.approx(1.0)


def test_classify_reservoir():
    assert classify_reservoir(1, 0.2) == 'cold'
    assert classify_reservoir(1, 0.45) == 'hot'
    assert classify_reservoir(4, critical_alpha(4)) == 'warm'


@pytest.mark.parametrize('C', [-1, 1.5, True, '2'])
def test_bad_c_is_rejected(C):
    with pytest.raises(ParameterError):
        critical_alpha(C)
    with pytest.raises(ParameterError):
        ProtocolConfig(C)


def test_reservoir_weight_ratio():
    assert reservoir_weight_ratio(math.log(4), 1) == pytest.approx(0.25)
    assert reservoir_weight_ratio(math.log(4), -2) == pytest.approx(16.0)


def test_memory_inverse_temperature():
    assert memory_inverse_temperature(0.2) == pytest.approx(math.log(4))
    assert memory_inverse_temperature(0.5) == 0.0
    # the all-up state of memory plus one ancilla flips two spins
    assert memory_inverse_temperature(0.2, ancillas=1) == pytest.approx(math.log(4) / 2)

    with pytest.raises(DegenerateMemoryError):
        memory_inverse_temperature(0.0)
    with pytest.raises(DegenerateMemoryError):
        memory_inverse_temperature(1.0)


def test_default_max_cycles():
    gamma = gamma_from_alpha(0.4)
    cycles = default_max_cycles(gamma, 1)
    assert cycles == 68
    assert equilibrium_up_prob(gamma, cycles) < 1e-12
    assert equilibrium_up_prob(gamma, cycles - 1) >= 1e-12

    # never ends before the first equilibration
    assert default_max_cycles(50.0, 10) == 11


def test_reservoir_params():
    reservoir = ReservoirParams.from_alpha(0.2)
    assert reservoir.gamma == pytest.approx(math.log(4))
    assert ReservoirParams.from_gamma(reservoir.gamma).alpha == pytest.approx(0.2)
    assert reservoir == ReservoirParams.from_alpha(0.2)
    assert hash(reservoir) == hash(ReservoirParams.from_alpha(0.2))

    with pytest.raises(AttributeError):
        reservoir.alpha = 0.3

    assert pickle.loads(pickle.dumps(reservoir)) == reservoir


def test_protocol_config_defaults():
    config = ProtocolConfig(1)
    assert config.p_up == 0.5
    assert config.p_down == 0.5
    assert config.max_cycles is None
    assert config.tail_tol == 1e-14
    assert not config.degenerate
    assert ProtocolConfig(1, p_up=0.0).degenerate
    assert ProtocolConfig(1, p_up=1.0).degenerate


def test_protocol_config_validation():
    with pytest.raises(ParameterError):
        ProtocolConfig(1, p_up=1.5)
    with pytest.raises(ParameterError):
        ProtocolConfig(1, tail_tol=0.0)
    with pytest.raises(ParameterError):
        ProtocolConfig(1, support_tol=-1.0)
    with pytest.raises(ParameterError):
        ProtocolConfig(3, max_cycles=3)
    with pytest.raises(ParameterError):
        ProtocolConfig(1, tail_tol='tiny')
    with pytest.raises(ParameterError):
        ProtocolConfig(1, p_up=True)


def test_protocol_config_accepts_numeric_strings():
    config = ProtocolConfig(1, p_up='0.25', max_cycles='40', tail_tol='1e-14', support_tol='1e-15')

    assert config == ProtocolConfig(1, p_up=0.25, max_cycles=40, tail_tol=1e-14, support_tol=1e-15)


def test_protocol_config_is_immutable_value():
    config = ProtocolConfig(2, p_up=0.3, max_cycles=40)
    with pytest.raises(AttributeError):
        config.C = 3

    assert config.replace(C=3) == ProtocolConfig(3, p_up=0.3, max_cycles=40)
    assert config.replace(C=3) != config
    assert pickle.loads(pickle.dumps(config)) == config
    assert config.cycles(1.0) == 40
    assert ProtocolConfig(2).cycles(1.0) == default_max_cycles(1.0, 2)
