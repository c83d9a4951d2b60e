#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import math

import numpy as np
import pytest

from spinerase import ParameterError, DegenerateMemoryError
from spinerase.core import ProtocolConfig, ReservoirParams
from spinerase.distribution import limit_distribution, mean_spinlabor
from spinerase.fluctuation import joint_outcomes, stochastic_entropy_production
from spinerase.montecarlo import simulate_shot, simulate_block, simulate_batch, entropy_production, \
    audit_first_law, block_rng, memory_delta_jz, first_law_violations, EmpiricalDistribution, Step, STREAM_SHOTS, \
    TrajectoryRecord, CNOT, EQUILIBRATE


def test_shot_with_nothing_to_erase():
    config = ProtocolConfig(3, p_up=0.0)
    reservoir = ReservoirParams.from_gamma(60.0)
    for shot in range(5):
        record = simulate_shot(block_rng(11, shot), config, reservoir)
        assert record.spinlabor == 0
        assert record.spintherm_to_reservoir == 0
        assert record.entropy_production is None
        assert audit_first_law(record)


def test_shot_of_initially_up_memory_pays_for_precopying():
    config = ProtocolConfig(3, p_up=1.0)
    reservoir = ReservoirParams.from_alpha(0.3)
    for shot in range(20):
        record = simulate_shot(block_rng(5, shot), config, reservoir)
        assert record.initial_up
        assert record.spinlabor >= 3
        assert [step.kind for step in record.steps[:4]] == [CNOT, CNOT, CNOT, EQUILIBRATE]
        assert audit_first_law(record)


def test_shot_structure():
    config = ProtocolConfig(2, p_up=0.5, max_cycles=6)
    record = simulate_shot(block_rng(3, 0), config, ReservoirParams.from_alpha(0.45))

    kinds = [step.kind for step in record.steps]
    # C CNOTs, then equilibrate/CNOT pairs up to M, ending on an equilibration
    assert kinds == [CNOT, CNOT] + [EQUILIBRATE, CNOT] * 4 + [EQUILIBRATE]
    assert record.cycles == 6
    assert record.spinlabor == sum(step.cost for step in record.steps if step.kind == CNOT)
    assert audit_first_law(record)


def test_audit_catches_broken_ledger():
    record = simulate_shot(block_rng(3, 0), ProtocolConfig(1), ReservoirParams.from_alpha(0.4))
    assert audit_first_law(record)
    assert not audit_first_law(record._replace(spinlabor=record.spinlabor + 1))
    assert not audit_first_law(record._replace(final_up=not record.final_up))

    bad_step = record._replace(steps=record.steps + (Step('SWAP', False, 0),))
    assert not audit_first_law(bad_step)


def test_memory_delta_jz():
    assert memory_delta_jz(True, False, 10) == -1
    assert memory_delta_jz(False, True, 10) == 11
    assert memory_delta_jz(False, False, 10) == 0


def test_first_law_holds_for_every_audited_shot():
    config = ProtocolConfig(2, p_up=0.3)
    reservoir = ReservoirParams.from_alpha(0.4)
    for shot in range(2000):
        assert audit_first_law(simulate_shot(block_rng(17, shot), config, reservoir))

    arrays = simulate_block(block_rng(17, 0), 100000, config, reservoir)
    assert first_law_violations(arrays) == 0


def test_entropy_production_of_trajectory():
    config = ProtocolConfig(1, p_up=0.3)
    reservoir = ReservoirParams.from_alpha(0.2)
    record = simulate_shot(block_rng(1, 0), config, reservoir)

    expected = stochastic_entropy_production(record.spinlabor, record.initial_up, 0.3, reservoir.gamma,
                                             record.cycles, 1)
    assert record.entropy_production == pytest.approx(expected)
    assert entropy_production(record, config, reservoir) == pytest.approx(expected)
    # the ancilla count cancels
    assert entropy_production(record, config, reservoir, N_bar=2 * record.cycles) == pytest.approx(expected,
                                                                                                     abs=1e-10)

    with pytest.raises(DegenerateMemoryError):
        entropy_production(record, config.replace(p_up=1.0), reservoir)


def test_block_rng():
    first = block_rng(42, 0).random(4)
    assert np.array_equal(first, block_rng(42, 0).random(4))
    assert not np.array_equal(first, block_rng(42, 1).random(4))
    assert not np.array_equal(first, block_rng(43, 0).random(4))

    for seed in [-1, 1.5, 'x', True]:
        with pytest.raises(ParameterError):
            block_rng(seed, 0)


def test_batch_of_one_shot_equals_the_shot():
    config = ProtocolConfig(1, p_up=0.5)
    reservoir = ReservoirParams.from_alpha(0.4)
    for seed in range(10):
        record = simulate_shot(block_rng(seed, 0), config, reservoir)
        result = simulate_batch(seed, 1, config, reservoir)

        assert result.summary['shots'] == 1
        assert result.summary['seed'] == seed
        assert result.summary['mean'] == record.spinlabor
        assert result.summary['variance'] == 0.0
        assert result.summary['spintherm_mean'] == record.spintherm_to_reservoir
        assert result.summary['jarzynski_lhs'] == pytest.approx(math.exp(-reservoir.gamma * record.spinlabor))
        assert result.summary['ift_lhs'] == pytest.approx(math.exp(-record.entropy_production))


def test_batch_summary_keys():
    result = simulate_batch(1, 10, ProtocolConfig(0), ReservoirParams.from_alpha(0.2))
    assert set(result.summary) == {'mean', 'variance', 'spintherm_mean', 'jarzynski_lhs', 'ift_lhs', 'seed',
                                   'shots'}

    result = simulate_batch(1, 10, ProtocolConfig(0, p_up=1.0), ReservoirParams.from_alpha(0.2))
    assert result.summary['ift_lhs'] is None


def test_batch_rejects_bad_arguments():
    config = ProtocolConfig(0)
    reservoir = ReservoirParams.from_alpha(0.2)
    with pytest.raises(ParameterError):
        simulate_batch(1, 0, config, reservoir)
    with pytest.raises(ParameterError):
        simulate_batch(1, 10, config, reservoir, block_size=0)
    with pytest.raises(ParameterError):
        simulate_batch(1, 10, config, reservoir, workers=0)
    with pytest.raises(ParameterError):
        simulate_batch(-3, 10, config, reservoir)


def test_batch_is_independent_of_worker_count():
    config = ProtocolConfig(1, p_up=0.3)
    reservoir = ReservoirParams.from_alpha(0.4)

    serial = simulate_batch(2024, 30000, config, reservoir, workers=1, block_size=1000)
    parallel = simulate_batch(2024, 30000, config, reservoir, workers=3, block_size=1000)
    again = simulate_batch(2024, 30000, config, reservoir, workers=1, block_size=1000)

    assert np.array_equal(serial.empirical.counts_by_initial, parallel.empirical.counts_by_initial)
    assert serial.empirical.to_csv() == parallel.empirical.to_csv()
    assert serial.summary == parallel.summary
    assert serial.summary == again.summary


def test_batch_is_independent_of_block_size():
    config = ProtocolConfig(1, p_up=0.3)
    reservoir = ReservoirParams.from_alpha(0.4)
    shots = 5 * STREAM_SHOTS + 37

    results = [simulate_batch(7, shots, config, reservoir, block_size=size) for size in [1, 1000, 3000, 8192]]

    for other in results[1:]:
        assert np.array_equal(results[0].empirical.counts_by_initial, other.empirical.counts_by_initial)
        assert results[0].summary == other.summary

    assert results[0].empirical.shots == shots


def test_merge_is_exact():
    config = ProtocolConfig(2)
    reservoir = ReservoirParams.from_alpha(0.3)
    a = EmpiricalDistribution.from_arrays(simulate_block(block_rng(9, 0), 500, config, reservoir), 9)
    b = EmpiricalDistribution.from_arrays(simulate_block(block_rng(9, 1), 700, config, reservoir), 9)

    ab = a.merge(b)
    ba = b.merge(a)
    assert ab.shots == 1200
    assert np.array_equal(ab.counts_by_initial, ba.counts_by_initial)
    assert ab.spintherm_sum == a.spintherm_sum + b.spintherm_sum
    assert ab.spintherm_sq_sum == ba.spintherm_sq_sum


@pytest.mark.parametrize('C,alpha', [(0, 0.2), (1, 0.2), (10, 0.4)])
def test_empirical_distribution_converges(C, alpha):
    config = ProtocolConfig(C)
    reservoir = ReservoirParams.from_alpha(alpha)
    empirical = simulate_batch(7, 10 ** 6, config, reservoir).empirical
    exact = limit_distribution(config, reservoir)

    standard_error = math.sqrt(exact.variance() / empirical.shots)
    assert abs(empirical.mean() - exact.mean()) < 3 * standard_error
    assert empirical.total_variation(exact) < 0.005


def test_mean_spintherm_and_ift_within_standard_errors():
    config = ProtocolConfig(1, p_up=0.5)
    reservoir = ReservoirParams.from_alpha(0.2)
    shots = 200000
    result = simulate_batch(99, shots, config, reservoir)
    empirical = result.empirical

    spintherm_error = math.sqrt(empirical.spintherm_variance() / shots)
    expected = mean_spinlabor(config, reservoir) + config.p_up
    assert abs(empirical.spintherm_mean() - expected) < 3 * spintherm_error

    joint = joint_outcomes(config, reservoir)
    probs = np.array([o.probability for o in joint])
    sigma = stochastic_entropy_production([o.spinlabor for o in joint], [o.initial_up for o in joint],
                                          config.p_up, reservoir.gamma, config.cycles(reservoir.gamma), config.C)
    second_moment = float(np.dot(probs, np.exp(-2 * sigma)))
    ift_error = math.sqrt((second_moment - 1.0) / shots)
    assert abs(result.summary['ift_lhs'] - 1.0) < 3 * ift_error


def test_two_peaks_of_biased_memory():
    config = ProtocolConfig(10, p_up=0.1)
    reservoir = ReservoirParams.from_alpha(0.4)
    counts = simulate_batch(3, 100000, config, reservoir).empirical.counts

    assert counts.argmax() == 0
    assert counts[10] == counts[5:].max()
    assert counts[0] / float(counts[10]) == pytest.approx(9.0, abs=0.6)


def test_empirical_serialisation():
    empirical = simulate_batch(5, 1000, ProtocolConfig(1), ReservoirParams.from_alpha(0.3)).empirical

    lines = empirical.to_csv().splitlines()
    assert lines[0] == 'n,count'
    assert sum(int(line.split(',')[1]) for line in lines[1:]) == 1000
    assert '"seed": 5' in empirical.to_json()

    with pytest.raises(ParameterError):
        EmpiricalDistribution(np.zeros((3, 4)), 5)


def test_trajectory_record_is_immutable():
    record = simulate_shot(block_rng(0, 0), ProtocolConfig(0), ReservoirParams.from_alpha(0.2))
    assert isinstance(record, TrajectoryRecord)
    with pytest.raises(AttributeError):
        record.spinlabor = 5
