#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging
import numbers
from collections import namedtuple

import numpy as np
from scipy.special import expit

from .. import ParameterError, DegenerateMemoryError
from ..fluctuation import stochastic_entropy_production

logger = logging.getLogger(__name__)

CNOT = 'CNOT'
EQUILIBRATE = 'EQUILIBRATE'

# cost is spinlabor for a CNOT step and reservoir-positive spintherm for an equilibration
Step = namedtuple('Step', ['kind', 'memory_up', 'cost'])

TrajectoryRecord = namedtuple('TrajectoryRecord', ['initial_up', 'spinlabor', 'spintherm_to_reservoir',
                                                   'entropy_production', 'steps', 'final_up', 'cycles'])


def block_rng(seed, stream):
    """ Random stream number `stream` of a batch, derived from the batch seed and the stream index """

    if isinstance(seed, bool) or not isinstance(seed, numbers.Integral) or seed < 0:
        raise ParameterError("seed must be a non-negative integer, got %r" % (seed,))

    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(stream),)))


def up_probability_table(gamma, max_cycles):
    """ Q_up(m) for m = 0..max_cycles """

    return expit(-(np.arange(max_cycles + 1) + 1) * gamma)


def simulate_shot(rng, config, reservoir, N_bar=None):
    """
    Run one erasure: C CNOT steps, then an equilibration at every m = C..M with a CNOT
    between consecutive equilibrations.

    Draws one uniform for the initial memory state and one per equilibration, in the same
    order a block of one shot consumes them.
    """

    cycles = config.cycles(reservoir.gamma)
    q_up = up_probability_table(reservoir.gamma, cycles)

    up = bool(rng.random() < config.p_up)
    initial_up = up
    spinlabor = 0
    spintherm = 0
    steps = []

    for _ in range(config.C):
        spinlabor += int(up)
        steps.append(Step(CNOT, up, int(up)))

    m = config.C
    while True:
        before = up
        up = bool(rng.random() < q_up[m])
        # the memory and its m ancillas flip together
        released = (m + 1) * (int(before) - int(up))
        spintherm += released
        steps.append(Step(EQUILIBRATE, up, released))

        if m >= cycles:
            break

        spinlabor += int(up)
        steps.append(Step(CNOT, up, int(up)))
        m += 1

    sigma = None
    if not config.degenerate:
        sigma = stochastic_entropy_production(spinlabor, initial_up, config.p_up, reservoir.gamma,
                                              cycles if N_bar is None else N_bar, config.C)

    return TrajectoryRecord(initial_up, spinlabor, spintherm, sigma, tuple(steps), up, cycles)


def entropy_production(traj, config, reservoir, N_bar=None):
    """ Stochastic entropy production of a finished trajectory """

    if config.degenerate:
        raise DegenerateMemoryError("entropy production needs 0 < p_up < 1, got %r" % config.p_up)

    return stochastic_entropy_production(traj.spinlabor, traj.initial_up, config.p_up, reservoir.gamma,
                                         traj.cycles if N_bar is None else N_bar, config.C)


def memory_delta_jz(initial_up, final_up, cycles):
    """ Change of J_z of the memory plus its ancillas, counted in flipped spins """

    return int(final_up) * (cycles + 1) - int(initial_up)


def audit_first_law(record):
    """ Check the per-shot ledger: spinlabor - spintherm equals the memory-ancilla J_z change """

    labor = 0
    therm = 0
    for step in record.steps:
        if step.kind == CNOT:
            if step.cost not in (0, 1):
                return False
            labor += step.cost
        elif step.kind == EQUILIBRATE:
            therm += step.cost
        else:
            return False

    if labor != record.spinlabor or therm != record.spintherm_to_reservoir:
        return False

    return record.spinlabor - record.spintherm_to_reservoir == memory_delta_jz(
        record.initial_up, record.final_up, record.cycles)
