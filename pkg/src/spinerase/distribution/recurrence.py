#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging

import numpy as np
from scipy.special import expit

from .. import RegimeError, ConvergenceError
from ..core import default_max_cycles
from .model import SpinlaborDistribution, LIMIT

logger = logging.getLogger(__name__)


def initial_distribution(config, m=0, reservoir=None):
    """
    P_m for m <= C: no equilibration has happened yet, so every CNOT either
    costs hbar (memory up) or nothing (memory down).
    """

    if m < 0 or m > config.C:
        raise RegimeError("the pre-equilibration phase covers m = 0..%d, got m=%r" % (config.C, m))

    gamma = reservoir.gamma if reservoir is not None else None
    probs = np.zeros(m + 1)
    probs[0] += config.p_down
    probs[m] += config.p_up

    return SpinlaborDistribution(m, probs, config.C, gamma, config.p_up)


def step_distribution(dist, gamma):
    """ Equilibrate at m and apply the next CNOT: P_{m+1}(n) = P_m(n) Q_down(m) + P_m(n-1) Q_up(m) """

    if dist.is_limit:
        return dist
    if dist.m < dist.C:
        raise RegimeError("recurrence applies only from m = C = %d on, got m=%d" % (dist.C, dist.m))

    probs = _advance(dist.probs, dist.m, gamma)
    return SpinlaborDistribution(dist.m + 1, probs, dist.C, gamma, dist.p_up)


def _advance(probs, m, gamma):
    x = (m + 1) * gamma
    q_up = expit(-x)
    q_down = expit(x)

    stepped = np.zeros(probs.size + 1)
    stepped[:-1] += probs * q_down
    stepped[1:] += probs * q_up
    return stepped


def _evolve_to_limit(probs, start, config, reservoir):
    gamma = reservoir.gamma
    if config.max_cycles is not None:
        max_cycles = config.max_cycles
    else:
        # one past the first m whose step can no longer move tail_tol of mass
        max_cycles = default_max_cycles(gamma, config.C, config.tail_tol / 10.0) + 1

    m = start
    change = np.inf
    while m < max_cycles:
        stepped = _advance(probs, m, gamma)
        change = 0.5 * np.abs(stepped[:-1] - probs).sum() + 0.5 * stepped[-1]
        probs = stepped
        m += 1
        if change < config.tail_tol:
            break

    if change >= config.tail_tol:
        raise ConvergenceError("spinlabor distribution did not converge within %d cycles "
                               "(last change %.3g >= tail_tol %.3g)" % (max_cycles, change, config.tail_tol))

    logger.debug("converged after %d cycles, last total-variation change %.3g", m, change)
    return _trim_support(probs, config.support_tol), m


def _trim_support(probs, support_tol):
    # drop the far tail while its total mass stays below support_tol
    tail = np.cumsum(probs[::-1])[::-1]
    below = np.flatnonzero(tail < support_tol)
    keep = int(below[0]) if below.size else probs.size
    return probs[:max(keep, 1)].copy()


def limit_distribution(config, reservoir):
    """ Iterate the recurrence from the first equilibration until one step moves less than tail_tol """

    start = initial_distribution(config, config.C, reservoir)
    probs, cycles = _evolve_to_limit(start.probs, config.C, config, reservoir)
    logger.info("limit distribution C=%d gamma=%.6g: support 0..%d after %d cycles",
                config.C, reservoir.gamma, probs.size - 1, cycles)

    return SpinlaborDistribution(LIMIT, probs, config.C, reservoir.gamma, config.p_up, cycles)


def period_two_distribution(config, reservoir):
    """ Spinlabor collected after the first equilibration: a point mass at 0 evolved from m = C """

    probs, cycles = _evolve_to_limit(np.ones(1), config.C, config, reservoir)
    return SpinlaborDistribution(LIMIT, probs, config.C, reservoir.gamma, config.p_up, cycles)
