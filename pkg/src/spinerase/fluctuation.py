#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

"""
Jarzynski-like equality, free spin angular momentum, probability of violation and the
integral fluctuation theorem, evaluated on exact distributions.
"""

import csv
import io
import logging
import math
import numbers
from collections import namedtuple

import numpy as np
from scipy.special import logsumexp

from . import ParameterError, DegenerateMemoryError
from .core import equilibrium_up_prob, memory_inverse_temperature
from .distribution import period_two_distribution

logger = logging.getLogger(__name__)

JointOutcome = namedtuple('JointOutcome', ['initial_up', 'spinlabor', 'probability'])

FreeSpinChange = namedtuple('FreeSpinChange', ['delta_F', 'N_bar', 'gamma_M_initial', 'log_Z_initial',
                                               'log_Z_final'])

ViolationProbability = namedtuple('ViolationProbability', ['pr_violation', 'exp_bound'])

ViolationPoint = namedtuple('ViolationPoint', ['epsilon', 'pr_violation', 'exp_bound'])

EntropyProduction = namedtuple('EntropyProduction', ['total', 'memory', 'memory_reported', 'spintherm_mean',
                                                     'spintherm_floor'])

BASELINES = ('symmetric', 'jensen', 'original')


def symmetric_factor(C, gamma):
    """ A = (1 + e^{-C gamma}) / (1 + e^{-(C+1) gamma}) """

    return (1.0 + math.exp(-C * gamma)) / (1.0 + math.exp(-(C + 1) * gamma))


def asymmetric_factor(C, p_up, gamma):
    """ A' = (p_down + p_up e^{-C gamma}) / (1 + e^{-(C+1) gamma}), the exact <e^{-gamma L}> """

    return ((1.0 - p_up) + p_up * math.exp(-C * gamma)) / (1.0 + math.exp(-(C + 1) * gamma))


def jarzynski_lhs(dist, gamma):
    return float(np.dot(dist.probs, np.exp(-gamma * dist.support)))


def jarzynski_lhs_asymmetric(dist, gamma, C, p_up):
    if dist.C != C or not math.isclose(dist.p_up, p_up, rel_tol=0.0, abs_tol=1e-15):
        raise ParameterError("distribution was built for C=%r p_up=%r, not C=%r p_up=%r"
                             % (dist.C, dist.p_up, C, p_up))

    return jarzynski_lhs(dist, gamma)


def exponential_average(dist, gamma):
    """ -gamma^{-1} ln <e^{-gamma L}> """

    log_lhs = logsumexp(-gamma * dist.support, b=dist.probs)
    if not np.isfinite(log_lhs):
        raise ParameterError("exponential average needs a positive <e^{-gamma L}>")

    return float(-log_lhs / gamma)


def _memory_log_ratio(p_up):
    if not 0.0 < p_up < 1.0:
        raise DegenerateMemoryError("ln(p_down/p_up) diverges for p_up=%r" % p_up)

    return math.log1p(-p_up) - math.log(p_up)


def delta_free_spin(C, p_up, gamma, N_bar):
    """
    Change in free spin angular momentum of the memory and its N_bar ancillas.

    The memory statistics do not depend on C; it is accepted so callers can pass
    a whole protocol point.
    """

    if N_bar < 1:
        raise ParameterError("N_bar must be a positive integer, got %r" % N_bar)

    log_ratio = _memory_log_ratio(p_up)
    log_Z_initial = (N_bar + 1) * log_ratio / 2.0 - math.log1p(-p_up)
    log_Z_final = (N_bar + 1) * gamma / 2.0
    delta_F = -(log_Z_final - log_Z_initial) / gamma

    return FreeSpinChange(delta_F, N_bar, memory_inverse_temperature(p_up, 0), log_Z_initial, log_Z_final)


def stochastic_entropy_production(spinlabor, initial_up, p_up, gamma, N_bar, C=0):
    """
    sigma = gamma (L - dF_s) - (ln(p_down/p_up) - gamma)(n_i - (N_bar + 1)/2)

    spinlabor and initial_up may be numpy arrays. The N_bar terms cancel.
    """

    log_ratio = _memory_log_ratio(p_up)
    free_spin = delta_free_spin(C, p_up, gamma, N_bar)
    n_initial = np.asarray(initial_up, dtype=float)

    sigma = gamma * (np.asarray(spinlabor, dtype=float) - free_spin.delta_F) \
        - (log_ratio - gamma) * (n_initial - (N_bar + 1) / 2.0)
    return float(sigma) if np.ndim(sigma) == 0 else sigma


def joint_outcomes(config, reservoir):
    """ (initial memory state, spinlabor) outcomes of the full erasure with their probabilities """

    period_two = period_two_distribution(config, reservoir)
    outcomes = []
    for k, p in enumerate(period_two.probs):
        if config.p_down > 0.0:
            outcomes.append(JointOutcome(False, k, config.p_down * float(p)))
        if config.p_up > 0.0:
            outcomes.append(JointOutcome(True, config.C + k, config.p_up * float(p)))

    return outcomes


def _default_n_bar(config, reservoir, N_bar):
    return config.cycles(reservoir.gamma) if N_bar is None else N_bar


def _joint_arrays(joint):
    labor = np.array([o.spinlabor for o in joint], dtype=float)
    up = np.array([o.initial_up for o in joint], dtype=float)
    probs = np.array([o.probability for o in joint], dtype=float)
    return labor, up, probs


def ift_expectation(joint, config, reservoir, N_bar=None):
    """ <e^{-sigma}> over the exact joint outcomes; 1 for every valid protocol """

    N_bar = _default_n_bar(config, reservoir, N_bar)
    labor, up, probs = _joint_arrays(joint)
    sigma = stochastic_entropy_production(labor, up, config.p_up, reservoir.gamma, N_bar, config.C)

    return float(np.exp(logsumexp(-sigma, b=probs)))


def mean_entropy_production(joint, config, reservoir, N_bar=None):
    """
    Mean total entropy production together with its memory part.

    memory is the exact trajectory average gamma (N_bar+1) Q_up(N_bar) + ln p_down - p_up ln(p_down/p_up);
    memory_reported is the large-N_bar form gamma Q_up(N_bar) + ln p_down - (N_bar+1)/2 ln(p_down/p_up).
    Both agree at p_up = 1/2 up to exponentially small terms. spintherm_floor is the lower bound
    -memory/gamma on the reservoir-positive mean spintherm.
    """

    N_bar = _default_n_bar(config, reservoir, N_bar)
    gamma = reservoir.gamma
    log_ratio = _memory_log_ratio(config.p_up)
    q_final = equilibrium_up_prob(gamma, N_bar)

    labor, up, probs = _joint_arrays(joint)
    sigma = stochastic_entropy_production(labor, up, config.p_up, gamma, N_bar, config.C)
    total = float(np.dot(probs, sigma))

    memory = gamma * (N_bar + 1) * q_final + math.log1p(-config.p_up) - config.p_up * log_ratio
    memory_reported = gamma * q_final + math.log1p(-config.p_up) - (N_bar + 1) / 2.0 * log_ratio
    spintherm_mean = float(np.dot(probs, labor)) + config.p_up

    if total < -1e-12:
        logger.warning("negative mean entropy production %.3g for %r", total, config)

    return EntropyProduction(total, memory, memory_reported, spintherm_mean, -memory / gamma)


def period_factors(config, reservoir):
    """
    <e^{-gamma L1}> and <e^{-gamma L2}> computed from their own distributions: L1 is the spinlabor
    of the first C CNOT steps, L2 everything after the first equilibration.
    """

    gamma = reservoir.gamma
    first = config.p_down + config.p_up * math.exp(-gamma * config.C)
    second = jarzynski_lhs(period_two_distribution(config, reservoir), gamma)
    return first, second


def baseline_value(kind, C, p_up, gamma):
    """ Reference spinlabor bound a violation is measured against """

    if isinstance(kind, numbers.Real) and not isinstance(kind, bool):
        return float(kind)
    if kind == 'symmetric':
        return math.log(2.0 / symmetric_factor(C, gamma)) / gamma
    if kind == 'jensen':
        return -math.log(asymmetric_factor(C, p_up, gamma)) / gamma
    if kind == 'original':
        return math.log(2.0) / gamma

    try:
        return float(kind)
    except (TypeError, ValueError):
        raise ParameterError("unknown baseline %r, use one of %s or a number" % (kind, ', '.join(BASELINES)))


def violation_probability(dist, gamma, baseline, epsilon):
    """ Pr(L <= baseline - epsilon) and the exponential bound e^{-gamma epsilon} """

    if epsilon < 0:
        raise ParameterError("epsilon must be non-negative, got %r" % epsilon)

    threshold = baseline - epsilon
    # tolerate round-off when the threshold lands on an integer
    mask = dist.support <= threshold + 1e-12
    pr_v = float(dist.probs[mask].sum())
    bound = math.exp(-gamma * epsilon)

    if pr_v > bound + 1e-12:
        logger.warning("probability of violation %.6g exceeds e^{-gamma eps} = %.6g at eps=%g, baseline=%.6g",
                       pr_v, bound, epsilon, baseline)

    return ViolationProbability(pr_v, bound)


def violation_curve(dist, gamma, baseline, epsilons):
    points = []
    for epsilon in epsilons:
        pr_v, bound = violation_probability(dist, gamma, baseline, epsilon)
        points.append(ViolationPoint(float(epsilon), pr_v, bound))

    return points


def epsilon_grid(maximum, step):
    if step <= 0 or maximum < 0:
        raise ParameterError("epsilon grid needs step > 0 and max >= 0")

    count = int(math.floor(maximum / step + 1e-9))
    return [round(i * step, 12) for i in range(count + 1)]


def violation_csv(points):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(['epsilon', 'pr_violation', 'exp_bound'])
    for point in points:
        writer.writerow([repr(point.epsilon), repr(point.pr_violation), repr(point.exp_bound)])

    return buf.getvalue()
