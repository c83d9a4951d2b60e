#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging
import math

import numpy as np
from scipy.special import expit
from scipy.stats import norm

from .. import ParameterError

logger = logging.getLogger(__name__)


def up_probabilities(config, reservoir, stop=None):
    """
    Q_up(m) for m = C, C+1, ... up to stop (exclusive).

    Without stop the series runs until the last increment drops below tail_tol.
    """

    gamma = reservoir.gamma
    if stop is None:
        stop = max(config.C, int(math.ceil(-math.log(config.tail_tol) / gamma))) + 1

    m = np.arange(config.C, max(stop, config.C))
    return expit(-(m + 1) * gamma)


def mean_spinlabor(config, reservoir):
    """ <L> = C p_up + sum_{m >= C} Q_up(m) """

    return config.C * config.p_up + float(up_probabilities(config, reservoir).sum())


def variance_spinlabor(config, reservoir):
    """
    Var L = C^2 p_up p_down + 2 sum_{k<n} Q(k) Q(n) + sum Q - (sum Q)^2

    The pair sum and the squared sum cancel down to sum Q (1 - Q): the increments after
    the first equilibration are independent Bernoulli draws.
    """

    up = up_probabilities(config, reservoir)
    return config.C ** 2 * config.p_up * config.p_down + float(np.sum(up * (1.0 - up)))


def moments_after(config, reservoir, m):
    """ (mean, variance) of P_m, the distribution after m CNOT steps """

    if m < 0:
        raise ParameterError("m must be non-negative, got %r" % m)

    head = min(m, config.C)
    mean = head * config.p_up
    variance = head ** 2 * config.p_up * config.p_down
    if m > config.C:
        up = up_probabilities(config, reservoir, stop=m)
        mean += float(up.sum())
        variance += float(np.sum(up * (1.0 - up)))

    return mean, variance


def discretized_gaussian(support, mean, variance):
    """ Mass of N(mean, variance) on the unit cells [n - 1/2, n + 1/2) """

    if variance <= 0.0:
        return ((support - 0.5 <= mean) & (mean < support + 0.5)).astype(float)

    scale = math.sqrt(variance)
    return norm.cdf(support + 0.5, loc=mean, scale=scale) - norm.cdf(support - 0.5, loc=mean, scale=scale)


def gaussian_distance(dist, mean=None, variance=None):
    """
    Total-variation distance between dist and the lattice Gaussian with the same
    (or the given) mean and variance.
    """

    mean = dist.mean() if mean is None else mean
    variance = dist.variance() if variance is None else variance

    weights = discretized_gaussian(dist.support, mean, variance)
    # gaussian mass that falls outside the support of dist
    outside = max(0.0, 1.0 - float(weights.sum()))

    return 0.5 * (float(np.abs(dist.probs - weights).sum()) + outside)
