#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

"""
Reservoir and protocol parameters and the elementary probabilities of the erasure protocol.

All angular momentum is in units of hbar, so gamma is dimensionless here.
"""

import logging
import math
import numbers

from scipy.special import expit

from . import ParameterError, DegenerateMemoryError

logger = logging.getLogger(__name__)

# Q_up(M) below this ends a sampled protocol when no max_cycles is given
MC_TRUNCATION = 1e-12


def gamma_from_alpha(alpha):
    """ Inverse spin temperature of a reservoir with spin polarisation alpha """

    if not 0.0 < alpha < 0.5:
        raise ParameterError("alpha must be strictly between 0 and 0.5, got %r" % alpha)

    return math.log1p(-alpha) - math.log(alpha)


def alpha_from_gamma(gamma):
    if not gamma > 0.0 or math.isinf(gamma):
        raise ParameterError("gamma must be positive and finite, got %r" % gamma)

    return float(expit(-gamma))


def equilibrium_up_prob(gamma, m):
    """
    Probability that the memory and its m ancillas are all spin-up after an equilibration step.

    Equals e^{-(m+1)gamma} / (1 + e^{-(m+1)gamma}).
    """

    if not gamma > 0.0:
        raise ParameterError("gamma must be positive, got %r" % gamma)
    if m < 0:
        raise ParameterError("m must be non-negative, got %r" % m)

    return float(expit(-(m + 1) * gamma))


def critical_alpha(C):
    """ alpha at which e^{-gamma(C+1)} = e^{-1} """

    _check_c(C)
    return 1.0 / (math.exp(1.0 / (C + 1)) + 1.0)


def classify_reservoir(C, alpha, tolerance=1e-9):
    """
    'cold', 'warm' or 'hot' depending on how gamma(C+1) compares to 1.

    A cold reservoir makes the first equilibration almost always reset the memory
    while a hot one lets the distribution spread over many spinlabor values.
    """

    _check_c(C)
    exponent = gamma_from_alpha(alpha) * (C + 1)
    if abs(exponent - 1.0) <= tolerance:
        return 'warm'

    return 'cold' if exponent > 1.0 else 'hot'


def reservoir_weight_ratio(gamma, delta_n):
    if not gamma > 0.0:
        raise ParameterError("gamma must be positive, got %r" % gamma)

    return math.exp(-gamma * delta_n)


def memory_inverse_temperature(q_up, ancillas=0):
    """ gamma of the memory-ancilla system whose all-up state has probability q_up """

    if not 0.0 < q_up < 1.0:
        raise DegenerateMemoryError("memory spin temperature is undefined for probability %r" % q_up)

    return (math.log1p(-q_up) - math.log(q_up)) / (ancillas + 1)


def default_max_cycles(gamma, C, threshold=MC_TRUNCATION):
    """ Smallest M >= C + 1 with Q_up(M) < threshold """

    cycles = max(C + 1, int(math.ceil(-math.log(threshold) / gamma)))
    while cycles > C + 1 and equilibrium_up_prob(gamma, cycles - 1) < threshold:
        cycles -= 1
    while equilibrium_up_prob(gamma, cycles) >= threshold:
        cycles += 1

    return cycles


def _number(name, value, kind=float):
    # config files may hand over strings such as '1e-14'
    if isinstance(value, bool):
        raise ParameterError("%s must be a number, got %r" % (name, value))

    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ParameterError("%s must be a number, got %r" % (name, value))


def _check_c(C):
    if isinstance(C, bool) or not isinstance(C, numbers.Integral) or C < 0:
        raise ParameterError("C must be a non-negative integer, got %r" % (C,))


class ReservoirParams(object):
    """ Spin polarisation and inverse spin temperature of the reservoir """

    __slots__ = ('alpha', 'gamma')

    def __init__(self, alpha, gamma):
        object.__setattr__(self, 'alpha', float(alpha))
        object.__setattr__(self, 'gamma', float(gamma))

    @classmethod
    def from_alpha(cls, alpha):
        return cls(alpha, gamma_from_alpha(alpha))

    @classmethod
    def from_gamma(cls, gamma):
        return cls(alpha_from_gamma(gamma), gamma)

    def __setattr__(self, key, value):
        raise AttributeError("ReservoirParams is immutable")

    def __eq__(self, other):
        return isinstance(other, ReservoirParams) and (self.alpha, self.gamma) == (other.alpha, other.gamma)

    def __hash__(self):
        return hash((self.alpha, self.gamma))

    def __getstate__(self):
        return self.alpha, self.gamma

    def __setstate__(self, state):
        object.__setattr__(self, 'alpha', state[0])
        object.__setattr__(self, 'gamma', state[1])

    def __repr__(self):
        return 'ReservoirParams(alpha=%r, gamma=%r)' % (self.alpha, self.gamma)


class ProtocolConfig(object):
    """
    Protocol variation and numerical controls.

        C           CNOT steps before the first equilibration
        p_up        probability the memory starts spin-up
        max_cycles  CNOT count M of the truncated protocol, None to derive it from gamma
        tail_tol    convergence tolerance of every m -> infinity limit
        support_tol tail mass that may be cut from a limit distribution
    """

    __slots__ = ('C', 'p_up', 'max_cycles', 'tail_tol', 'support_tol')

    def __init__(self, C, p_up=0.5, max_cycles=None, tail_tol=1e-14, support_tol=1e-15):
        _check_c(C)
        p_up = _number('p_up', p_up)
        tail_tol = _number('tail_tol', tail_tol)
        support_tol = _number('support_tol', support_tol)
        if max_cycles is not None:
            max_cycles = _number('max_cycles', max_cycles, int)

        if not 0.0 <= p_up <= 1.0:
            raise ParameterError("p_up must be within [0, 1], got %r" % p_up)
        if not tail_tol > 0.0:
            raise ParameterError("tail_tol must be positive, got %r" % tail_tol)
        if not support_tol >= 0.0:
            raise ParameterError("support_tol must be non-negative, got %r" % support_tol)
        if max_cycles is not None and max_cycles < C + 1:
            raise ParameterError("max_cycles must be at least C + 1 = %d, got %r" % (C + 1, max_cycles))

        object.__setattr__(self, 'C', int(C))
        object.__setattr__(self, 'p_up', float(p_up))
        object.__setattr__(self, 'max_cycles', None if max_cycles is None else int(max_cycles))
        object.__setattr__(self, 'tail_tol', float(tail_tol))
        object.__setattr__(self, 'support_tol', float(support_tol))

    @property
    def p_down(self):
        return 1.0 - self.p_up

    @property
    def degenerate(self):
        return self.p_up in (0.0, 1.0)

    def cycles(self, gamma, threshold=MC_TRUNCATION):
        if self.max_cycles is not None:
            return self.max_cycles

        return default_max_cycles(gamma, self.C, threshold)

    def replace(self, **changes):
        values = dict((name, getattr(self, name)) for name in self.__slots__)
        values.update(changes)
        return ProtocolConfig(**values)

    def __setattr__(self, key, value):
        raise AttributeError("ProtocolConfig is immutable")

    def __eq__(self, other):
        return isinstance(other, ProtocolConfig) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __getstate__(self):
        return self._key()

    def __setstate__(self, state):
        for name, value in zip(self.__slots__, state):
            object.__setattr__(self, name, value)

    def _key(self):
        return tuple(getattr(self, name) for name in self.__slots__)

    def __repr__(self):
        return 'ProtocolConfig(%s)' % ', '.join('%s=%r' % (name, getattr(self, name)) for name in self.__slots__)
