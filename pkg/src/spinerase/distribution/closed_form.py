#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

"""
Analytic spinlabor probabilities built from q-Pochhammer symbols.

With R = e^{-gamma}, the spinlabor k collected after the first equilibration
(at m = C) has the limit law

    D(k) = R^{k(C+1) + k(k-1)/2} / ((R; R)_k (-R^{C+1}; R)_inf)

and the full limit distribution mixes D with a copy shifted by C:

    Pr(n) = p_down D(n) + p_up D(n - C)        (second term only for n >= C)
"""

import itertools
import logging
import math
import numbers

from .. import ParameterError, DivergenceError

logger = logging.getLogger(__name__)

INFINITY = float('inf')

# factors a q^k below this are treated as exactly 1
_NEGLIGIBLE = 1e-16

# brute force enumeration is only an oracle, keep it small
BRUTE_FORCE_MAX_N = 8
BRUTE_FORCE_MAX_J = 24


def q_pochhammer(a, q, n=INFINITY):
    """
    (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k)

    The product is accumulated as a sum of logarithms, so long products of factors
    close to 1 do not lose precision. The infinite product stops once |a q^k| < 1e-16.
    """

    infinite = n == INFINITY
    if infinite:
        if abs(q) >= 1.0:
            raise DivergenceError("(a; q)_inf diverges for |q| >= 1, got q=%r" % q)
    elif isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 0:
        raise ParameterError("n must be a non-negative integer or INFINITY, got %r" % (n,))

    sign = 1.0
    log_abs = 0.0
    term = float(a)
    k = 0
    while infinite or k < n:
        if infinite and abs(term) < _NEGLIGIBLE:
            break

        if abs(term) < 0.5:
            log_abs += math.log1p(-term)
        else:
            factor = 1.0 - term
            if factor == 0.0:
                return 0.0
            if factor < 0.0:
                sign = -sign
            log_abs += math.log(abs(factor))

        term *= q
        k += 1

    return sign * math.exp(log_abs)


def _log_one_minus_r_power(gamma, k):
    """ log(1 - e^{-k gamma}) without cancellation for small k gamma """

    return math.log(-math.expm1(-k * gamma))


def log_q_factorial(gamma, k):
    """ log (R; R)_k with R = e^{-gamma} """

    return sum(_log_one_minus_r_power(gamma, i) for i in range(1, k + 1))


def log_shifted_plus_product(gamma, start):
    """ log (-R^start; R)_inf with R = e^{-gamma} """

    total = 0.0
    exponent = start
    while True:
        term = math.exp(-exponent * gamma)
        if term < _NEGLIGIBLE:
            break
        total += math.log1p(term)
        exponent += 1

    return total


def log_period_two_pr(k, C, gamma):
    """ log D(k), the limit law of the spinlabor paid after the first equilibration """

    return (-gamma * (k * (C + 1) + k * (k - 1) / 2.0)
            - log_q_factorial(gamma, k)
            - log_shifted_plus_product(gamma, C + 1))


def closed_form_pr(n, config, reservoir):
    """ Pr(L = n) in the m -> infinity limit """

    if n < 0:
        raise ParameterError("spinlabor n must be non-negative, got %r" % n)

    gamma = reservoir.gamma
    C = config.C

    total = 0.0
    if config.p_down > 0.0:
        total += config.p_down * math.exp(log_period_two_pr(n, C, gamma))
    if n >= C and config.p_up > 0.0:
        total += config.p_up * math.exp(log_period_two_pr(n - C, C, gamma))

    return total


def log_elementary_power_sum(j, k, gamma):
    """
    log e_k(R, R^2, ..., R^j), the k-th elementary symmetric polynomial of the first j powers of R.

    Evaluated as the product prod_{i<k} R^{i+1} (1 - R^{j-i}) / (1 - R^{i+1}), which equals
    R^k A(j, k) with A the nested sum over r = R.
    """

    if k > j:
        return -INFINITY

    total = 0.0
    for i in range(k):
        total += -(i + 1) * gamma + _log_one_minus_r_power(gamma, j - i) - _log_one_minus_r_power(gamma, i + 1)

    return total


def finite_step_closed_form(n, j, config, reservoir):
    """ P_{C+j}(n): the spinlabor distribution j cycles after the first equilibration """

    if j <= n:
        raise ParameterError("finite step closed form needs j > n, got j=%r n=%r" % (j, n))
    if n < 0:
        raise ParameterError("spinlabor n must be non-negative, got %r" % n)

    gamma = reservoir.gamma
    C = config.C

    # prod_{i=C+1}^{C+j} S_i with S_i = 1 / (1 + R^i)
    log_norm = -sum(math.log1p(math.exp(-i * gamma)) for i in range(C + 1, C + j + 1))

    total = 0.0
    if config.p_down > 0.0:
        total += config.p_down * math.exp(log_norm - n * C * gamma + log_elementary_power_sum(j, n, gamma))
    if n >= C and config.p_up > 0.0:
        k = n - C
        total += config.p_up * math.exp(log_norm - k * C * gamma + log_elementary_power_sum(j, k, gamma))

    return total


def nested_sum_A_bruteforce(j, n, r):
    """
    A(j, n) as the literal n-fold nested sum of r^(i_1 + ... + i_n) over 0 <= i_1 < ... < i_n < j.

    Works with any numeric type, so Fraction arguments give exact results.
    """

    _check_nested_args(j, n)
    if n > BRUTE_FORCE_MAX_N or j > BRUTE_FORCE_MAX_J:
        raise ParameterError("brute force nested sum is limited to n <= %d and j <= %d, got n=%d j=%d"
                             % (BRUTE_FORCE_MAX_N, BRUTE_FORCE_MAX_J, n, j))

    if n == 0:
        return r ** 0

    return sum((r ** sum(exponents) for exponents in itertools.combinations(range(j), n)), r - r)


def product_A(j, n, r):
    """ A(j, n) = prod_{k=0}^{n-1} (r^k - r^j) / (1 - r^{k+1}), A(j, 0) = 1 """

    _check_nested_args(j, n)

    value = r ** 0
    if r == 1:
        # every term of the nested sum is 1
        return value * math.comb(j, n)

    for k in range(n):
        value = value * (r ** k - r ** j) / (1 - r ** (k + 1))

    return value


def _check_nested_args(j, n):
    if n < 0 or j < n:
        raise ParameterError("nested sum needs j >= n >= 0, got j=%r n=%r" % (j, n))
