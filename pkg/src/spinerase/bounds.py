#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import csv
import io
import logging
import math

import numpy as np

from .core import ProtocolConfig, ReservoirParams, gamma_from_alpha
from .distribution import mean_spinlabor, up_probabilities
from .fluctuation import symmetric_factor, asymmetric_factor

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)

TABLE1_POINTS = [(0, 0.2), (1, 0.2), (0, 0.4), (1, 0.4)]


def spinlabor_bound_integral(C, p_up, gamma):
    return C * p_up + math.log1p(math.exp(-(C + 1) * gamma)) / gamma


def spinlabor_bound_jensen(C, gamma):
    return math.log(2.0 / symmetric_factor(C, gamma)) / gamma


def spinlabor_bound_jensen_asymmetric(C, p_up, gamma):
    return -math.log(asymmetric_factor(C, p_up, gamma)) / gamma


def spinlabor_bound_universal(gamma):
    return LN2 / gamma - 0.5


def _protocol(C, p_up, tail_tol):
    return ProtocolConfig(C, p_up, tail_tol=tail_tol)


def spintherm_total(C, p_up, gamma, tail_tol=1e-14):
    """ Mean spintherm absorbed by the reservoir over the whole erasure: <L> + p_up """

    return mean_spinlabor(_protocol(C, p_up, tail_tol), ReservoirParams.from_gamma(gamma)) + p_up


def spintherm_per_step(config, reservoir):
    """
    Mean spintherm absorbed by the reservoir in each equilibration step, as (m, value) pairs.

    At step m the memory and its m ancillas flip together, so the reservoir gains
    (m+1) times the drop in the all-up probability. The values add up to <L> + p_up.
    """

    up = up_probabilities(config, reservoir)
    before = np.concatenate([[config.p_up], up[:-1]])
    m = np.arange(config.C, config.C + up.size)
    values = (m + 1) * (before - up)

    return [(int(step), float(value)) for step, value in zip(m, values)]


def spintherm_bound(C, p_up, gamma):
    return (C + 1) * p_up + math.log1p(math.exp(-(C + 1) * gamma)) / gamma


def spintherm_bound_universal(gamma):
    return LN2 / gamma


def R_diagnostic(C, alpha, p_up, tail_tol=1e-14):
    reservoir = ReservoirParams.from_alpha(alpha)
    return mean_spinlabor(_protocol(C, p_up, tail_tol), reservoir) - LN2 / reservoir.gamma


def delta_B(C, gamma):
    """ Gap between the integral bound and the Jensen bound at p_up = 1/2 """

    return C / 2.0 - math.log(2.0 / (1.0 + math.exp(-C * gamma))) / gamma


class BoundsReport(object):
    """ All erasure cost bounds for one (C, alpha, p_up) point """

    FIELDS = ['C', 'alpha', 'p_up', 'mean_L', 'bound_integral', 'bound_jensen', 'bound_universal_L',
              'spintherm_mean', 'bound_spintherm', 'bound_universal_Q', 'R', 'delta_B']

    def __init__(self, **values):
        missing = set(self.FIELDS) - set(values)
        if missing:
            raise TypeError("missing report fields: %s" % ', '.join(sorted(missing)))

        for name in self.FIELDS:
            setattr(self, name, values[name])

    def to_dict(self):
        return dict((name, getattr(self, name)) for name in self.FIELDS)

    def to_row(self):
        return [self.C] + [repr(float(getattr(self, name))) for name in self.FIELDS[1:]]

    def __repr__(self):
        return 'BoundsReport(%s)' % ', '.join('%s=%r' % (name, getattr(self, name)) for name in self.FIELDS)


def bounds_report(C, alpha, p_up=0.5, tail_tol=1e-14):
    gamma = gamma_from_alpha(alpha)
    config = _protocol(C, p_up, tail_tol)
    mean_L = mean_spinlabor(config, ReservoirParams(alpha, gamma))

    report = BoundsReport(
        C=C,
        alpha=alpha,
        p_up=p_up,
        mean_L=mean_L,
        bound_integral=spinlabor_bound_integral(C, p_up, gamma),
        bound_jensen=spinlabor_bound_jensen_asymmetric(C, p_up, gamma),
        bound_universal_L=spinlabor_bound_universal(gamma),
        spintherm_mean=mean_L + p_up,
        bound_spintherm=spintherm_bound(C, p_up, gamma),
        bound_universal_Q=spintherm_bound_universal(gamma),
        R=mean_L - LN2 / gamma,
        delta_B=delta_B(C, gamma),
    )
    logger.debug("%r", report)

    return report


def bounds_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(BoundsReport.FIELDS)
    for report in reports:
        writer.writerow(report.to_row())

    return buf.getvalue()


def table1(tail_tol=1e-14):
    """ (C, alpha, R) for the reference protocol points """

    return [(C, alpha, R_diagnostic(C, alpha, 0.5, tail_tol)) for C, alpha in TABLE1_POINTS]
