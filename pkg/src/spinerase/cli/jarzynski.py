#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging

from .. import ParameterError
from ..distribution import limit_distribution
from ..fluctuation import jarzynski_lhs, symmetric_factor, asymmetric_factor, exponential_average, \
    delta_free_spin, period_factors
from .output import record_text
from .parser import SubParserConfig, configure_common_arguments, configure_output_arguments, \
    protocol_from_args, output_paths

logger = logging.getLogger(__name__)


class JarzynskiParserConfig(SubParserConfig):
    def get_name(self):
        return 'jarzynski'

    def get_help(self):
        return 'Evaluate the Jarzynski-like equality and the free spin angular momentum change'

    def configure(self, parser):
        configure_common_arguments(parser)
        configure_output_arguments(parser, plot=False)
        parser.add_argument('--n-bar', dest='n_bar', type=int,
                            help='Number of ancillas in the free spin angular momentum (default: max cycles)')

        return parser


class JarzynskiRunner(object):
    def __init__(self, spin_config):
        self.spin_config = spin_config

    def run(self, args):
        config, reservoir = protocol_from_args(args, self.spin_config)
        path, fmt, _ = output_paths(args, self.spin_config, 'jarzynski')
        gamma = reservoir.gamma

        dist = limit_distribution(config, reservoir)
        lhs = jarzynski_lhs(dist, gamma)
        first, second = period_factors(config, reservoir)
        N_bar = args.n_bar if args.n_bar is not None else config.cycles(gamma)
        if N_bar < 1:
            raise ParameterError("--n-bar must be a positive integer, got %r" % N_bar)

        record = {
            'C': config.C,
            'alpha': reservoir.alpha,
            'gamma': gamma,
            'p_up': config.p_up,
            'lhs': lhs,
            'A': symmetric_factor(config.C, gamma),
            'A_prime': asymmetric_factor(config.C, config.p_up, gamma),
            'period1_factor': first,
            'period2_factor': second,
            'exponential_average': exponential_average(dist, gamma),
            'mean_L': dist.mean(),
            'N_bar': N_bar,
            'delta_F': None,
            'gamma_M_initial': None,
        }

        if config.degenerate:
            logger.warning("free spin angular momentum is undefined for p_up=%r", config.p_up)
        else:
            free_spin = delta_free_spin(config.C, config.p_up, gamma, N_bar)
            record['delta_F'] = free_spin.delta_F
            record['gamma_M_initial'] = free_spin.gamma_M_initial

        return dict(outputs=[(path, record_text(record, fmt))],
                    stdout='lhs=%.6f A_prime=%.6f exponential_average=%.6f' % (
                        lhs, record['A_prime'], record['exponential_average']))
