#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

from ..distribution import limit_distribution
from ..fluctuation import baseline_value, violation_curve, violation_csv, epsilon_grid
from .output import json_text, gnuplot_output
from .parser import SubParserConfig, configure_common_arguments, configure_output_arguments, \
    protocol_from_args, output_paths


class ViolationParserConfig(SubParserConfig):
    def get_name(self):
        return 'violation'

    def get_help(self):
        return 'Write the probability of violating a spinlabor bound by epsilon'

    def get_epilog(self):
        return '''
    The baseline is the bound being violated:
        symmetric   gamma^-1 ln(2/A), the Jensen bound of an unbiased memory (default)
        jensen      -gamma^-1 ln A', the Jensen bound of the actual memory bias;
                    the only baseline for which Pr(v) <= exp(-gamma eps) is guaranteed
        original    gamma^-1 ln 2
        <number>    any explicit value in units of hbar

    Examples:
        spinerase violation --C 10 --alpha 0.4 --p-up 0.1
        spinerase violation --C 10 --alpha 0.4 --p-up 0.1 --baseline jensen --epsilon-max 5
        '''

    def configure(self, parser):
        configure_common_arguments(parser)
        configure_output_arguments(parser)
        parser.add_argument('--baseline', type=str,
                            help='symmetric, jensen, original or a number (default: violation.baseline)')
        parser.add_argument('--epsilon-max', dest='epsilon_max', type=float,
                            help='Largest epsilon of the curve (default: 3)')
        parser.add_argument('--epsilon-step', dest='epsilon_step', type=float,
                            help='Spacing of the epsilon grid (default: 0.1)')

        return parser


class ViolationRunner(object):
    def __init__(self, spin_config, template):
        self.spin_config = spin_config
        self.template = template

    def run(self, args):
        config, reservoir = protocol_from_args(args, self.spin_config)
        path, fmt, stem = output_paths(args, self.spin_config, 'violation')

        kind = self.spin_config.option(args, 'baseline', 'violation.baseline')
        baseline = baseline_value(kind, config.C, config.p_up, reservoir.gamma)
        epsilons = epsilon_grid(self.spin_config.option(args, 'epsilon_max', 'violation.epsilon_max'),
                                self.spin_config.option(args, 'epsilon_step', 'violation.epsilon_step'))

        dist = limit_distribution(config, reservoir)
        points = violation_curve(dist, reservoir.gamma, baseline, epsilons)

        if fmt == 'csv':
            data = violation_csv(points)
        else:
            data = json_text({'baseline': baseline, 'points': [p._asdict() for p in points]})

        outputs = [(path, data)]
        outputs += gnuplot_output(args, fmt, self.template, 'violation.gp.j2', stem, path, dict(
            C=config.C, alpha=reservoir.alpha, p_up=config.p_up, baseline=kind))

        return dict(outputs=outputs, stdout='baseline=%.6f pr_violation(0)=%.6f' % (baseline, points[0].pr_violation))
