#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging

from ..bounds import spinlabor_bound_integral, spinlabor_bound_universal
from ..core import classify_reservoir
from ..distribution import limit_distribution, mean_spinlabor, variance_spinlabor, gaussian_distance
from ..fluctuation import baseline_value
from .output import json_text, gnuplot_output
from .parser import SubParserConfig, configure_common_arguments, configure_output_arguments, \
    protocol_from_args, output_paths

logger = logging.getLogger(__name__)

BOUND_KINDS = ['symmetric', 'jensen', 'original', 'integral', 'universal']


def spinlabor_bound(kind, config, reservoir):
    if kind == 'integral':
        return spinlabor_bound_integral(config.C, config.p_up, reservoir.gamma)
    if kind == 'universal':
        return spinlabor_bound_universal(reservoir.gamma)

    return baseline_value(kind, config.C, config.p_up, reservoir.gamma)


class DistParserConfig(SubParserConfig):
    def get_name(self):
        return 'dist'

    def get_help(self):
        return 'Write the exact limit spinlabor distribution'

    def get_epilog(self):
        return '''
    Examples:
        # Standard protocol against a cold reservoir
        spinerase dist --C 1 --alpha 0.2

        # Biased memory, two peaks C apart, with a plotting script
        spinerase dist --C 10 --alpha 0.4 --p-up 0.1 --gnuplot-script
        '''

    def configure(self, parser):
        configure_common_arguments(parser)
        configure_output_arguments(parser)
        parser.add_argument('--bound', choices=BOUND_KINDS, default='symmetric',
                            help='Bound reported next to the mean in the summary (default: symmetric)')

        return parser


class DistRunner(object):
    def __init__(self, spin_config, template):
        self.spin_config = spin_config
        self.template = template

    def run(self, args):
        config, reservoir = protocol_from_args(args, self.spin_config)
        dist = limit_distribution(config, reservoir)
        path, fmt, stem = output_paths(args, self.spin_config, 'dist')

        mean = dist.mean()
        bound = spinlabor_bound(args.bound, config, reservoir)
        summary = {
            'C': config.C,
            'alpha': reservoir.alpha,
            'gamma': reservoir.gamma,
            'p_up': config.p_up,
            'reservoir': classify_reservoir(config.C, reservoir.alpha),
            'mean': mean,
            'mean_series': mean_spinlabor(config, reservoir),
            'variance': variance_spinlabor(config, reservoir),
            'bound_kind': args.bound,
            'bound': bound,
            'gaussian_distance': gaussian_distance(dist),
            'cycles': dist.cycles,
        }

        outputs = [(path, dist.to_csv() if fmt == 'csv' else dist.to_json()),
                   (stem + '.summary.json', json_text(summary))]
        outputs += gnuplot_output(args, fmt, self.template, 'dist.gp.j2', stem, path, dict(
            C=config.C, alpha=reservoir.alpha, p_up=config.p_up, mean=mean, bound=bound))

        return dict(outputs=outputs, stdout='mean=%.6f %s bound=%.6f' % (mean, args.bound, bound))
