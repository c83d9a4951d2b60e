#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

from ..montecarlo import simulate_batch
from .output import json_text, gnuplot_output
from .parser import SubParserConfig, configure_common_arguments, configure_output_arguments, \
    protocol_from_args, output_paths


class SimulateParserConfig(SubParserConfig):
    def get_name(self):
        return 'simulate'

    def get_help(self):
        return 'Sample erasure trajectories and write the spinlabor histogram'

    def get_epilog(self):
        return '''
    Examples:
        # A million shots of the standard protocol
        spinerase simulate --C 1 --alpha 0.2 --shots 1000000 --seed 7

        # Same result, spread over 4 processes
        spinerase simulate --C 1 --alpha 0.2 --shots 1000000 --seed 7 --workers 4
        '''

    def configure(self, parser):
        configure_common_arguments(parser)
        configure_output_arguments(parser)
        parser.add_argument('--shots', type=int, required=True, help='Number of sampled erasures')
        parser.add_argument('--seed', type=int, required=True, help='Seed of the random streams')
        parser.add_argument('--workers', type=int, help='Worker processes (default: parallel.workers, 1)')
        parser.add_argument('--block-size', dest='block_size', type=int,
                            help='Shots per worker task (default: montecarlo.block_size, 8192)')
        parser.add_argument('--n-bar', dest='n_bar', type=int,
                            help='Ancilla count used in the entropy production (default: max cycles)')

        return parser


class SimulateRunner(object):
    def __init__(self, spin_config, template):
        self.spin_config = spin_config
        self.template = template

    def run(self, args):
        config, reservoir = protocol_from_args(args, self.spin_config)
        path, fmt, stem = output_paths(args, self.spin_config, 'simulate')

        result = simulate_batch(args.seed, args.shots, config, reservoir,
                                workers=self.spin_config.option(args, 'workers', 'parallel.workers'),
                                block_size=self.spin_config.option(args, 'block_size', 'montecarlo.block_size'),
                                N_bar=args.n_bar)
        empirical = result.empirical

        outputs = [(path, empirical.to_csv() if fmt == 'csv' else empirical.to_json()),
                   (stem + '.summary.json', json_text(result.summary))]
        outputs += gnuplot_output(args, fmt, self.template, 'simulate.gp.j2', stem, path, dict(
            seed=args.seed, shots=empirical.shots))

        return dict(outputs=outputs, stdout='mean=%.6f variance=%.6f shots=%d' % (
            result.summary['mean'], result.summary['variance'], empirical.shots))
