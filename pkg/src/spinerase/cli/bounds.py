#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

from ..bounds import bounds_report, bounds_csv, spintherm_per_step
from .output import json_text
from .parser import SubParserConfig, configure_common_arguments, configure_output_arguments, \
    protocol_from_args, output_paths


class BoundsParserConfig(SubParserConfig):
    def get_name(self):
        return 'bounds'

    def get_help(self):
        return 'Compare the mean erasure cost with every analytic bound'

    def configure(self, parser):
        configure_common_arguments(parser)
        configure_output_arguments(parser, plot=False)
        parser.add_argument('--per-step', dest='per_step', action='store_true',
                            help='Also write the mean spintherm of every equilibration step')

        return parser


class BoundsRunner(object):
    def __init__(self, spin_config):
        self.spin_config = spin_config

    def run(self, args):
        config, reservoir = protocol_from_args(args, self.spin_config)
        path, fmt, stem = output_paths(args, self.spin_config, 'bounds')

        report = bounds_report(config.C, reservoir.alpha, config.p_up, config.tail_tol)
        outputs = [(path, bounds_csv([report]) if fmt == 'csv' else json_text(report.to_dict()))]

        if args.per_step:
            steps = [{'m': m, 'spintherm': value} for m, value in spintherm_per_step(config, reservoir)]
            outputs.append((stem + '.steps.json', json_text(steps)))

        return dict(outputs=outputs, stdout='mean_L=%.6f R=%.4f delta_B=%.6f' % (
            report.mean_L, report.R, report.delta_B))
