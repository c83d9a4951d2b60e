#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging
import multiprocessing

from ..bounds import bounds_report, bounds_csv
from ..core import ProtocolConfig, gamma_from_alpha
from .output import json_text, gnuplot_output
from .parser import SubParserConfig, configure_output_arguments, output_paths, parse_int_range, \
    parse_float_range

logger = logging.getLogger(__name__)


class SweepParserConfig(SubParserConfig):
    def get_name(self):
        return 'sweep'

    def get_help(self):
        return 'Write one bounds row for every (C, alpha) of a grid'

    def get_epilog(self):
        return '''
    Ranges are inclusive start:stop[:step] or comma separated lists.

    Examples:
        spinerase sweep --C-range 0:10 --alpha-range 0.05:0.45:0.05
        spinerase sweep --C-range 0,1,4,10 --alpha-range 0.2,0.4 --format json
        '''

    def configure(self, parser):
        parser.add_argument('--C-range', dest='C_range', type=str, required=True,
                            help='Values of C, e.g. 0:10 or 0,1,4')
        parser.add_argument('--alpha-range', dest='alpha_range', type=str, required=True,
                            help='Values of alpha, e.g. 0.05:0.45:0.05')
        parser.add_argument('--p-up', dest='p_up', type=float,
                            help='Probability that the memory starts spin-up (default: protocol.p_up, 0.5)')
        parser.add_argument('--tail-tol', dest='tail_tol', type=float,
                            help='Convergence tolerance of the m -> infinity limits (default: 1e-14)')
        parser.add_argument('--workers', type=int, help='Worker processes (default: parallel.workers, 1)')
        configure_output_arguments(parser)

        return parser


class SweepRunner(object):
    def __init__(self, spin_config, template):
        self.spin_config = spin_config
        self.template = template

    def run(self, args):
        C_values = parse_int_range(args.C_range)
        alpha_values = parse_float_range(args.alpha_range)
        p_up = self.spin_config.option(args, 'p_up', 'protocol.p_up')
        tail_tol = self.spin_config.option(args, 'tail_tol', 'protocol.tail_tol')
        workers = self.spin_config.option(args, 'workers', 'parallel.workers')

        # fail on bad parameters before any worker starts
        for alpha in alpha_values:
            gamma_from_alpha(alpha)
        ProtocolConfig(max(C_values), p_up, tail_tol=tail_tol)

        grid = [(C, alpha, p_up, tail_tol) for C in C_values for alpha in alpha_values]
        logger.info("sweeping %d grid points on %d worker(s)", len(grid), workers)

        if workers > 1 and len(grid) > 1:
            pool = multiprocessing.Pool(processes=min(workers, len(grid)))
            try:
                reports = pool.starmap(bounds_report, grid)
            finally:
                pool.close()
                pool.join()
        else:
            reports = [bounds_report(*point) for point in grid]

        path, fmt, stem = output_paths(args, self.spin_config, 'sweep')
        if fmt == 'csv':
            data = bounds_csv(reports)
        else:
            data = json_text([report.to_dict() for report in reports])

        outputs = [(path, data)]
        outputs += gnuplot_output(args, fmt, self.template, 'sweep.gp.j2', stem, path, dict(
            C_values=C_values, alpha_values=alpha_values))

        return dict(outputs=outputs, stdout='%d grid points' % len(reports))
