#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import argparse
import os
import sys

from .. import ParameterError
from ..core import ProtocolConfig, ReservoirParams

DASH_LOOKALIKES = (u'–', u'—', u'−')


class RootParser(object):
    def __init__(self, sub_parsers=None):
        """
        :type sub_parsers: list[SubParserConfig]
        """

        if sub_parsers is None:
            sub_parsers = []
        self.sub_parsers = sub_parsers

    def _get_parser(self):
        parser = argparse.ArgumentParser(description='Simulate and analyse erasure of a spin memory against a '
                                                     'spin reservoir', prog='spinerase')
        parser.add_argument('--root-dir', type=str, help='Directory that receives the output files and where the '
                                                         '.spinerase.yaml lookup ends; defaults to the current dir')
        parser.add_argument('--verbose', '-v', action='count',
                            help='Get more verbose output from commands')

        subparsers = parser.add_subparsers(dest='command')
        subparsers.required = True

        for subparser_conf in self.sub_parsers:
            subparser_instance = subparsers.add_parser(subparser_conf.get_name(),
                                                       help=subparser_conf.get_help(),
                                                       epilog=subparser_conf.get_epilog(),
                                                       formatter_class=subparser_conf.get_formatter())
            subparser_conf.configure(subparser_instance)

        return parser

    @staticmethod
    def _check_args_for_dashes(args):
        if args is None:
            args = sys.argv[1:]

        for value in args:
            if isinstance(value, str) and value.startswith(DASH_LOOKALIKES):
                raise ParameterError('Invalid character in argument "{0}", most likely an "en dash", '
                                     'replace it with normal dash -'.format(value))

    def parse_args(self, args=None):
        RootParser._check_args_for_dashes(args)
        return self._get_parser().parse_args(args)


class SubParserConfig(object):
    def get_name(self):
        pass

    def configure(self, parser):
        pass

    def get_formatter(self):
        return argparse.RawDescriptionHelpFormatter

    def get_help(self):
        return ""

    def get_epilog(self):
        return ""


def configure_common_arguments(parser, alpha_required=True):
    parser.add_argument('--C', dest='C', type=int, default=1,
                        help='CNOT steps before the first equilibration (default: 1, the standard protocol)')
    parser.add_argument('--alpha', type=float, required=alpha_required,
                        help='Spin polarisation of the reservoir, 0 < alpha < 0.5')
    parser.add_argument('--p-up', dest='p_up', type=float,
                        help='Probability that the memory starts spin-up (default: protocol.p_up, 0.5)')
    parser.add_argument('--tail-tol', dest='tail_tol', type=float,
                        help='Convergence tolerance of the m -> infinity limits (default: 1e-14)')
    parser.add_argument('--max-cycles', dest='max_cycles', type=int,
                        help='CNOT steps of the truncated protocol; derived from gamma when omitted')

    return parser


def configure_output_arguments(parser, plot=True):
    parser.add_argument('--format', dest='format', choices=['csv', 'json'],
                        help='Format of the emitted data file (default: output.format, csv)')
    parser.add_argument('--out', type=str,
                        help='Data file to write, relative to the root dir')
    if plot:
        parser.add_argument('--gnuplot-script', dest='gnuplot_script', action='store_true',
                            help='Also write a gnuplot script next to the data file')

    return parser


def protocol_from_args(args, spin_config, C=None, alpha=None):
    """ Build (ProtocolConfig, ReservoirParams) from the flags, falling back to the layered config """

    C = args.C if C is None else C
    alpha = args.alpha if alpha is None else alpha

    config = ProtocolConfig(C,
                            p_up=spin_config.option(args, 'p_up', 'protocol.p_up'),
                            max_cycles=spin_config.option(args, 'max_cycles', 'protocol.max_cycles'),
                            tail_tol=spin_config.option(args, 'tail_tol', 'protocol.tail_tol'),
                            support_tol=spin_config['protocol.support_tol'])

    return config, ReservoirParams.from_alpha(alpha)


def output_paths(args, spin_config, default_stem):
    """ (data file, format, stem) for a command """

    fmt = spin_config.option(args, 'format', 'output.format')
    path = args.out or '%s.%s' % (default_stem, fmt)
    stem, _ = os.path.splitext(path)

    return path, fmt, stem


def parse_int_range(text):
    """ '0:10' (inclusive), '0:10:2' or '0,1,4' """

    values = _parse_range(text, int)
    if any(v < 0 for v in values):
        raise ParameterError("C values must be non-negative, got %r" % text)

    return values


def parse_float_range(text):
    """ '0.05:0.45:0.05' (inclusive) or '0.2,0.4' """

    return _parse_range(text, float)


def _parse_range(text, kind):
    try:
        if ':' in text:
            parts = [kind(p) for p in text.split(':')]
            if len(parts) == 2:
                parts.append(kind(1))
            if len(parts) != 3 or parts[2] <= 0:
                raise ValueError(text)

            start, stop, step = parts
            count = int((stop - start) / step + 1e-9) + 1
            values = [kind(round(start + i * step, 12)) for i in range(max(count, 0))]
        else:
            values = [kind(p) for p in text.split(',') if p.strip()]
    except ValueError:
        raise ParameterError("cannot parse range %r" % text)

    if not values:
        raise ParameterError("range %r is empty" % text)

    return values
