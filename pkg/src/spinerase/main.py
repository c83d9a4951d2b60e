#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import logging
import os

from simpledi import Container, auto, cache, instance, ListInstanceProvider

from .cli import err
from .cli.bounds import BoundsParserConfig, BoundsRunner
from .cli.dist import DistParserConfig, DistRunner
from .cli.jarzynski import JarzynskiParserConfig, JarzynskiRunner
from .cli.parser import RootParser
from .cli.simulate import SimulateParserConfig, SimulateRunner
from .cli.sweep import SweepParserConfig, SweepRunner
from .cli.table1 import Table1ParserConfig, Table1Runner
from .cli.violation import ViolationParserConfig, ViolationRunner
from . import ErasureException, ParameterError, Executor
from .jinja import Template
from .spinconfig import SpinConfig

logger = logging.getLogger(__name__)


def configure_logging(args):
    if args.verbose:
        if args.verbose > 1:
            logging.basicConfig(level=logging.DEBUG)
        else:
            logging.basicConfig(level=logging.INFO)


class AppContainer(Container):
    def __init__(self, argv=None):
        super(AppContainer, self).__init__()

        self.argv = instance(argv)

        self.configure_parsers()

        self.dist_runner = auto(DistRunner)
        self.simulate_runner = auto(SimulateRunner)
        self.bounds_runner = auto(BoundsRunner)
        self.table1_runner = auto(Table1Runner)
        self.violation_runner = auto(ViolationRunner)
        self.jarzynski_runner = auto(JarzynskiRunner)
        self.sweep_runner = auto(SweepRunner)

        self.spin_config = cache(lambda c: SpinConfig(c.root_dir))
        self.template = cache(auto(Template))

        # bind the output writer
        self.execute = lambda c: Executor(c.root_dir)

        self.configure()

    def configure_parsers(self):
        self.root_parser = auto(RootParser)

        parsers = ListInstanceProvider()
        parsers.add(auto(DistParserConfig))
        parsers.add(auto(SimulateParserConfig))
        parsers.add(auto(BoundsParserConfig))
        parsers.add(auto(Table1ParserConfig))
        parsers.add(auto(ViolationParserConfig))
        parsers.add(auto(JarzynskiParserConfig))
        parsers.add(auto(SweepParserConfig))
        self.sub_parsers = parsers

    def configure(self):
        args = self.root_parser.parse_args(self.argv)
        configure_logging(args)

        logger.debug('cli args: %s', args)

        # Bind some very useful dependencies
        self.console_args = cache(instance(args))
        self.root_dir = cache(lambda c: get_root_dir(c.console_args))
        self.package_dir = lambda c: os.path.dirname(__file__)

        logger.info('root dir: %s', self.root_dir)

        return args

    def run(self):
        command_name = '%s_runner' % self.console_args.command
        runner_instance = self.get_instance(command_name)

        return runner_instance.run(self.console_args)


def run(args=None):
    """ App entry point, returns the process exit code """

    try:
        app_container = AppContainer(args)
        output = app_container.run()
    except ErasureException as e:
        err(e)
        return e.exit_code

    if type(output) is int:
        return output

    return app_container.execute(output)


def get_root_dir(args):
    """ Either the root_dir option or the current working dir """

    if args.root_dir:
        if not os.path.isdir(os.path.realpath(args.root_dir)):
            raise ParameterError("Specified root dir '%s' does not exists" % os.path.realpath(args.root_dir))

        return os.path.realpath(args.root_dir)

    return os.path.realpath(os.getcwd())
