#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import os
import yaml
import logging

from . import ParameterError

logger = logging.getLogger(__name__)


def file_tree(start_dir, search_fname):
    """ From the given dir returns a list with all the files in the file tree to the root dir """

    parts = os.path.realpath(start_dir).split('/')

    file_stack = []

    while parts:
        dir_name = '/'.join(parts)
        fname = dir_name + '/' + search_fname
        file_stack.append(fname)

        parts = parts[:-1]

    return file_stack


class SpinConfig(object):
    """
    Parses all the .spinerase.yaml files that it can find starting from the
    system wide one down the path to the one in the root dir

    For --root-dir /data/runs/cold:

        /etc/spinerase/.spinerase.yaml
        ~/.spinerase.yaml
        /data/.spinerase.yaml
        /data/runs/.spinerase.yaml
        /data/runs/cold/.spinerase.yaml

    Command line flags take precedence over every file.
    """

    DEFAULTS = {
        # protocol settings
        'protocol.p_up': 0.5,
        'protocol.tail_tol': 1e-14,
        'protocol.max_cycles': None,  # derived from gamma
        'protocol.support_tol': 1e-15,

        # sampling
        'montecarlo.block_size': 8192,
        'parallel.workers': 1,

        # emitted files
        'output.format': 'csv',

        # violation curves
        'violation.baseline': 'symmetric',
        'violation.epsilon_max': 3.0,
        'violation.epsilon_step': 0.1,

        # template settings
        'jinja2.undefined': 'StrictUndefined',  # Undefined, DebugUndefined
    }

    DEFAULT_PATHS = [
        '/etc/spinerase/.spinerase.yaml',
        '~/.spinerase.yaml'
    ]

    def __init__(self, root_dir):
        self.config = dict(self.DEFAULTS)

        paths = self.DEFAULT_PATHS[:]
        for fname in reversed(file_tree(root_dir, '.spinerase.yaml')):
            if fname not in paths:
                paths.append(fname)

        parsed_files = []
        logger.debug("parsing %s", paths)

        for config_path in paths:
            config_path = os.path.realpath(os.path.expanduser(config_path))
            if os.path.isfile(config_path):
                logger.info("parsing %s", config_path)
                with open(config_path) as f:
                    config = yaml.safe_load(f.read())
                    if isinstance(config, dict):
                        parsed_files.append(config_path)
                        self.config.update(config)
                    else:
                        logger.error("cannot parse yaml dict from file: %s", config_path)

        self.parsed_files = parsed_files
        logger.info("final spinerase config: %s from %s", self.config, parsed_files)

    def get(self, item, default=None):
        return self.config.get(item, default)

    def option(self, args, name, key):
        """ The command line value of `name` when it was given, otherwise the config value of `key` """

        value = getattr(args, name, None)
        if value is not None:
            return value

        value = self[key]
        default = self.DEFAULTS.get(key)
        if value is None or isinstance(default, bool) or not isinstance(default, (int, float)):
            return value

        # yaml reads 1e-14 as a string
        try:
            return type(default)(value)
        except (TypeError, ValueError):
            raise ParameterError("%s must be a number, got %r from %s" % (key, value, self.parsed_files))

    def __contains__(self, item):
        return item in self.config

    def __getitem__(self, item):
        if item not in self.config:
            raise KeyError("%s not found in %s" % (item, self.parsed_files))

        return self.config[item]

    def all(self):
        return self.config
