#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import os

from jinja2 import FileSystemLoader, Environment, StrictUndefined, Undefined, DebugUndefined
from jinja2.loaders import ChoiceLoader


def gnuplot_literal(value):
    """ Quote a string for a gnuplot script """

    return '"%s"' % str(value).replace('\\', '\\\\').replace('"', '\\"')


class Template(object):

    def __init__(self, package_dir, spin_config):
        loader = ChoiceLoader([
            FileSystemLoader(os.path.join(package_dir, 'data', 'gnuplot')),
            FileSystemLoader("/")
        ])

        mode = spin_config.get('jinja2.undefined')
        undefined = Undefined
        if mode == 'StrictUndefined':
            undefined = StrictUndefined
        elif mode == 'DebugUndefined':
            undefined = DebugUndefined

        self.env = Environment(loader=loader, undefined=undefined, keep_trailing_newline=True)
        self.env.filters['gnuplot'] = gnuplot_literal

    def render(self, source, vars):
        jinja_template = self.env.get_template(source)

        return jinja_template.render(**vars)
