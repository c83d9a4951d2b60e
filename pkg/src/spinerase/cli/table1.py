#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

from ..bounds import table1
from .parser import SubParserConfig


class Table1ParserConfig(SubParserConfig):
    def get_name(self):
        return 'table1'

    def get_help(self):
        return 'Print the R diagnostic for the four reference protocol points'


class Table1Runner(object):
    def __init__(self, spin_config):
        self.spin_config = spin_config

    def run(self, args):
        lines = ['C alpha R']
        for C, alpha, R in table1(self.spin_config['protocol.tail_tol']):
            lines.append('%d %.1f %.2f' % (C, alpha, R))

        return dict(stdout='\n'.join(lines))
