#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import io
import logging
import os
import traceback

from .cli import display

logger = logging.getLogger(__name__)


class ErasureException(Exception):
    exit_code = 1


class ParameterError(ErasureException):
    """ Raised for any input outside the domain of the model; maps to exit code 2 """
    exit_code = 2


class RegimeError(ParameterError):
    pass


class DegenerateMemoryError(ParameterError):
    pass


class DivergenceError(ParameterError):
    pass


class ConvergenceError(ErasureException):
    exit_code = 3


class Executor(object):
    """ All cli commands return a dict(outputs=[(path, text), ...], stdout=...) that is written by this handler"""

    def __init__(self, output_dir):
        self.output_dir = output_dir

    def __call__(self, result):
        try:
            return self._execute(result)
        except Exception as ex:
            display(str(ex), stderr=True, color='red')
            display('------- TRACEBACK ----------', stderr=True, color='dark gray')
            traceback.print_exc()
            display('------ END TRACEBACK -------', stderr=True, color='dark gray')
            return 1

    def _execute(self, result):
        if not result or not isinstance(result, dict):
            return 0

        # single writer, in the order the runner produced them
        for rel_path, content in result.get('outputs', []):
            path = rel_path if os.path.isabs(rel_path) else os.path.join(self.output_dir, rel_path)
            parent = os.path.dirname(path)
            if parent and not os.path.isdir(parent):
                os.makedirs(parent)

            with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(content)
            logger.info('wrote %s (%d bytes)', path, len(content))
            display('wrote %s' % path, stderr=True, color='yellow')

        if result.get('stdout'):
            display(result['stdout'])

        return 0
