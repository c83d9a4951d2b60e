#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import sys

COLORS = {
    'red': '0;31',
    'green': '0;32',
    'yellow': '0;33',
    'blue': '0;34',
    'dark gray': '1;30',
}


def display(msg, stderr=False, color=None):
    stream = sys.stderr if stderr else sys.stdout
    if color in COLORS and stream.isatty():
        msg = '\033[%sm%s\033[0m' % (COLORS[color], msg)

    stream.write('%s\n' % msg)
    stream.flush()


def err(msg):
    display(str(msg), stderr=True, color='red')
