#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import csv
import io
import json
import os

from spinerase.main import AppContainer, run


def app(root_dir, *args):
    return AppContainer(['--root-dir', str(root_dir)] + list(args))


def run_cli(root_dir, *args):
    """ Run the whole cli like the console script does and return the exit code """

    return run(['--root-dir', str(root_dir)] + list(args))


def read_text(root_dir, name):
    with io.open(os.path.join(str(root_dir), name), encoding='utf-8') as f:
        return f.read()


def read_json(root_dir, name):
    return json.loads(read_text(root_dir, name))


def read_csv(root_dir, name):
    return list(csv.DictReader(io.StringIO(read_text(root_dir, name))))
