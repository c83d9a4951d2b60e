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

from .. import ParameterError


def csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])

    return buf.getvalue()


def json_text(data):
    return json.dumps(data, indent=2) + '\n'


def record_text(record, fmt):
    """ A single flat record as a one-row csv or a json object """

    if fmt == 'json':
        return json_text(record)

    return csv_text(list(record), [[record[k] for k in record]])


def gnuplot_output(args, fmt, template, source, stem, data_path, variables):
    """ [(stem.gp, script)] when --gnuplot-script was given, else [] """

    if not getattr(args, 'gnuplot_script', False):
        return []
    if fmt != 'csv':
        raise ParameterError("--gnuplot-script needs --format csv")

    variables = dict(variables, data=data_path)
    return [(stem + '.gp', template.render(source, variables))]
