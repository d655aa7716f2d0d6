# Copyright 2026 The cdgame Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

"""Run configuration and report writers shared by the command line."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import csv
import io
import json
import sys

from cdgame.__version__ import __version__
from cdgame.common.errors import CDGameError

REPORT_SCHEMA = 'cdgame.report/1'
CSV_SCHEMA = 'cdgame.csv/1'
OUTPUT_FORMATS = ('json', 'csv', 'dot')
RANDOMIZED_COMMANDS = ('er-trials', 'tail-stats')

TRIAL_COLUMNS = ('trial', 'a', 'b', 'utility_a', 'utility_b', 'gray', 'edges', 'sandwich_ok')
CONCENTRATION_COLUMNS = ('n', 'p', 'trials', 'mean_utility_a', 'iqr_ratio_a', 'std_ratio_a', 'mean_bound',
                         'finite_mean_bound')


class RunConfig(object):
    """Everything needed to rerun one command."""

    FIELDS = ('command', 'graph_source', 'params', 'seed', 'output_format', 'output_path')

    def __init__(self, command, graph_source=None, params=None, seed=None, output_format='json',
                 output_path=None):
        self.command = command
        self.graph_source = graph_source
        self.params = dict(params or {})
        self.seed = seed
        self.output_format = output_format
        self.output_path = output_path
        self.validate()

    def validate(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise CDGameError('unknown output format {!r}'.format(self.output_format))
        randomized = self.command in RANDOMIZED_COMMANDS or (self.graph_source or '').startswith('er:')
        if randomized and self.seed is None:
            raise CDGameError('{} draws random graphs and needs an explicit --seed'.format(self.command))
        return self

    @classmethod
    def from_dict(cls, data):
        unknown = sorted(set(data) - set(cls.FIELDS))
        if unknown:
            raise CDGameError('unknown run config fields: {}'.format(', '.join(unknown)))
        if 'command' not in data:
            raise CDGameError('run config needs a command')
        return cls(**data)

    def to_dict(self):
        return dict((name, getattr(self, name)) for name in self.FIELDS)


def _open(path):
    if path is None or path == '-':
        return sys.stdout, False
    return open(path, 'w'), True


def write_text(text, path=None):
    out, owned = _open(path)
    try:
        out.write(text)
    finally:
        if owned:
            out.close()


def render_report(config, result):
    doc = {
        'schema': REPORT_SCHEMA,
        'version': __version__,
        'config': config.to_dict(),
        'result': result,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + '\n'


def write_report(config, result, path=None):
    write_text(render_report(config, result), path)


def parse_report(text):
    doc = json.loads(text)
    if doc.get('schema') != REPORT_SCHEMA:
        raise CDGameError('not a cdgame report: schema {!r}'.format(doc.get('schema')))
    RunConfig.from_dict(doc['config'])
    return doc


def render_csv(config, columns, rows):
    """CSV with ``# key=value`` header lines echoing the run configuration."""
    buf = io.StringIO()
    buf.write('# schema={}\n'.format(CSV_SCHEMA))
    buf.write('# command={}\n'.format(config.command))
    if config.graph_source:
        buf.write('# graph={}\n'.format(config.graph_source))
    buf.write('# seed={}\n'.format(config.seed))
    for key in sorted(config.params):
        buf.write('# {}={}\n'.format(key, config.params[key]))
    writer = csv.DictWriter(buf, fieldnames=list(columns), extrasaction='ignore', lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def read_csv(text):
    lines = [line for line in text.splitlines() if not line.startswith('#')]
    return list(csv.DictReader(lines))
