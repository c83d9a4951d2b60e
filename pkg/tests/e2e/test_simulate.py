#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import pytest

from common import run_cli, read_text, read_json, read_csv


def test_simulate_writes_histogram_and_summary(tmp_path, capsys):
    code = run_cli(tmp_path, 'simulate', '--C', '1', '--alpha', '0.2', '--shots', '20000', '--seed', '7')
    out, err = capsys.readouterr()

    assert code == 0
    assert 'shots=20000' in out

    rows = read_csv(tmp_path, 'simulate.csv')
    assert list(rows[0]) == ['n', 'count']
    assert sum(int(row['count']) for row in rows) == 20000

    summary = read_json(tmp_path, 'simulate.summary.json')
    assert summary['seed'] == 7
    assert summary['shots'] == 20000
    assert summary['mean'] == pytest.approx(0.5794, abs=0.03)
    assert summary['ift_lhs'] == pytest.approx(1.0, abs=0.05)


def test_simulate_is_reproducible(tmp_path):
    first = tmp_path / 'first'
    second = tmp_path / 'second'
    first.mkdir()
    second.mkdir()

    assert run_cli(first, 'simulate', '--C', '2', '--alpha', '0.35', '--p-up', '0.3', '--shots', '9000',
                   '--seed', '11', '--block-size', '1000') == 0
    assert run_cli(second, 'simulate', '--C', '2', '--alpha', '0.35', '--p-up', '0.3', '--shots', '9000',
                   '--seed', '11', '--workers', '3') == 0

    assert read_text(first, 'simulate.csv') == read_text(second, 'simulate.csv')
    assert read_text(first, 'simulate.summary.json') == read_text(second, 'simulate.summary.json')


def test_simulate_gnuplot_script(tmp_path):
    assert run_cli(tmp_path, 'simulate', '--alpha', '0.3', '--shots', '100', '--seed', '1', '--gnuplot-script') == 0
    assert 'simulate.csv' in read_text(tmp_path, 'simulate.gp')


def test_simulate_rejects_bad_counts(tmp_path):
    assert run_cli(tmp_path, 'simulate', '--alpha', '0.2', '--shots', '0', '--seed', '1') == 2
    assert run_cli(tmp_path, 'simulate', '--alpha', '0.2', '--shots', '10', '--seed', '-1') == 2
    assert run_cli(tmp_path, 'simulate', '--alpha', '0.2', '--shots', '10', '--seed', '1', '--workers', '0') == 2
