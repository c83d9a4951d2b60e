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
import logging
import multiprocessing
from collections import namedtuple

import numpy as np
from scipy.special import logsumexp

from .. import ParameterError
from ..fluctuation import stochastic_entropy_production
from .trajectory import block_rng, up_probability_table

logger = logging.getLogger(__name__)

ShotArrays = namedtuple('ShotArrays', ['initial_up', 'spinlabor', 'spintherm', 'final_up', 'cycles'])

BatchResult = namedtuple('BatchResult', ['empirical', 'summary'])

# shots per random stream, part of the seed contract
STREAM_SHOTS = 1024


def simulate_block(rng, shots, config, reservoir):
    """ Vectorised run of `shots` erasures drawing from one random stream """

    cycles = config.cycles(reservoir.gamma)
    q_up = up_probability_table(reservoir.gamma, cycles)

    initial_up = rng.random(shots) < config.p_up
    state = initial_up.copy()
    spinlabor = config.C * initial_up.astype(np.int64)
    spintherm = np.zeros(shots, dtype=np.int64)

    for m in range(config.C, cycles + 1):
        after = rng.random(shots) < q_up[m]
        spintherm += (m + 1) * (state.astype(np.int64) - after.astype(np.int64))
        state = after
        if m < cycles:
            spinlabor += state

    return ShotArrays(initial_up, spinlabor, spintherm, state, cycles)


def first_law_violations(arrays):
    delta_jz = arrays.final_up.astype(np.int64) * (arrays.cycles + 1) - arrays.initial_up.astype(np.int64)
    return int(np.count_nonzero(arrays.spinlabor - arrays.spintherm != delta_jz))


class EmpiricalDistribution(object):
    """
    Histogram of sampled spinlabor split by the initial memory state, plus the integer
    spintherm totals. Everything is an integer count, so merging is exact and does not
    depend on the order blocks finish in.
    """

    def __init__(self, counts_by_initial, seed, spintherm_sum=0, spintherm_sq_sum=0, violations=0):
        counts_by_initial = np.asarray(counts_by_initial, dtype=np.int64)
        if counts_by_initial.ndim != 2 or counts_by_initial.shape[0] != 2:
            raise ParameterError("counts must have one row per initial memory state")

        self.counts_by_initial = counts_by_initial
        self.seed = seed
        self.spintherm_sum = int(spintherm_sum)
        self.spintherm_sq_sum = int(spintherm_sq_sum)
        self.first_law_violations = int(violations)

    @classmethod
    def from_arrays(cls, arrays, seed):
        width = int(arrays.spinlabor.max()) + 1 if arrays.spinlabor.size else 1
        counts = np.zeros((2, width), dtype=np.int64)
        np.add.at(counts, (arrays.initial_up.astype(np.int64), arrays.spinlabor), 1)

        therm = arrays.spintherm
        return cls(counts, seed, int(therm.sum()), int((therm * therm).sum()), first_law_violations(arrays))

    @property
    def counts(self):
        return self.counts_by_initial.sum(axis=0)

    @property
    def shots(self):
        return int(self.counts_by_initial.sum())

    @property
    def support(self):
        return np.arange(self.counts_by_initial.shape[1])

    def merge(self, other):
        width = max(self.counts_by_initial.shape[1], other.counts_by_initial.shape[1])
        merged = np.zeros((2, width), dtype=np.int64)
        merged[:, :self.counts_by_initial.shape[1]] += self.counts_by_initial
        merged[:, :other.counts_by_initial.shape[1]] += other.counts_by_initial

        return EmpiricalDistribution(merged, self.seed,
                                     self.spintherm_sum + other.spintherm_sum,
                                     self.spintherm_sq_sum + other.spintherm_sq_sum,
                                     self.first_law_violations + other.first_law_violations)

    def probabilities(self):
        return self.counts / float(self.shots)

    def mean(self):
        return float(np.dot(self.support, self.counts)) / self.shots

    def variance(self):
        centred = self.support - self.mean()
        return float(np.dot(centred * centred, self.counts)) / self.shots

    def spintherm_mean(self):
        return self.spintherm_sum / float(self.shots)

    def spintherm_variance(self):
        mean = self.spintherm_mean()
        return self.spintherm_sq_sum / float(self.shots) - mean * mean

    def total_variation(self, dist):
        """ Total-variation distance to an exact SpinlaborDistribution """

        width = max(self.counts.size, dist.probs.size)
        empirical = np.zeros(width)
        empirical[:self.counts.size] = self.probabilities()
        exact = np.zeros(width)
        exact[:dist.probs.size] = dist.probs

        return 0.5 * float(np.abs(empirical - exact).sum())

    def jarzynski_lhs(self, gamma):
        return float(np.dot(self.counts, np.exp(-gamma * self.support))) / self.shots

    def ift_lhs(self, config, reservoir, N_bar):
        if config.degenerate:
            return None

        counts = self.counts_by_initial.ravel()
        initial_up = np.repeat([0.0, 1.0], self.counts_by_initial.shape[1])
        labor = np.tile(self.support, 2)
        sigma = stochastic_entropy_production(labor, initial_up, config.p_up, reservoir.gamma, N_bar, config.C)

        return float(np.exp(logsumexp(-sigma, b=counts / float(self.shots))))

    def summary(self, config, reservoir, N_bar=None):
        N_bar = config.cycles(reservoir.gamma) if N_bar is None else N_bar
        return {
            'mean': self.mean(),
            'variance': self.variance(),
            'spintherm_mean': self.spintherm_mean(),
            'jarzynski_lhs': self.jarzynski_lhs(reservoir.gamma),
            'ift_lhs': self.ift_lhs(config, reservoir, N_bar),
            'seed': self.seed,
            'shots': self.shots,
        }

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['n', 'count'])
        for n, count in enumerate(self.counts):
            writer.writerow([n, int(count)])

        return buf.getvalue()

    def to_json(self):
        return json.dumps({'seed': self.seed, 'shots': self.shots,
                           'counts': [int(c) for c in self.counts]}, indent=2) + '\n'


def _run_block(task):
    seed, first_stream, sizes, config, reservoir = task

    empirical = None
    for stream, size in enumerate(sizes, first_stream):
        arrays = simulate_block(block_rng(seed, stream), size, config, reservoir)
        part = EmpiricalDistribution.from_arrays(arrays, seed)
        empirical = part if empirical is None else empirical.merge(part)

    return empirical


def block_sizes(shots, block_size):
    full, rest = divmod(shots, block_size)
    return [block_size] * full + ([rest] if rest else [])


def simulate_batch(seed, shots, config, reservoir, workers=1, block_size=8192, N_bar=None):
    """
    Sample `shots` erasures. Shots are cut into streams of STREAM_SHOTS, each drawing from
    (seed, stream index). A task runs about block_size shots worth of whole streams, so the
    result depends on the seed alone, not on workers or block_size.
    """

    if shots < 1:
        raise ParameterError("shots must be at least 1, got %r" % shots)
    if block_size < 1:
        raise ParameterError("block size must be at least 1, got %r" % block_size)
    if workers < 1:
        raise ParameterError("workers must be at least 1, got %r" % workers)

    # validate the seed before any worker starts
    block_rng(seed, 0)

    streams = block_sizes(shots, STREAM_SHOTS)
    per_task = max(1, block_size // STREAM_SHOTS)
    tasks = [(seed, first, streams[first:first + per_task], config, reservoir)
             for first in range(0, len(streams), per_task)]
    logger.info("simulating %d shots in %d streams, %d tasks on %d worker(s)", shots, len(streams), len(tasks),
                workers)

    if workers > 1 and len(tasks) > 1:
        pool = multiprocessing.Pool(processes=min(workers, len(tasks)))
        try:
            parts = pool.map(_run_block, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        parts = [_run_block(task) for task in tasks]

    empirical = parts[0]
    for part in parts[1:]:
        empirical = empirical.merge(part)

    if empirical.first_law_violations:
        logger.error("%d shots broke the first-law ledger", empirical.first_law_violations)

    return BatchResult(empirical, empirical.summary(config, reservoir, N_bar))
