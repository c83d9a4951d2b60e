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

import numpy as np

from .. import ParameterError

# marker for the m -> infinity distribution
LIMIT = 'limit'


class SpinlaborDistribution(object):
    """
    Probability mass over the accumulated spinlabor n = 0..n_max (units of hbar).

    m is the number of CNOT steps taken so far, or LIMIT. The probability array is
    frozen on construction so distributions can be shared between workers.
    """

    def __init__(self, m, probs, C, gamma=None, p_up=0.5, cycles=None):
        probs = np.array(probs, dtype=float)
        if probs.ndim != 1 or probs.size == 0:
            raise ParameterError("a distribution needs a non-empty 1-d probability array")
        probs.flags.writeable = False

        self.m = m
        self.probs = probs
        self.C = C
        self.gamma = gamma
        self.p_up = p_up
        # CNOT steps actually evaluated to reach a LIMIT distribution
        self.cycles = cycles

    @property
    def is_limit(self):
        return self.m == LIMIT

    @property
    def n_max(self):
        return self.probs.size - 1

    @property
    def support(self):
        return np.arange(self.probs.size)

    def pr(self, n):
        if 0 <= n < self.probs.size:
            return float(self.probs[n])
        return 0.0

    def total(self):
        return float(self.probs.sum())

    def mean(self):
        return float(np.dot(self.support, self.probs))

    def variance(self):
        centred = self.support - self.mean()
        return float(np.dot(centred * centred, self.probs))

    def shifted(self, offset):
        """ The same mass moved offset steps up the spinlabor axis """

        probs = np.concatenate([np.zeros(offset), self.probs])
        return SpinlaborDistribution(self.m, probs, self.C, self.gamma, self.p_up, self.cycles)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['n', 'probability'])
        for n, p in enumerate(self.probs):
            writer.writerow([n, repr(float(p))])

        return buf.getvalue()

    def to_dict(self):
        return {
            'C': self.C,
            'gamma': self.gamma,
            'p_up': self.p_up,
            'probs': [float(p) for p in self.probs],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + '\n'

    @classmethod
    def from_json(cls, text, m=LIMIT):
        data = json.loads(text)
        return cls(m, data['probs'], data['C'], data['gamma'], data['p_up'])

    def __repr__(self):
        return 'SpinlaborDistribution(m=%r, C=%r, gamma=%r, p_up=%r, n_max=%d)' % (
            self.m, self.C, self.gamma, self.p_up, self.n_max)
