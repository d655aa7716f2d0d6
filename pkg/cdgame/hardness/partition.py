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

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from cdgame.common.errors import InstanceError, SizeGuidelineError

# brute-force solver limit on the number of integers
MAX_SOLVER_ITEMS = 15


class ThreePartitionInstance(object):
    """Integers ``alphas`` (3m of them) to split into m triples of sum ``beta``.

    Valid instances have ``beta > 3``, ``beta/4 < alpha < beta/2`` for every
    alpha, and ``sum(alphas) == m * beta``. Items are indexed from 0.
    """

    def __init__(self, m, beta, alphas):
        self.m = int(m)
        self.beta = int(beta)
        self.alphas = tuple(int(a) for a in alphas)
        self._validate()

    def _validate(self):
        if self.m < 1:
            raise InstanceError('m must be positive, got {}'.format(self.m))
        if len(self.alphas) != 3 * self.m:
            raise InstanceError('expected {} integers, got {}'.format(3 * self.m, len(self.alphas)))
        if self.beta <= 3:
            raise InstanceError('beta must exceed 3, got {}'.format(self.beta))
        for i, a in enumerate(self.alphas):
            if not self.beta < 4 * a < 2 * self.beta:
                raise InstanceError('alpha[{}] = {} is outside ({}/4, {}/2)'.format(i, a, self.beta, self.beta))
        if sum(self.alphas) != self.m * self.beta:
            raise InstanceError('alphas sum to {}, expected m * beta = {}'.format(
                sum(self.alphas), self.m * self.beta))

    def __eq__(self, other):
        return (isinstance(other, ThreePartitionInstance) and
                (self.m, self.beta, self.alphas) == (other.m, other.beta, other.alphas))

    def __hash__(self):
        return hash((self.m, self.beta, self.alphas))

    def __repr__(self):
        return 'ThreePartitionInstance(m={}, beta={}, alphas={})'.format(self.m, self.beta, self.alphas)

    def to_dict(self):
        return {'m': self.m, 'beta': self.beta, 'alphas': list(self.alphas)}


def parse_instance(text):
    """Read ``m beta`` then the 3m integers; ``#`` comments and blank lines are skipped."""
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if len(lines) != 2:
        raise InstanceError('expected a header line and an integer line, got {} lines'.format(len(lines)))
    try:
        header = [int(x) for x in lines[0].split()]
        alphas = [int(x) for x in lines[1].split()]
    except ValueError as e:
        raise InstanceError('malformed instance: {}'.format(e))
    if len(header) != 2:
        raise InstanceError('header must be "m beta", got {!r}'.format(lines[0]))
    return ThreePartitionInstance(header[0], header[1], alphas)


def read_instance(path):
    with open(path) as f:
        return parse_instance(f.read())


def format_instance(inst):
    return '{} {}\n{}\n'.format(inst.m, inst.beta, ' '.join(str(a) for a in inst.alphas))


def solve_3partition(inst):
    """A list of m index triples each summing to beta, or None.

    Every part of sum beta has exactly three items under the instance bounds,
    so the search fixes the smallest unused index and tries pairs for it.
    """
    if len(inst.alphas) > MAX_SOLVER_ITEMS:
        raise SizeGuidelineError('{} integers is above the solver limit {}'.format(
            len(inst.alphas), MAX_SOLVER_ITEMS))
    alphas = inst.alphas
    used = [False] * len(alphas)
    parts = []

    def search():
        try:
            i = used.index(False)
        except ValueError:
            return True
        used[i] = True
        rest = [j for j in range(i + 1, len(alphas)) if not used[j]]
        for x, j in enumerate(rest):
            for k in rest[x + 1:]:
                if alphas[i] + alphas[j] + alphas[k] != inst.beta:
                    continue
                used[j] = used[k] = True
                parts.append((i, j, k))
                if search():
                    return True
                parts.pop()
                used[j] = used[k] = False
        used[i] = False
        return False

    return list(parts) if search() else None
