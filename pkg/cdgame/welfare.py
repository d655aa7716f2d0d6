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

import itertools
from collections import namedtuple
from fractions import Fraction

import numpy as np

from cdgame.common import get_logger, max_welfare_nodes
from cdgame.common.errors import CDGameError, SizeGuidelineError
from cdgame.common.parallel import parallel_map
from cdgame.diffusion.engine import spread
from cdgame.equilibrium.matrix import utility_matrix
from cdgame.graph.core import Graph
from cdgame.graph.distances import sphere_sizes

logger = get_logger('welfare')

SubmodularityViolation = namedtuple('SubmodularityViolation',
                                    ['small', 'large', 'node', 'gain_small', 'gain_large'])
SubmodularityWitness = namedtuple('SubmodularityWitness', ['graph', 'opponent', 'violation'])


def _require_connected(g):
    if g.n < 2:
        raise CDGameError('welfare bound needs at least 2 nodes, got {}'.format(g.n))
    if not g.is_connected():
        raise CDGameError('welfare bound is only defined on connected graphs')


def welfare_lower_bound(g):
    """Exact lower bound on the best two-player social welfare of ``g``.

    ``n + 1 - sum_x sum_k |S_x(k)|^2 / (n (n - 1))`` where ``S_x(k)`` is the
    set of nodes at distance exactly ``k`` from ``x``.
    """
    _require_connected(g)
    n = g.n
    total = sum(c * c for x in range(n) for c in sphere_sizes(g, x))
    return Fraction(n + 1) - Fraction(total, n * (n - 1))


def welfare_lower_bound_matrix(g):
    """The same bound from zero patterns of the powers of I + A."""
    _require_connected(g)
    n = g.n
    step = np.eye(n, dtype=np.int64)
    for v in range(n):
        step[v, list(g.neighbors(v))] = 1
    previous = np.eye(n, dtype=np.int64)
    total = 0
    while not previous.all():
        current = np.minimum(previous.dot(step), 1)
        sizes = (current - previous).sum(axis=1)
        total += int((sizes * sizes).sum())
        previous = current
    return Fraction(n + 1) - Fraction(total, n * (n - 1))


class WelfareBoundReport(object):
    """Bound against the brute-force optimum.

    Attributes:
        bound: Fraction, or None on graphs where it is undefined.
        optimum: best U_A + U_B over distinct ordered pairs.
        witness: lexicographically first pair reaching ``optimum``.
    """

    def __init__(self, n, bound, optimum, witness):
        self.n = n
        self.bound = bound
        self.optimum = optimum
        self.witness = witness

    def to_dict(self):
        result = {'n': self.n, 'optimum': self.optimum,
                  'witness': list(self.witness) if self.witness is not None else None}
        result.update(bound_fields(self.bound))
        return result


def bound_fields(bound):
    if bound is None:
        return {'bound': None, 'bound_numerator': None, 'bound_denominator': None, 'bound_float': None}
    return {'bound': str(bound), 'bound_numerator': bound.numerator,
            'bound_denominator': bound.denominator, 'bound_float': float(bound)}


def optimal_welfare_bruteforce(g, threads=None):
    limit = max_welfare_nodes()
    if g.n > limit:
        raise SizeGuidelineError('{} nodes is above the welfare limit {} (CDGAME_MAX_WELFARE_NODES)'
                                 .format(g.n, limit))
    if g.n < 2:
        raise CDGameError('welfare needs at least 2 nodes, got {}'.format(g.n))
    ua = utility_matrix(g, threads=threads).ua
    welfare = ua + ua.T
    np.fill_diagonal(welfare, -1)
    a, b = np.unravel_index(int(np.argmax(welfare)), welfare.shape)
    bound = welfare_lower_bound(g) if g.is_connected() else None
    report = WelfareBoundReport(g.n, bound, int(welfare[a, b]), (int(a), int(b)))
    logger.info("welfare optimum {} at {}, bound {}".format(report.optimum, report.witness, bound))
    return report


def _own_utility(g, opponent_seeds, own_seeds):
    if not own_seeds:
        return 0
    state, _, _ = spread(g.adjacency, g.n, (tuple(own_seeds), tuple(opponent_seeds)))
    return sum(1 for s in state if s == 0)


def _check_seeds(g, opponent_seeds):
    if not opponent_seeds:
        raise CDGameError('opponent seed set must be nonempty')
    for v in opponent_seeds:
        g.check_node(v)


def marginal_gain(g, opponent_seeds, own_seeds, x):
    """``U(own + {x}) - U(own)`` for the player facing ``opponent_seeds``; ``U(empty) = 0``."""
    _check_seeds(g, opponent_seeds)
    own_seeds = frozenset(own_seeds)
    g.check_node(x)
    if x in own_seeds:
        raise CDGameError('node {} is already an own seed'.format(x))
    return _own_utility(g, opponent_seeds, own_seeds | {x}) - _own_utility(g, opponent_seeds, own_seeds)


def submodularity_search(g, opponent_seeds, max_set_size, threads=1):
    """Every ``(S, S', x)`` with ``S`` a proper subset of ``S'`` and x gaining more on top of ``S'``.

    Sets range over nodes outside ``opponent_seeds``, ``|S'| <= max_set_size``
    and ``x`` lies outside ``S'``.
    """
    _check_seeds(g, opponent_seeds)
    opponent_seeds = tuple(sorted(set(opponent_seeds)))
    free = [v for v in range(g.n) if v not in opponent_seeds]
    sets = [frozenset(c) for size in range(min(max_set_size + 1, len(free)) + 1)
            for c in itertools.combinations(free, size)]
    values = dict(zip(sets, parallel_map(lambda s: _own_utility(g, opponent_seeds, s), sets,
                                         threads=threads, desc='submodularity')))

    violations = []
    for size in range(min(max_set_size, len(free)) + 1):
        for large in itertools.combinations(free, size):
            large = frozenset(large)
            outside = [x for x in free if x not in large]
            for small_size in range(size):
                for small in itertools.combinations(sorted(large), small_size):
                    small = frozenset(small)
                    for x in outside:
                        gain_small = values[small | {x}] - values[small]
                        gain_large = values[large | {x}] - values[large]
                        if gain_small < gain_large:
                            violations.append(SubmodularityViolation(
                                tuple(sorted(small)), tuple(sorted(large)), x, gain_small, gain_large))
    return violations


def _connected_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            yield g


def find_submodularity_witness(max_nodes=7, max_set_size=2):
    """First violation over connected graphs by node count, then edge mask, then opponent node."""
    for n in range(2, max_nodes + 1):
        for g in _connected_graphs(n):
            for o in range(n):
                violations = submodularity_search(g, [o], max_set_size)
                if violations:
                    logger.info("submodularity witness on {} nodes, opponent {}".format(n, o))
                    return SubmodularityWitness(g, o, violations[0])
    return None
