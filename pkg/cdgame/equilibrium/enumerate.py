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

from collections import namedtuple

from cdgame.common import get_logger
from cdgame.equilibrium.matrix import utility_matrix
from cdgame.graph.blocks import blocks

logger = get_logger('equilibrium')

PairEquilibrium = namedtuple('PairEquilibrium', ['a', 'b', 'utility_a', 'utility_b'])
ConditionCheck = namedtuple('ConditionCheck', ['a', 'b', 'degree_bound_a', 'degree_bound_b',
                                               'common_block'])


def ceil_div(x, y):
    return -(-x // y)


class EquilibriumReport(object):
    """Pure equilibria of the two-player single-seed game.

    ``candidates_examined + pruned_by_block + pruned_by_degree_bound`` equals
    the number of ordered off-diagonal pairs, n(n-1).
    """

    def __init__(self, equilibria, candidates_examined, pruned_by_block, pruned_by_degree_bound,
                 filters_applied=True):
        self.equilibria = equilibria
        self.candidates_examined = candidates_examined
        self.pruned_by_block = pruned_by_block
        self.pruned_by_degree_bound = pruned_by_degree_bound
        self.filters_applied = filters_applied

    def pairs(self):
        return set((e.a, e.b) for e in self.equilibria)

    def to_dict(self):
        return {
            'equilibria': [e._asdict() for e in self.equilibria],
            'candidates_examined': self.candidates_examined,
            'pruned_by_block': self.pruned_by_block,
            'pruned_by_degree_bound': self.pruned_by_degree_bound,
            'filters_applied': self.filters_applied,
        }

    def __repr__(self):
        return 'EquilibriumReport({} equilibria, examined={}, pruned_block={}, pruned_degree={})'.format(
            len(self.equilibria), self.candidates_examined, self.pruned_by_block,
            self.pruned_by_degree_bound)


def enumerate_equilibria_2p(g, use_block_filter=False, use_degree_filter=False, matrix=None,
                            threads=None):
    """List every ordered pair ``(a, b)``, ``a != b``, where neither seed can improve.

    The block and degree filters skip pairs that cannot be equilibria. They
    only hold on connected graphs, so on a disconnected graph they are
    switched off with a warning.
    """
    n = g.n
    if matrix is None:
        matrix = utility_matrix(g, threads=threads)
    ua = matrix.ua
    best = matrix.best_reply_values()

    filters_applied = True
    if (use_block_filter or use_degree_filter) and not g.is_connected():
        logger.warning("graph is disconnected, equilibrium filters disabled")
        use_block_filter = use_degree_filter = False
        filters_applied = False
    decomposition = blocks(g) if use_block_filter else None

    equilibria = []
    examined = pruned_block = pruned_degree = 0
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            u_a, u_b = int(ua[a, b]), int(ua[b, a])
            if decomposition is not None and not decomposition.share_block(a, b):
                pruned_block += 1
                continue
            if use_degree_filter and (ceil_div(n - 1, g.degree(a)) > u_b or
                                      ceil_div(n - 1, g.degree(b)) > u_a):
                pruned_degree += 1
                continue
            examined += 1
            if u_a >= best[b] and u_b >= best[a]:
                equilibria.append(PairEquilibrium(a, b, u_a, u_b))
    logger.info("enumerated {} equilibria on {} nodes".format(len(equilibria), n))
    return EquilibriumReport(equilibria, examined, pruned_block, pruned_degree, filters_applied)


class ConditionsReport(object):

    def __init__(self, checks, applicable):
        self.checks = checks
        self.applicable = applicable

    @property
    def passed(self):
        return all(c.degree_bound_a and c.degree_bound_b and c.common_block for c in self.checks)

    def failures(self):
        return [c for c in self.checks
                if not (c.degree_bound_a and c.degree_bound_b and c.common_block)]


def necessary_conditions_report(g, report):
    """Check the degree bounds and common-block membership of every listed equilibrium.

    For an equilibrium ``(a, b)`` on a connected graph with n nodes:
    ``ceil((n-1)/deg(a)) <= U_b``, ``ceil((n-1)/deg(b)) <= U_a``, and some
    block holds both seeds. A failure means the enumeration is wrong. On a
    disconnected graph the conditions do not apply and every check passes.
    """
    n = g.n
    applicable = g.is_connected()
    decomposition = blocks(g) if applicable else None
    checks = []
    for e in report.equilibria:
        if not applicable:
            checks.append(ConditionCheck(e.a, e.b, True, True, True))
            continue
        checks.append(ConditionCheck(
            e.a, e.b,
            ceil_div(n - 1, g.degree(e.a)) <= e.utility_b,
            ceil_div(n - 1, g.degree(e.b)) <= e.utility_a,
            decomposition.share_block(e.a, e.b)))
    return ConditionsReport(checks, applicable)
