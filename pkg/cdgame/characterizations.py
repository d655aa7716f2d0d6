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

"""Closed-form equilibrium predictors for lattices and hypercubes.

Each predictor is checked against the exhaustive two-player enumeration,
which stays the ground truth.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import namedtuple

from cdgame.common import get_logger, max_exhaustive_nodes
from cdgame.common.errors import CDGameError, SizeGuidelineError
from cdgame.equilibrium import enumerate_equilibria_2p, utility_matrix
from cdgame.graph import lattice_coords, lattice_node, make_hypercube, make_lattice

logger = get_logger('characterizations')

Family = namedtuple('Family', ['kind', 'params'])


def lattice_family(m, n):
    return Family('lattice', (m, n))


def hypercube_family(k):
    return Family('hypercube', (k,))


def parse_family(text):
    """Parse ``hypercube:K`` or ``lattice:MxN``."""
    kind, _, rest = text.partition(':')
    try:
        if kind == 'hypercube':
            return hypercube_family(int(rest))
        if kind == 'lattice':
            m, n = rest.lower().split('x')
            return lattice_family(int(m), int(n))
    except ValueError:
        pass
    raise CDGameError('unknown family {!r}, expected hypercube:K or lattice:MxN'.format(text))


def family_name(family):
    if family.kind == 'hypercube':
        return 'hypercube:{}'.format(*family.params)
    return 'lattice:{}x{}'.format(*family.params)


def hypercube_predicted(k, a, b):
    """True iff labels ``a`` and ``b`` of Q_k differ in an odd number of bits."""
    for label in (a, b):
        if not 0 <= label < 2 ** k:
            raise CDGameError('label {} out of range for a {}-dimensional hypercube'.format(label, k))
    return bin(a ^ b).count('1') % 2 == 1


def _central(side):
    return [x for x in range(side + 1) if abs(2 * x - side) <= 1]


def in_central_window(m, n, v):
    x, y = lattice_coords(m, n, v)
    return abs(2 * x - m) <= 1 and abs(2 * y - n) <= 1


def lattice_predicted(m, n):
    """Ordered adjacent pairs inside the central window of L_{m x n}."""
    window = set(lattice_node(m, n, x, y) for x in _central(m) for y in _central(n))
    g = make_lattice(m, n)
    return set((u, v) for u in window for v in g.neighbors(u) if v in window)


class CharacterizationVerdict(object):
    """Predicted against enumerated equilibria for one family instance.

    ``checks`` holds family specific properties that are reported next to the
    diff: balanced utilities and the utility cap on hypercubes, adjacency of
    every equilibrium on lattices and whether it stays in the central window.
    """

    def __init__(self, family, predicted, enumerated, checks=None):
        self.family = family
        self.predicted = set(predicted)
        self.enumerated = set(enumerated)
        self.missing = self.predicted - self.enumerated
        self.extra = self.enumerated - self.predicted
        self.checks = checks or {}

    @property
    def passed(self):
        return not self.missing and not self.extra

    def to_dict(self):
        return {
            'family': family_name(self.family),
            'passed': self.passed,
            'predicted': sorted(list(p) for p in self.predicted),
            'enumerated': sorted(list(p) for p in self.enumerated),
            'missing': sorted(list(p) for p in self.missing),
            'extra': sorted(list(p) for p in self.extra),
            'checks': dict(self.checks),
        }

    def __repr__(self):
        return 'CharacterizationVerdict({}, passed={}, missing={}, extra={})'.format(
            family_name(self.family), self.passed, len(self.missing), len(self.extra))


def _build(family):
    if family.kind == 'hypercube':
        return make_hypercube(*family.params)
    if family.kind == 'lattice':
        return make_lattice(*family.params)
    raise CDGameError('unknown family kind {!r}'.format(family.kind))


def verify_characterization(family, threads=None):
    """Enumerate the equilibria of ``family`` and diff them against the predictor."""
    g = _build(family)
    limit = max_exhaustive_nodes()
    if g.n > limit:
        raise SizeGuidelineError('{} has {} nodes, above the exhaustive limit {} (CDGAME_MAX_EXHAUSTIVE_NODES)'
                                 .format(family_name(family), g.n, limit))
    matrix = utility_matrix(g, threads=threads)
    report = enumerate_equilibria_2p(g, matrix=matrix)
    enumerated = report.pairs()

    checks = {}
    if family.kind == 'hypercube':
        k = family.params[0]
        half = 2 ** (k - 1)
        predicted = set((a, b) for a in range(g.n) for b in range(g.n) if a != b and hypercube_predicted(k, a, b))
        checks['balanced_utilities'] = all(e.utility_a == half and e.utility_b == half for e in report.equilibria)
        # the diagonal is zero, so the max covers distinct pairs only
        checks['utility_cap'] = int(matrix.ua.max()) <= half
    else:
        m, n = family.params
        predicted = lattice_predicted(m, n)
        checks['adjacent_only'] = all(g.has_edge(a, b) for a, b in enumerated)
        checks['central_window'] = all(in_central_window(m, n, v) for pair in enumerated for v in pair)

    verdict = CharacterizationVerdict(family, predicted, enumerated, checks)
    logger.info("{}: {} predicted, {} enumerated, passed={}".format(
        family_name(family), len(predicted), len(enumerated), verdict.passed))
    return verdict
