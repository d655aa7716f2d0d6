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

"""The right-hand core of the reduction gadget: nine stars with wired centers.

Star ``s`` of a core with star size ``d`` has its center at ``s * d`` and
leaves ``s * d + 1 .. s * d + d - 1``. A wiring is a graph on the nine
centers. The reduction only relies on three properties of the core, which
``verify_core`` checks by exhaustive simulation:

1. a sole player collects all ``9 d`` nodes,
2. two players on the core never reach a pure equilibrium,
3. against any placement the other player has a reply worth ``4 d`` or more.

No wiring is known in closed form, so candidates are searched: the named
wirings first, then wirings on ``Z3 x {0, 1, 2}`` invariant under the shift
``(i, r) -> (i + 1, r)``, then a seeded stream of random wirings. Each is
screened on the center-only game before the full check.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from collections import namedtuple

from cdgame.common import core_search_samples, get_logger
from cdgame.common.errors import CDGameError, CoreVerificationError
from cdgame.diffusion.engine import spread
from cdgame.equilibrium.restricted import restricted_equilibria
from cdgame.graph.core import Graph
from cdgame.graph.generators import make_cycle, make_erdos_renyi, make_lattice, make_path

logger = get_logger('hardness')

STARS = 9
CORE_SEARCH_SEED = 20260
RANDOM_DENSITIES = (0.3, 0.4, 0.5, 0.6)

CoreSpec = namedtuple('CoreSpec', ['name', 'center_edges'])


def _spec(name, g):
    return CoreSpec(name, tuple(g.edges()))


def named_candidates():
    return [_spec('cycle9', make_cycle(STARS)),
            _spec('grid3x3', make_lattice(2, 2)),
            _spec('path9', make_path(STARS))]


def _rotation_orbits():
    # node (i, r) has id 3 * r + i
    orbits = [[(3 * r + i, 3 * r + (i + 1) % 3) for i in range(3)] for r in range(3)]
    for r, s in itertools.combinations(range(3), 2):
        for delta in range(3):
            orbits.append([(3 * r + i, 3 * s + (i + delta) % 3) for i in range(3)])
    return orbits


def rotation_candidate(mask):
    orbits = _rotation_orbits()
    if not 0 <= mask < 1 << len(orbits):
        raise CDGameError('rotation mask must be in [0, {}), got {}'.format(1 << len(orbits), mask))
    edges = [e for bit, orbit in enumerate(orbits) if mask >> bit & 1 for e in orbit]
    return _spec('rotation:{}'.format(mask), Graph.from_edges(STARS, edges))


def random_candidate(index):
    p = RANDOM_DENSITIES[index % len(RANDOM_DENSITIES)]
    return _spec('random:{}'.format(index), make_erdos_renyi(STARS, p, [CORE_SEARCH_SEED, index]))


def core_spec_by_name(name):
    """``cycle9``, ``grid3x3``, ``path9``, ``rotation:MASK`` or ``random:INDEX``."""
    for spec in named_candidates():
        if spec.name == name:
            return spec
    kind, _, value = name.partition(':')
    try:
        if kind == 'rotation':
            return rotation_candidate(int(value))
        if kind == 'random':
            return random_candidate(int(value))
    except ValueError:
        pass
    raise CDGameError('unknown core wiring {!r}'.format(name))


def iter_candidates(samples=None):
    for spec in named_candidates():
        yield spec
    for mask in range(1, 1 << len(_rotation_orbits())):
        yield rotation_candidate(mask)
    if samples is None:
        samples = core_search_samples()
    for index in range(samples):
        yield random_candidate(index)


def center_graph(spec):
    return Graph.from_edges(STARS, spec.center_edges)


def make_core(spec, d):
    """The 9 d node core for wiring ``spec``."""
    if d < 2:
        raise CDGameError('star size must be at least 2, got {}'.format(d))
    edges = [(s * d, s * d + leaf) for s in range(STARS) for leaf in range(1, d)]
    edges.extend((s * d, t * d) for s, t in spec.center_edges)
    return Graph.from_edges(STARS * d, edges)


def _first_player_count(g, a, b):
    state, _, _ = spread(g.adjacency, g.n, ((a,), (b,)))
    return sum(1 for s in state if s == 0)


def screen_centers(spec):
    """Cheap filter on the game played on centers alone, in units of whole stars.

    A center adopted by a player brings its whole star, so a wiring passes
    when this game has no equilibrium and the least the best reply can
    secure over all placements is exactly four stars.
    """
    h = center_graph(spec)
    if not h.is_connected():
        return False
    f = [[0 if x == y else _first_player_count(h, x, y) for y in range(STARS)] for x in range(STARS)]
    best = [max(f[x][y] for x in range(STARS) if x != y) for y in range(STARS)]
    if min(best) != 4:
        return False
    for x, y in itertools.combinations(range(STARS), 2):
        if f[x][y] >= best[y] and f[y][x] >= best[x]:
            return False
    return True


class CoreReport(object):
    """Outcome of ``verify_core`` for one wiring and star size.

    Attributes:
        sole_value: best utility of a player alone on the core.
        equilibria: two-player equilibria found, up to leaf symmetry.
        best_replies: best reply value against each representative node.
        guard: smallest best reply over all placements.
        guard_node: a placement attaining ``guard``.
    """

    def __init__(self, spec, d, sole_value, equilibria, best_replies):
        self.spec = spec
        self.d = d
        self.sole_value = sole_value
        self.equilibria = equilibria
        self.best_replies = best_replies
        self.guard_node, self.guard = min(best_replies.items(), key=lambda item: (item[1], item[0]))

    @property
    def sole_ok(self):
        return self.sole_value == STARS * self.d

    @property
    def no_equilibrium(self):
        return not self.equilibria

    @property
    def deviation_witness(self):
        """A placement whose best reply stays under ``4 d``, or None."""
        weak = [v for v, value in sorted(self.best_replies.items()) if value < 4 * self.d]
        return weak[0] if weak else None

    @property
    def deviation_ok(self):
        return self.deviation_witness is None

    @property
    def passed(self):
        return self.sole_ok and self.no_equilibrium and self.deviation_ok

    def guard_within(self, low, high):
        return low <= self.guard <= high

    def to_dict(self):
        return {
            'core': self.spec.name,
            'center_edges': [list(e) for e in self.spec.center_edges],
            'd': self.d,
            'sole_value': self.sole_value,
            'sole_ok': self.sole_ok,
            'no_equilibrium': self.no_equilibrium,
            'equilibria': [list(e) for e in self.equilibria],
            'deviation_ok': self.deviation_ok,
            'deviation_witness': self.deviation_witness,
            'guard': self.guard,
            'guard_node': self.guard_node,
            'passed': self.passed,
        }


def _representatives(d):
    reps = []
    for s in range(STARS):
        reps.append(s * d)
        reps.append(s * d + 1)
    return reps


def verify_core(spec, d):
    """Check the three core properties for ``spec`` at star size ``d``.

    Leaves of one star are interchangeable, so placements are evaluated on
    each center and one leaf per star.
    """
    core = make_core(spec, d)
    reps = _representatives(d)
    sole_value = 0
    for v in reps:
        state, _, _ = spread(core.adjacency, core.n, ((v,),))
        sole_value = max(sole_value, sum(1 for s in state if s == 0))

    best_replies = {}
    for y in reps:
        replies = [x for x in reps if x != y]
        if y % d:
            # another leaf of the same star
            if d > 2:
                replies.append(y + 1)
        best_replies[y] = max(_first_player_count(core, x, y) for x in replies)

    sweep = restricted_equilibria(core, 2)
    report = CoreReport(spec, d, sole_value, sweep.equilibria, best_replies)
    logger.debug("core {} at d={}: sole={} equilibria={} guard={}".format(
        spec.name, d, sole_value, len(sweep.equilibria), report.guard))
    return report


_selected = {}


def select_core(d, window=None, samples=None):
    """First candidate wiring whose core passes ``verify_core`` at ``d``.

    Args:
        d: star size.
        window: optional ``(low, high)`` bounds on the guard value.
        samples: random wirings to try after the structured ones; None reads
            CDGAME_CORE_SEARCH_SAMPLES.

    Returns:
        the passing CoreReport. Results are cached per process.
    """
    key = (d, window, samples)
    if key in _selected:
        return _selected[key]
    tried = screened = 0
    named = set(spec.name for spec in named_candidates())
    for spec in iter_candidates(samples):
        tried += 1
        if spec.name not in named and not screen_centers(spec):
            continue
        screened += 1
        report = verify_core(spec, d)
        if report.passed and (window is None or report.guard_within(*window)):
            logger.info("selected core {} at d={} after {} candidates ({} fully checked), guard {}".format(
                spec.name, d, tried, screened, report.guard))
            _selected[key] = report
            return report
    raise CoreVerificationError('no core wiring passed verification at d={} (window {}) among {} candidates'
                                .format(d, window, tried))
