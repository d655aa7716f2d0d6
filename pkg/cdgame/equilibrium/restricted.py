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

from collections import Counter
from itertools import combinations_with_replacement

from cdgame.common import get_logger
from cdgame.common.combinatorics import multisets
from cdgame.common.errors import StrategySpaceError
from cdgame.common.parallel import progress
from cdgame.diffusion.engine import spread
from cdgame.graph.core import twin_classes

logger = get_logger('equilibrium')


class RestrictedEquilibria(object):
    """Outcome of a restricted sweep.

    Attributes:
        equilibria: sorted node tuples, one per equilibrium up to player
            relabeling (and up to twin swaps when ``quotient`` is set).
        utilities: per-position utilities aligned with ``equilibria``.
        profiles_examined: profiles whose deviations were checked.
        diffusions: distinct component runs actually simulated.
    """

    def __init__(self, players, space_size, quotient):
        self.players = players
        self.space_size = space_size
        self.quotient = quotient
        self.equilibria = []
        self.utilities = []
        self.profiles_examined = 0
        self.diffusions = 0

    def __len__(self):
        return len(self.equilibria)

    def to_dict(self):
        return {
            'players': self.players,
            'space_size': self.space_size,
            'quotient': self.quotient,
            'profiles_examined': self.profiles_examined,
            'diffusions': self.diffusions,
            'equilibria': [{'seeds': list(nodes), 'utilities': list(values)}
                           for nodes, values in zip(self.equilibria, self.utilities)],
        }


class _ComponentGame(object):
    """Utilities of identical single-seed players, memoized per component.

    A seed only interacts with seeds in its own connected component, and
    exchanging false twins inside ``space`` maps profiles to equivalent
    profiles, so runs are cached on the canonical seed multiset of one
    component.
    """

    def __init__(self, g, space, quotient):
        self.g = g
        self.comp = [0] * g.n
        for i, members in enumerate(g.components()):
            for v in members:
                self.comp[v] = i
        if quotient:
            self.classes = twin_classes(g, space)
        else:
            self.classes = [(v,) for v in space]
        self.class_of = {}
        for members in self.classes:
            for v in members:
                self.class_of[v] = members
        self._cache = {}

    @property
    def diffusions(self):
        return len(self._cache)

    def canonical_map(self, nodes):
        # inside a class, the most used node maps to its first member
        by_class = {}
        for v, count in Counter(nodes).items():
            by_class.setdefault(self.class_of[v], []).append((-count, v))
        mapping = {}
        for members, entries in by_class.items():
            for i, (_, v) in enumerate(sorted(entries)):
                mapping[v] = members[i]
        return mapping

    def canonical(self, nodes):
        mapping = self.canonical_map(nodes)
        return tuple(sorted(mapping[v] for v in nodes))

    def local(self, nodes):
        """Utility by seed node for ``nodes``, all in one component."""
        mapping = self.canonical_map(nodes)
        key = tuple(sorted(mapping[v] for v in nodes))
        values = self._cache.get(key)
        if values is None:
            state, _, _ = spread(self.g.adjacency, self.g.n, [(v,) for v in key])
            counts = [0] * len(key)
            for s in state:
                if s >= 0:
                    counts[s] += 1
            values = {}
            for p, v in enumerate(key):
                values[v] = counts[p]
            self._cache[key] = values
        return dict((v, values[mapping[v]]) for v in set(nodes))

    def utilities(self, nodes):
        groups = {}
        for v in nodes:
            groups.setdefault(self.comp[v], []).append(v)
        result = {}
        for members in groups.values():
            result.update(self.local(tuple(sorted(members))))
        return result

    def utility_at(self, nodes, v):
        c = self.comp[v]
        return self.local(tuple(u for u in nodes if self.comp[u] == c))[v]

    def targets(self, occupied):
        """One representative per distinct deviation, given occupied nodes."""
        result = set(occupied)
        touched = set(self.class_of[v] for v in occupied)
        for members in self.classes:
            if members not in touched:
                result.add(members[0])
                continue
            for v in members:
                if v not in occupied:
                    result.add(v)
                    break
        return sorted(result)


def _improving_move(game, nodes, values):
    occupied = set(nodes)
    targets = game.targets(occupied)
    for x in sorted(occupied, key=lambda v: (values[v], v)):
        rest = list(nodes)
        rest.remove(x)
        for y in targets:
            if y == x:
                continue
            moved = sorted(rest + [y])
            if game.utility_at(moved, y) > values[x]:
                return x, y
    return None


def restricted_equilibria(g, players, space=None, quotient=True):
    """Every pure equilibrium of identical single-seed players over ``space``.

    All players share the strategy space, so profiles are swept as
    multisets. With ``quotient`` on, profiles that differ by exchanging
    false twins are visited once and reported by their canonical form.

    Args:
        g: the graph.
        players: number of players, at least 2.
        space: common strategy space; None means every node.
        quotient: fold twin-symmetric profiles together.
    """
    if players < 2:
        raise StrategySpaceError('a restricted sweep needs at least 2 players, got {}'.format(players))
    space = sorted(set(range(g.n) if space is None else space))
    if not space:
        raise StrategySpaceError('empty strategy space')
    for v in space:
        g.check_node(v)

    game = _ComponentGame(g, space, quotient)
    candidates = sorted(v for members in game.classes for v in members[:players])
    logger.info("restricted sweep: {} players, {} strategies, {} twin classes, at most {} profiles".format(
        players, len(space), len(game.classes), multisets(len(candidates), players)))

    result = RestrictedEquilibria(players, len(space), quotient)
    for nodes in progress(combinations_with_replacement(candidates, players), desc='restricted sweep'):
        if quotient and game.canonical(nodes) != nodes:
            continue
        result.profiles_examined += 1
        values = game.utilities(nodes)
        if _improving_move(game, nodes, values) is None:
            result.equilibria.append(nodes)
            result.utilities.append(tuple(values[v] for v in nodes))
    result.diffusions = game.diffusions
    logger.info("restricted sweep: {} profiles, {} diffusions, {} equilibria".format(
        result.profiles_examined, result.diffusions, len(result.equilibria)))
    return result
