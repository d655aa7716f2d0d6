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

from cdgame.common.errors import InvalidProfileError, StrategySpaceError
from cdgame.common.parallel import parallel_map
from cdgame.diffusion.engine import spread

Deviation = namedtuple('Deviation', ['player', 'node', 'gain'])
EquilibriumDecision = namedtuple('EquilibriumDecision', ['is_equilibrium', 'deviation', 'utilities'])


def _utilities_of(g, seeds):
    state, _, _ = spread(g.adjacency, g.n, [(v,) for v in seeds])
    counts = [0] * len(seeds)
    for s in state:
        if s >= 0:
            counts[s] += 1
    return counts


def _single_seeds(profile):
    seeds = []
    for p, nodes in enumerate(profile.seeds):
        if len(nodes) != 1:
            raise InvalidProfileError('player {} must hold exactly one seed, got {}'.format(p, len(nodes)))
        seeds.append(next(iter(nodes)))
    return seeds


def _spaces(g, k, strategy_space):
    if strategy_space is None:
        return [tuple(range(g.n))] * k
    if len(strategy_space) != k:
        raise StrategySpaceError('expected {} strategy spaces, got {}'.format(k, len(strategy_space)))
    spaces = [tuple(sorted(range(g.n) if space is None else space)) for space in strategy_space]
    for space in spaces:
        for v in space:
            g.check_node(v)
    return spaces


def is_equilibrium(g, profile, strategy_space=None, threads=1):
    """Decide whether a single-seed profile is a pure equilibrium.

    Args:
        g: the graph.
        profile: SeedProfile with one seed per player and at least 2 players.
        strategy_space: one node collection per player (None entries or a
            None argument mean every node).
        threads: workers used to scan each player's deviations.

    Returns:
        EquilibriumDecision. When some player can strictly gain by moving its
        seed inside its own space, ``deviation`` holds the first such player
        with its best move (largest gain, smallest node on ties).
    """
    profile.validate(g)
    if profile.k < 2:
        raise InvalidProfileError('an equilibrium check needs at least 2 players')
    seeds = _single_seeds(profile)
    spaces = _spaces(g, profile.k, strategy_space)
    for p, (seed, space) in enumerate(zip(seeds, spaces)):
        if seed not in set(space):
            raise StrategySpaceError('seed {} of player {} lies outside its strategy space'.format(seed, p))

    base = _utilities_of(g, seeds)
    for p, space in enumerate(spaces):
        others = [y for y in space if y != seeds[p]]

        def value(y, p=p):
            moved = list(seeds)
            moved[p] = y
            return _utilities_of(g, moved)[p]

        values = parallel_map(value, others, threads=threads)
        best_gain, best_node = 0, None
        for y, u in zip(others, values):
            if u - base[p] > best_gain:
                best_gain, best_node = u - base[p], y
        if best_node is not None:
            return EquilibriumDecision(False, Deviation(p, best_node, best_gain), tuple(base))
    return EquilibriumDecision(True, None, tuple(base))


def best_response(g, fixed_seeds, player, strategy_space=None, threads=1):
    """Maximizers of ``player``'s utility with every other seed held fixed.

    ``fixed_seeds`` lists the other players' single seeds in player order;
    the candidate seed is inserted at index ``player``. Returns
    ``(sorted maximizers, value)``.
    """
    fixed_seeds = list(fixed_seeds)
    if not 0 <= player <= len(fixed_seeds):
        raise InvalidProfileError('player {} out of range for {} players'.format(player, len(fixed_seeds) + 1))
    for v in fixed_seeds:
        g.check_node(v)
    space = sorted(set(range(g.n) if strategy_space is None else strategy_space))
    if not space:
        raise StrategySpaceError('strategy space is empty')
    for v in space:
        g.check_node(v)

    def value(y):
        seeds = fixed_seeds[:player] + [y] + fixed_seeds[player:]
        return _utilities_of(g, seeds)[player]

    values = parallel_map(value, space, threads=threads)
    top = max(values)
    return [y for y, u in zip(space, values) if u == top], top
