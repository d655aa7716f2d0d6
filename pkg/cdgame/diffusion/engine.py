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

from cdgame.common.errors import InvalidProfileError
from cdgame.diffusion.state import GRAY, WHITE


class SeedProfile(object):
    """Initial placements: ``seeds[p]`` is the node set of player ``p``.

    Sets may overlap between players; a node claimed twice starts gray.
    """

    __slots__ = ('seeds',)

    def __init__(self, seeds):
        self.seeds = tuple(frozenset(s) for s in seeds)

    @classmethod
    def single(cls, *nodes):
        return cls([[v] for v in nodes])

    @property
    def k(self):
        return len(self.seeds)

    def validate(self, g):
        if not self.seeds:
            raise InvalidProfileError('a profile needs at least one player')
        for p, nodes in enumerate(self.seeds):
            if not nodes:
                raise InvalidProfileError('player {} has an empty seed set'.format(p))
            for v in nodes:
                if not 0 <= v < g.n:
                    raise InvalidProfileError('seed {} of player {} out of range for {} nodes'.format(v, p, g.n))
        return self

    def permuted(self, order):
        """Profile where new player ``i`` holds the seeds of old player ``order[i]``."""
        return SeedProfile([self.seeds[p] for p in order])

    def __eq__(self, other):
        return isinstance(other, SeedProfile) and self.seeds == other.seeds

    def __hash__(self):
        return hash(self.seeds)

    def __repr__(self):
        return 'SeedProfile({})'.format([sorted(s) for s in self.seeds])


class DiffusionOutcome(object):
    """Result of one run.

    Attributes:
        final: tuple of node states.
        utilities: tuple of adopted-node counts per player, seeds included.
        steps: number of rounds that changed at least one node.
        trace: None, or the state tuple after seeding followed by one tuple per round.
    """

    __slots__ = ('final', 'utilities', 'steps', 'trace')

    def __init__(self, final, utilities, steps, trace=None):
        self.final = final
        self.utilities = utilities
        self.steps = steps
        self.trace = trace

    @property
    def gray_count(self):
        return sum(1 for s in self.final if s == GRAY)

    @property
    def white_count(self):
        return sum(1 for s in self.final if s == WHITE)

    def adopters(self, player):
        return [v for v, s in enumerate(self.final) if s == player]

    def __repr__(self):
        return 'DiffusionOutcome(utilities={}, steps={}, gray={}, white={})'.format(
            self.utilities, self.steps, self.gray_count, self.white_count)


def spread(adj, n, seeds, keep_trace=False):
    """Run the synchronous process on adjacency rows ``adj``.

    ``seeds`` is a sequence of node iterables, one per player. Returns
    ``(state_list, steps, trace)``. Only nodes that adopted in the previous
    round can reach a white node, so each round scans that frontier alone.
    """
    state = [WHITE] * n
    for p, nodes in enumerate(seeds):
        for v in nodes:
            if state[v] == WHITE:
                state[v] = p
            elif state[v] != p:
                state[v] = GRAY
    frontier = sorted(set(v for nodes in seeds for v in nodes if state[v] >= 0))
    trace = [tuple(state)] if keep_trace else None
    steps = 0
    while frontier:
        reached = {}
        for v in frontier:
            t = state[v]
            for u in adj[v]:
                if state[u] != WHITE:
                    continue
                seen = reached.get(u)
                if seen is None:
                    reached[u] = t
                elif seen != t:
                    reached[u] = GRAY
        if not reached:
            break
        steps += 1
        frontier = []
        for u, t in reached.items():
            state[u] = t
            if t != GRAY:
                frontier.append(u)
        if keep_trace:
            trace.append(tuple(state))
    return state, steps, trace


def diffuse(g, profile, keep_trace=False):
    profile.validate(g)
    state, steps, trace = spread(g.adjacency, g.n, profile.seeds, keep_trace)
    counts = [0] * profile.k
    for s in state:
        if s >= 0:
            counts[s] += 1
    return DiffusionOutcome(tuple(state), tuple(counts), steps, trace)


def utilities(g, profile):
    return diffuse(g, profile).utilities


def pair_utilities(g, a, b):
    """Utilities ``(U_0, U_1)`` of the single-seed profile ``({a}, {b})``."""
    state, _, _ = spread(g.adjacency, g.n, ((a,), (b,)))
    u0 = u1 = 0
    for s in state:
        if s == 0:
            u0 += 1
        elif s == 1:
            u1 += 1
    return u0, u1
