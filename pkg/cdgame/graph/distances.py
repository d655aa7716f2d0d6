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

from collections import deque

from cdgame.common.errors import CDGameError

# Distance of a node no source can reach.
UNREACHABLE = None


class DistanceField(object):
    """Breadth-first distances from a source set.

    ``dist[v]`` is an int, or ``UNREACHABLE``.
    """

    __slots__ = ('source_set', 'dist')

    def __init__(self, source_set, dist):
        self.source_set = frozenset(source_set)
        self.dist = tuple(dist)

    def __getitem__(self, v):
        return self.dist[v]

    def __len__(self):
        return len(self.dist)

    def reachable(self):
        return [v for v, d in enumerate(self.dist) if d is not UNREACHABLE]

    def eccentricity(self):
        """Largest finite distance (0 when only the sources are reachable)."""
        return max(d for d in self.dist if d is not UNREACHABLE)

    def __repr__(self):
        return 'DistanceField(sources={}, dist={})'.format(sorted(self.source_set), list(self.dist))


def multi_source_distances(g, sources):
    sources = set(sources)
    if not sources:
        raise CDGameError('source set must be nonempty')
    for s in sources:
        g.check_node(s)
    dist = [UNREACHABLE] * g.n
    queue = deque()
    for s in sorted(sources):
        dist[s] = 0
        queue.append(s)
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        step = dist[v] + 1
        for u in adj[v]:
            if dist[u] is UNREACHABLE:
                dist[u] = step
                queue.append(u)
    return DistanceField(sources, dist)


def sphere_sizes(g, x):
    """``[|S_x(1)|, |S_x(2)|, ...]``: node counts at each exact distance from ``x``.

    The list stops at the eccentricity of ``x`` within its component, so it
    sums to the number of nodes reachable from ``x`` minus one.
    """
    g.check_node(x)
    field = multi_source_distances(g, [x])
    counts = [0] * (field.eccentricity() + 1)
    for d in field.dist:
        if d is not UNREACHABLE:
            counts[d] += 1
    return counts[1:]


def ball_sizes(g, x):
    """``[|B_x(0)|, |B_x(1)|, ...]`` up to the eccentricity of ``x``."""
    sizes = [1]
    for count in sphere_sizes(g, x):
        sizes.append(sizes[-1] + count)
    return sizes
