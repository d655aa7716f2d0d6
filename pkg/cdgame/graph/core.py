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


class Graph(object):
    """Immutable simple undirected graph on nodes ``0..n-1``.

    ``adjacency[v]`` is the strictly ascending tuple of neighbors of ``v``.
    Instances are hashable and safe to share between workers.
    """

    __slots__ = ('_n', '_adj', '_num_edges', '_adj_sets')

    def __init__(self, n, adjacency):
        if n < 0:
            raise CDGameError('node count must be non-negative, got {}'.format(n))
        if len(adjacency) != n:
            raise CDGameError('adjacency has {} rows for {} nodes'.format(len(adjacency), n))
        adj = tuple(tuple(row) for row in adjacency)
        degree_sum = 0
        for v, row in enumerate(adj):
            for i, u in enumerate(row):
                if not 0 <= u < n:
                    raise CDGameError('neighbor {} of node {} out of range'.format(u, v))
                if u == v:
                    raise CDGameError('self-loop at node {}'.format(v))
                if i and row[i - 1] >= u:
                    raise CDGameError('neighbors of node {} not strictly ascending'.format(v))
            degree_sum += len(row)
        self._n = n
        self._adj = adj
        self._num_edges = degree_sum // 2
        self._adj_sets = tuple(frozenset(row) for row in adj)
        for v, row in enumerate(adj):
            for u in row:
                if v not in self._adj_sets[u]:
                    raise CDGameError('adjacency not symmetric: {} lists {} but not back'.format(v, u))

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph from ``(u, v)`` pairs. Duplicates and self-loops are errors."""
        rows = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise CDGameError('edge ({}, {}) out of range for {} nodes'.format(u, v, n))
            if u == v:
                raise CDGameError('self-loop at node {}'.format(u))
            if v in rows[u]:
                raise CDGameError('duplicate edge ({}, {})'.format(min(u, v), max(u, v)))
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, [sorted(row) for row in rows])

    @property
    def n(self):
        return self._n

    @property
    def adjacency(self):
        return self._adj

    @property
    def num_edges(self):
        return self._num_edges

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj_sets[u]

    def edges(self):
        """Yield every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self._adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def check_node(self, v):
        if not 0 <= v < self._n:
            raise CDGameError('node {} out of range for {} nodes'.format(v, self._n))

    def components(self):
        """Connected components as sorted tuples, ordered by smallest node."""
        seen = [False] * self._n
        result = []
        for start in range(self._n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            members = [start]
            while queue:
                v = queue.popleft()
                for u in self._adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        members.append(u)
                        queue.append(u)
            result.append(tuple(sorted(members)))
        return result

    def is_connected(self):
        return self._n <= 1 or len(self.components()) == 1

    def without_node(self, x):
        """Copy with every edge at ``x`` removed; ``x`` stays as an isolated node."""
        self.check_node(x)
        return Graph(self._n, [() if v == x else tuple(u for u in row if u != x)
                               for v, row in enumerate(self._adj)])

    def to_networkx(self):
        """Needs the optional networkx extra (``pip install cdgame[networkx]``)."""
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return 'Graph(n={}, m={})'.format(self._n, self._num_edges)

    def __getstate__(self):
        return (self._n, self._adj)

    def __setstate__(self, state):
        n, adj = state
        self._n = n
        self._adj = adj
        self._num_edges = sum(len(row) for row in adj) // 2
        self._adj_sets = tuple(frozenset(row) for row in adj)


def twin_classes(g, nodes=None):
    """Group ``nodes`` (default: all) by identical open neighborhoods.

    Two non-adjacent nodes with the same neighbor set are false twins and
    exchanging them is an automorphism of ``g``. Classes are sorted tuples,
    ordered by their smallest member.
    """
    if nodes is None:
        nodes = range(g.n)
    groups = {}
    for v in sorted(set(nodes)):
        groups.setdefault(g.adjacency[v], []).append(v)
    return sorted((tuple(members) for members in groups.values()), key=lambda c: c[0])
