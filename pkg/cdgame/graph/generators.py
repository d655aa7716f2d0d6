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

"""Graph families.

Coordinate maps are fixed so tests can address nodes symbolically:

* ``make_lattice(m, n)``: node ``(x, y)`` with ``0 <= x <= m``, ``0 <= y <= n``
  has id ``x * (n + 1) + y``.
* ``make_hypercube(k)``: the node id is the integer value of its k-bit label.
* ``make_star(leaves)``: the center is node 0.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

import numpy as np

from cdgame.common.errors import CDGameError
from cdgame.graph.core import Graph

MAX_HYPERCUBE_DIM = 20


def lattice_node(m, n, x, y):
    return x * (n + 1) + y


def lattice_coords(m, n, v):
    return divmod(v, n + 1)


def make_lattice(m, n):
    if m < 1 or n < 1:
        raise CDGameError('lattice sides must be positive, got ({}, {})'.format(m, n))
    edges = []
    for x in range(m + 1):
        for y in range(n + 1):
            v = lattice_node(m, n, x, y)
            if x < m:
                edges.append((v, lattice_node(m, n, x + 1, y)))
            if y < n:
                edges.append((v, lattice_node(m, n, x, y + 1)))
    return Graph.from_edges((m + 1) * (n + 1), edges)


def make_hypercube(k):
    if not 1 <= k <= MAX_HYPERCUBE_DIM:
        raise CDGameError('hypercube dimension must be in [1, {}], got {}'.format(MAX_HYPERCUBE_DIM, k))
    size = 1 << k
    adjacency = [sorted(v ^ (1 << bit) for bit in range(k)) for v in range(size)]
    return Graph(size, adjacency)


def make_erdos_renyi(n, p, seed):
    """Sample G(n, p).

    Pairs are visited in lexicographic order with one uniform draw each from
    ``numpy.random.default_rng(seed)``, so ``(n, p, seed)`` fixes the graph.
    ``seed`` may be an int or a sequence of ints.
    """
    if n < 1:
        raise CDGameError('node count must be positive, got {}'.format(n))
    if not 0.0 <= p <= 1.0:
        raise CDGameError('edge probability must be in [0, 1], got {}'.format(p))
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(len(rows)) < p
    return Graph.from_edges(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def make_path(n):
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def make_cycle(n):
    if n < 3:
        raise CDGameError('a cycle needs at least 3 nodes, got {}'.format(n))
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def make_complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def make_star(leaves):
    return Graph.from_edges(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])
