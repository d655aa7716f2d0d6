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

import itertools
import random

from hypothesis import strategies as st

from cdgame.diffusion import GRAY, WHITE
from cdgame.graph import Graph


def reference_diffusion(g, seeds, rng=None):
    """Node-by-node simulator used as an oracle.

    Every round visits the white nodes in a random order and decides each one
    from the snapshot taken at the start of the round. Returns
    ``(final states, utilities, steps)``.
    """
    rng = rng or random.Random(0)
    state = [WHITE] * g.n
    for p, nodes in enumerate(seeds):
        for v in nodes:
            state[v] = p if state[v] in (WHITE, p) else GRAY
    steps = 0
    while True:
        snapshot = list(state)
        order = [v for v in range(g.n) if snapshot[v] == WHITE]
        rng.shuffle(order)
        changed = False
        for v in order:
            types = set(snapshot[u] for u in g.neighbors(v) if snapshot[u] >= 0)
            if len(types) == 1:
                state[v] = types.pop()
                changed = True
            elif len(types) > 1:
                state[v] = GRAY
                changed = True
        if not changed:
            break
        steps += 1
    utilities = tuple(sum(1 for s in state if s == p) for p in range(len(seeds)))
    return tuple(state), utilities, steps


def random_connected_graph(n, p, rng):
    """G(n, p) plus a random spanning tree, so the result is connected."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_profile(g, players, max_seeds, rng):
    return [rng.sample(range(g.n), rng.randint(1, min(max_seeds, g.n))) for _ in range(players)]


@st.composite
def graphs(draw, min_nodes=1, max_nodes=12, connected=False):
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = set(chosen)
    if connected:
        for v in range(1, n):
            u = draw(st.integers(min_value=0, max_value=v - 1))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs_with_pair(draw, min_nodes=2, max_nodes=12, connected=False):
    g = draw(graphs(min_nodes=max(2, min_nodes), max_nodes=max_nodes, connected=connected))
    a = draw(st.integers(min_value=0, max_value=g.n - 1))
    b = draw(st.integers(min_value=0, max_value=g.n - 1).filter(lambda v: v != a))
    return g, a, b


@st.composite
def graphs_with_twins(draw, max_base=6, max_nodes=10):
    """A small graph, possibly disconnected, with some nodes cloned as false twins."""
    base = draw(graphs(min_nodes=1, max_nodes=max_base))
    adj = [set(base.neighbors(v)) for v in range(base.n)]
    clones = draw(st.lists(st.integers(min_value=0, max_value=base.n - 1), max_size=max_nodes - base.n))
    for v in clones:
        w = len(adj)
        adj.append(set(adj[v]))
        for u in adj[w]:
            adj[u].add(w)
    edges = set((min(u, v), max(u, v)) for v in range(len(adj)) for u in adj[v])
    n = len(adj)
    return Graph.from_edges(n, sorted(edges))
