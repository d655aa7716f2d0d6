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


class BlockDecomposition(object):
    """Blocks (biconnected components) and cut vertices of a graph.

    Every edge lies in exactly one block, isolated nodes are singleton
    blocks, and a node shared by two blocks is a cut vertex.
    """

    def __init__(self, blocks, cut_vertices):
        self.blocks = [frozenset(b) for b in blocks]
        self.cut_vertices = frozenset(cut_vertices)
        self._membership = {}
        for i, block in enumerate(self.blocks):
            for v in block:
                self._membership.setdefault(v, set()).add(i)

    def blocks_of(self, v):
        return frozenset(self._membership.get(v, ()))

    def share_block(self, u, v):
        """True when some block contains both ``u`` and ``v``."""
        return bool(self._membership.get(u, set()) & self._membership.get(v, set()))

    def __repr__(self):
        return 'BlockDecomposition(blocks={}, cut_vertices={})'.format(
            [sorted(b) for b in self.blocks], sorted(self.cut_vertices))


def blocks(g):
    """Block decomposition by iterative depth-first search.

    Each component is searched from its smallest node; tree and back edges go
    on an edge stack that is cut off whenever a child's low point does not
    climb above its parent. Disconnected graphs are handled per component.
    """
    adj = g.adjacency
    discovery = {}
    low = {}
    found = []
    cuts = set()
    for start in range(g.n):
        if start in discovery:
            continue
        if not adj[start]:
            discovery[start] = low[start] = len(discovery)
            found.append({start})
            continue
        discovery[start] = low[start] = len(discovery)
        root_children = 0
        edge_stack = []
        stack = [(start, start, iter(adj[start]))]
        while stack:
            grandparent, parent, children = stack[-1]
            child = next(children, None)
            if child is not None:
                if child == grandparent:
                    continue
                if child in discovery:
                    if discovery[child] < discovery[parent]:
                        low[parent] = min(low[parent], discovery[child])
                        edge_stack.append((parent, child))
                else:
                    discovery[child] = low[child] = len(discovery)
                    edge_stack.append((parent, child))
                    stack.append((parent, child, iter(adj[child])))
                continue

            stack.pop()
            if not stack:
                continue
            if low[parent] >= discovery[grandparent]:
                block = set()
                while True:
                    u, v = edge_stack.pop()
                    block.add(u)
                    block.add(v)
                    if (u, v) == (grandparent, parent):
                        break
                found.append(block)
                if len(stack) > 1:
                    cuts.add(grandparent)
            low[grandparent] = min(low[grandparent], low[parent])
            if len(stack) == 1:
                root_children += 1
        if root_children > 1:
            cuts.add(start)
    found.sort(key=lambda b: (min(b), len(b)))
    return BlockDecomposition(found, cuts)
