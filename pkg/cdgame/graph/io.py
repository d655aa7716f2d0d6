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

"""Edge-list and DOT codecs.

Edge-list format: the first non-comment line is ``n m``, followed by ``m``
lines ``u v`` with ``0 <= u, v < n``. Lines starting with ``#`` and blank
lines are ignored.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from cdgame.common.errors import GraphFormatError
from cdgame.diffusion.state import GRAY, WHITE
from cdgame.graph.core import Graph

PLAYER_COLORS = ('red', 'blue', 'green', 'orange', 'purple', 'cyan',
                 'magenta', 'yellow', 'brown', 'pink')


def _parse_ints(line, lineno, count):
    fields = line.split()
    if len(fields) != count:
        raise GraphFormatError('expected {} integers, got {!r}'.format(count, line.strip()), lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError('expected integers, got {!r}'.format(line.strip()), lineno)


def from_edge_list(text):
    """Parse the edge-list format. Writers emit u < v; readers accept either order."""
    header = None
    edges = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if header is None:
            n, m = _parse_ints(line, lineno, 2)
            if n < 0 or m < 0:
                raise GraphFormatError('negative header values', lineno)
            header = (n, m)
            continue
        n = header[0]
        u, v = _parse_ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError('endpoint out of range in edge ({}, {}) for {} nodes'.format(u, v, n), lineno)
        if u == v:
            raise GraphFormatError('self-loop at node {}'.format(u), lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError('duplicate edge {}'.format(key), lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError('missing "n m" header')
    if len(edges) != header[1]:
        raise GraphFormatError('header announces {} edges, found {}'.format(header[1], len(edges)))
    return Graph.from_edges(header[0], edges)


def read_edge_list(path):
    with open(path) as f:
        return from_edge_list(f.read())


def to_edge_list(g, comments=()):
    lines = ['# {}'.format(c) for c in comments]
    lines.append('{} {}'.format(g.n, g.num_edges))
    lines.extend('{} {}'.format(u, v) for u, v in g.edges())
    return '\n'.join(lines) + '\n'


def state_color(state):
    if state == GRAY:
        return 'gray'
    if state == WHITE:
        return 'white'
    return PLAYER_COLORS[state % len(PLAYER_COLORS)]


def to_dot(g, labels=None, name='G'):
    """Render ``g`` as an undirected DOT graph.

    ``labels`` optionally gives one node state per node (player id, ``GRAY``
    or ``WHITE``); each becomes a fill color.
    """
    if labels is not None and len(labels) != g.n:
        raise GraphFormatError('expected {} labels, got {}'.format(g.n, len(labels)))
    lines = ['graph {} {{'.format(name)]
    for v in range(g.n):
        if labels is None:
            lines.append('  {};'.format(v))
        else:
            lines.append('  {} [style=filled, fillcolor={}];'.format(v, state_color(labels[v])))
    for u, v in g.edges():
        lines.append('  {} -- {};'.format(u, v))
    lines.append('}')
    return '\n'.join(lines) + '\n'
