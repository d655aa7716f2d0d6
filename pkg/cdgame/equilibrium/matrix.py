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

import numpy as np

from cdgame.common import get_logger
from cdgame.common.parallel import parallel_map
from cdgame.diffusion.engine import pair_utilities

logger = get_logger('equilibrium')


class UtilityMatrix(object):
    """``ua[a, b]``: utility of player 0 for the single-seed profile ``({a}, {b})``.

    Player 1's utility at ``(a, b)`` is ``ua[b, a]``.
    """

    def __init__(self, ua):
        self.ua = np.asarray(ua, dtype=np.int64)
        assert self.ua.ndim == 2 and self.ua.shape[0] == self.ua.shape[1]

    @property
    def n(self):
        return self.ua.shape[0]

    def pair(self, a, b):
        """``(U_0, U_1)`` at the ordered profile ``(a, b)``."""
        return int(self.ua[a, b]), int(self.ua[b, a])

    def best_reply_values(self):
        """Entry ``b``: the most player 0 can get against a seed at ``b``."""
        return self.ua.max(axis=0)

    def to_list(self):
        return self.ua.tolist()


def _row(g, a):
    return [pair_utilities(g, a, b) for b in range(a + 1, g.n)]


def utility_matrix(g, threads=None):
    """Exact utilities for every ordered single-seed pair.

    Each unordered pair is simulated once and both orientations are filled
    from it, so the table costs n(n-1)/2 diffusions. Rows run in parallel.
    """
    n = g.n
    logger.info("utility matrix: {} nodes, {} diffusions".format(n, n * (n - 1) // 2))
    rows = parallel_map(lambda a: _row(g, a), range(n), threads=threads, desc='utility matrix')
    ua = np.zeros((n, n), dtype=np.int64)
    for a, row in enumerate(rows):
        for offset, (u0, u1) in enumerate(row):
            b = a + 1 + offset
            ua[a, b] = u0
            ua[b, a] = u1
    return UtilityMatrix(ua)
