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

"""Distance sandwich check for two-player runs.

With ``d_A`` and ``d_B`` the distances to each player's seed set, every
two-player outcome satisfies

    {d_A < d_B} <= adopters(A) <= {d_A <= d_B}, symmetrically for B,
    gray or white nodes <= {d_A == d_B}.

Unreachable counts as larger than every finite distance and equal to itself.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import namedtuple

from cdgame.common.errors import InvalidProfileError
from cdgame.diffusion.engine import diffuse
from cdgame.diffusion.state import GRAY, WHITE
from cdgame.graph.distances import UNREACHABLE, multi_source_distances

Violation = namedtuple('Violation', ['node', 'dist_a', 'dist_b', 'state', 'rule'])


def _less(x, y):
    if x is UNREACHABLE:
        return False
    return y is UNREACHABLE or x < y


def check_distance_sandwich(g, profile, outcome=None):
    """Return the list of nodes breaking the sandwich; empty on a correct run."""
    if profile.k != 2:
        raise InvalidProfileError('the sandwich check needs exactly 2 players, got {}'.format(profile.k))
    profile.validate(g)
    if outcome is None:
        outcome = diffuse(g, profile)
    dist_a = multi_source_distances(g, profile.seeds[0]).dist
    dist_b = multi_source_distances(g, profile.seeds[1]).dist
    own = (set(outcome.adopters(0)), set(outcome.adopters(1)))
    violations = []
    for v, state in enumerate(outcome.final):
        da, db = dist_a[v], dist_b[v]
        if _less(da, db) and v not in own[0]:
            violations.append(Violation(v, da, db, state, 'closer to player 0 but not adopted by it'))
        if _less(db, da) and v not in own[1]:
            violations.append(Violation(v, da, db, state, 'closer to player 1 but not adopted by it'))
        if state in (GRAY, WHITE) and da != db:
            violations.append(Violation(v, da, db, state, 'unadopted node not equidistant'))
    return violations
