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

"""Node states of the diffusion process.

A node state is a player id (``>= 0``) once the node adopts that player's
type, or one of the two sentinels below.
"""

WHITE = -1
GRAY = -2


def state_name(state):
    if state == WHITE:
        return 'white'
    if state == GRAY:
        return 'gray'
    return 'player{}'.format(state)


def parse_state(name):
    if name == 'white':
        return WHITE
    if name == 'gray':
        return GRAY
    if name.startswith('player'):
        return int(name[len('player'):])
    raise ValueError('unknown node state {!r}'.format(name))
