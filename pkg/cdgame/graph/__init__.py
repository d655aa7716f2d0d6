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

from cdgame.graph.core import Graph, twin_classes
from cdgame.graph.generators import make_lattice, make_hypercube, make_erdos_renyi, \
    make_path, make_cycle, make_complete, make_star, lattice_node, lattice_coords
from cdgame.graph.distances import UNREACHABLE, DistanceField, multi_source_distances, \
    sphere_sizes, ball_sizes
from cdgame.graph.blocks import BlockDecomposition, blocks
from cdgame.graph.io import from_edge_list, read_edge_list, to_edge_list, to_dot
