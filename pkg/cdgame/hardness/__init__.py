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

from cdgame.hardness.partition import ThreePartitionInstance, parse_instance, read_instance, \
    format_instance, solve_3partition
from cdgame.hardness.core import STARS, CoreSpec, CoreReport, named_candidates, rotation_candidate, \
    core_spec_by_name, make_core, screen_centers, verify_core, select_core
from cdgame.hardness.gadget import GadgetGraph, ExtendedGraph, ExtensionCheck, ReductionReport, \
    star_size, guard_window, build_reduction_graph, extend_graph, verify_extension, \
    partition_profile, verify_reduction
