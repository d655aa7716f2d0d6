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

from cdgame.equilibrium.matrix import UtilityMatrix, utility_matrix
from cdgame.equilibrium.enumerate import (ConditionCheck, ConditionsReport, EquilibriumReport, PairEquilibrium,
                                          enumerate_equilibria_2p, necessary_conditions_report)
from cdgame.equilibrium.certify import Deviation, EquilibriumDecision, best_response, is_equilibrium
from cdgame.equilibrium.restricted import RestrictedEquilibria, restricted_equilibria
