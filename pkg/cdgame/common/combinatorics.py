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

"""Exact integer counting helpers shared by the sweeps and the gadget."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


def binomial(n, k):
    """``n`` choose ``k``; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def multisets(n, k):
    """Number of size ``k`` multisets drawn from ``n`` items."""
    if n == 0:
        return 1 if k == 0 else 0
    return binomial(n + k - 1, k)
