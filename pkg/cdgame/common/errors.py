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

"""Exceptions raised by cdgame operations.

All of them derive from ``ValueError`` so callers written against plain
argument validation keep working.
"""


class CDGameError(ValueError):
    pass


class GraphFormatError(CDGameError):
    """Malformed edge-list document. ``lineno`` is 1-based, or None."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = 'line {}: {}'.format(lineno, message)
        super(GraphFormatError, self).__init__(message)
        self.lineno = lineno


class InvalidProfileError(CDGameError):
    pass


class StrategySpaceError(CDGameError):
    pass


class InstanceError(CDGameError):
    pass


class SizeGuidelineError(CDGameError):
    pass


class CoreVerificationError(CDGameError):
    pass
