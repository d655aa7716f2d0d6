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

import functools
import os
import unittest


def slow(func):
    """Tag a test as a full-scale run; it is skipped unless CDGAME_RUN_SLOW=1."""
    func.cdgame_slow = True
    return func


class MetaTest(type):
    BASE_ENV = {"CDGAME_LOG_LEVEL": "WARNING",
                "CDGAME_THREADS": "1",
                "CDGAME_PROGRESS": "0",
                "CDGAME_MAX_EXHAUSTIVE_NODES": "300",
                "CDGAME_MAX_WELFARE_NODES": "500"}
    for name, value in os.environ.items():
        if name.startswith("CDGAME_") and name in BASE_ENV:
            BASE_ENV[name] = value
    RUN_SLOW = os.environ.get("CDGAME_RUN_SLOW", "0").lower() in ("1", "true", "yes", "on")

    def __new__(cls, name, bases, dict):
        # decorate all test cases
        for k, v in list(dict.items()):
            if k.startswith("test_") and hasattr(v, "__call__"):
                dict[k] = cls.pin_env(v)
        return type(name, bases, dict)

    @classmethod
    def pin_env(cls, func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            if getattr(func, "cdgame_slow", False) and not cls.RUN_SLOW:
                raise unittest.SkipTest("slow test, set CDGAME_RUN_SLOW=1")
            saved = dict(os.environ)
            os.environ.update(cls.BASE_ENV)
            try:
                return func(*args, **kwargs)
            finally:
                os.environ.clear()
                os.environ.update(saved)

        return wrapper
