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

import logging
import os

_LOG_FORMAT = '%(asctime)s.%(msecs)03d %(filename)s:%(lineno)s %(levelname)s: %(message)s'
_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
_ROOT_LOGGER = 'cdgame'


def get_env_int(name, default):
    """Read an integer ``CDGAME_*`` variable, falling back to ``default``."""
    value = os.getenv(name)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError('{} should be an integer, got {!r}'.format(name, value))


def get_env_flag(name, default=False):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


def num_threads():
    """Worker processes for parallel sweeps. 0 means one per cpu."""
    threads = get_env_int('CDGAME_THREADS', 0)
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def max_exhaustive_nodes():
    return get_env_int('CDGAME_MAX_EXHAUSTIVE_NODES', 300)


def max_welfare_nodes():
    return get_env_int('CDGAME_MAX_WELFARE_NODES', 500)


def show_progress():
    return get_env_flag('CDGAME_PROGRESS')


def core_search_samples():
    """Random center wirings tried after the structured core candidates."""
    return get_env_int('CDGAME_CORE_SEARCH_SAMPLES', 20000)


def _configure_root():
    root = logging.getLogger(_ROOT_LOGGER)
    if getattr(root, '_cdgame_configured', False):
        return root
    level = os.getenv('CDGAME_LOG_LEVEL', 'WARNING').upper()
    root.setLevel(getattr(logging, level, logging.WARNING))
    formatter = logging.Formatter(_LOG_FORMAT, _DATE_FORMAT)
    handler = logging.StreamHandler()
    handler.setFormatter(formatter)
    root.addHandler(handler)
    log_file = os.getenv('CDGAME_LOG_FILE')
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)
    root.propagate = False
    root._cdgame_configured = True
    return root


def get_logger(name=None):
    """Return a logger under the ``cdgame`` tree.

    Level and optional log file come from ``CDGAME_LOG_LEVEL`` and
    ``CDGAME_LOG_FILE``; the handlers are installed once per process.
    """
    root = _configure_root()
    if not name:
        return root
    return logging.getLogger('{}.{}'.format(_ROOT_LOGGER, name))
