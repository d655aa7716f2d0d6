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

from multiprocessing import Pool

import cloudpickle
from tqdm import tqdm

from cdgame.common import get_logger, num_threads, show_progress

_worker_fn = None
_in_worker = False
logger = get_logger('parallel')


def _init_worker(blob):
    global _worker_fn, _in_worker
    _worker_fn = cloudpickle.loads(blob)
    _in_worker = True


def _run_item(item):
    return _worker_fn(item)


def progress(iterable, desc=None, total=None):
    """Wrap ``iterable`` in a tqdm bar when CDGAME_PROGRESS is on."""
    if not show_progress():
        return iterable
    return tqdm(iterable, desc=desc, total=total, leave=False)


def parallel_map(fn, items, threads=None, desc=None):
    """Apply ``fn`` to every item, in worker processes when allowed.

    ``fn`` may be a closure or lambda: it is shipped to the workers with
    cloudpickle once per pool. Results keep the order of ``items``, and an
    exception raised by any call is re-raised here.

    Args:
        fn: callable taking one item.
        items: iterable of picklable items.
        threads: worker count; None reads CDGAME_THREADS.
        desc: label for the progress bar.
    """
    items = list(items)
    if threads is None:
        threads = num_threads()
    threads = max(1, min(threads, len(items)))
    if _in_worker:
        # pool workers are daemonic and cannot fork their own pool
        threads = 1
    if threads == 1:
        return [fn(item) for item in progress(items, desc=desc)]

    chunksize = max(1, len(items) // (threads * 4))
    logger.debug("{}: {} items on {} workers".format(desc or 'parallel_map', len(items), threads))
    pool = Pool(threads, initializer=_init_worker, initargs=(cloudpickle.dumps(fn),))
    try:
        results = pool.imap(_run_item, items, chunksize=chunksize)
        results = list(progress(results, desc=desc, total=len(items)))
    except BaseException:
        pool.terminate()
        raise
    pool.close()
    pool.join()
    return results
