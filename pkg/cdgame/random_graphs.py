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

"""Monte Carlo runs of the two-player game on G(n, p).

Trial ``t`` of a batch draws its graph from the stream ``(master_seed, t)``
and its seed pair from ``(master_seed, t, 1)``, so every trial can be rerun
on its own and batches give identical results under any worker count.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math
from collections import namedtuple

import numpy as np

from cdgame.common import get_logger
from cdgame.common.errors import CDGameError
from cdgame.common.parallel import parallel_map
from cdgame.diffusion.engine import SeedProfile, diffuse
from cdgame.diffusion.sandwich import check_distance_sandwich
from cdgame.graph.distances import ball_sizes
from cdgame.graph.generators import make_erdos_renyi

logger = get_logger('random_graphs')

UNIFORM_PAIR = 'uniform-distinct-pair'
FIXED_PAIR = 'fixed-pair'
SQRT15 = math.sqrt(15.0)
# upper 1% point of the standard normal
Z_ONE_SIDED_99 = 2.326

TrialRecord = namedtuple('TrialRecord', ['trial', 'a', 'b', 'utility_a', 'utility_b', 'gray', 'edges',
                                         'sandwich_ok'])


def parse_seed_policy(text):
    """``uniform-distinct-pair`` or ``fixed-pair:A,B``; returns ``(tag, pair)``."""
    if text == UNIFORM_PAIR:
        return UNIFORM_PAIR, None
    tag, _, rest = text.partition(':')
    if tag == FIXED_PAIR:
        try:
            a, b = (int(x) for x in rest.split(','))
        except ValueError:
            raise CDGameError('fixed-pair needs two node ids, got {!r}'.format(rest))
        return FIXED_PAIR, (a, b)
    raise CDGameError('unknown seed policy {!r}'.format(text))


def resolve_p(p_rule, n):
    """``p_rule`` is a number, ``'log'`` for ln(n)/n, or a callable of n."""
    if callable(p_rule):
        return float(p_rule(n))
    if p_rule == 'log':
        return math.log(n) / n
    return float(p_rule)


def mean_bound(p):
    return 1.0 / (5.0 * p)


def finite_mean_bound(n, p):
    return n / (2.0 + (2.0 + 2.0 * SQRT15) * p + (1.0 + SQRT15) * n * p)


def _check_batch(n, p, trials):
    if n < 2:
        raise CDGameError('need at least 2 nodes, got {}'.format(n))
    if not 0.0 < p <= 1.0:
        raise CDGameError('edge probability must be in (0, 1], got {}'.format(p))
    if trials < 1:
        raise CDGameError('trials must be positive, got {}'.format(trials))


def _seed_pair(n, policy, pair, master_seed, trial):
    if policy == FIXED_PAIR:
        return pair
    rng = np.random.default_rng([master_seed, trial, 1])
    a, b = rng.choice(n, size=2, replace=False).tolist()
    return a, b


def _run_trial(n, p, policy, pair, master_seed, trial):
    g = make_erdos_renyi(n, p, [master_seed, trial])
    a, b = _seed_pair(n, policy, pair, master_seed, trial)
    profile = SeedProfile.single(a, b)
    outcome = diffuse(g, profile)
    ok = not check_distance_sandwich(g, profile, outcome)
    return TrialRecord(trial, a, b, outcome.utilities[0], outcome.utilities[1], outcome.gray_count,
                       g.num_edges, ok)


def _ratio_stats(values):
    values = np.asarray(values, dtype=np.float64)
    mean = values.mean()
    if mean == 0:
        return {'q25': 0.0, 'median': 0.0, 'q75': 0.0, 'iqr': 0.0, 'std': 0.0}
    ratio = values / mean
    q25, q50, q75 = np.percentile(ratio, [25, 50, 75])
    return {'q25': float(q25), 'median': float(q50), 'q75': float(q75), 'iqr': float(q75 - q25),
            'std': float(ratio.std())}


class TrialBatchResult(object):
    """Per-trial records of one batch plus the statistics derived from them."""

    def __init__(self, n, p, trials, seed_policy, master_seed, records, pair=None):
        self.n = n
        self.p = p
        self.trials = trials
        self.seed_policy = seed_policy
        self.pair = pair
        self.master_seed = master_seed
        self.records = records

    def utilities(self, player):
        return np.array([r.utility_a if player == 0 else r.utility_b for r in self.records], dtype=np.int64)

    @property
    def gray_fractions(self):
        return [r.gray / self.n for r in self.records]

    @property
    def sandwich_failures(self):
        return [r.trial for r in self.records if not r.sandwich_ok]

    def mean(self, player=0):
        return float(self.utilities(player).mean())

    def standard_error(self, player=0):
        u = self.utilities(player)
        if len(u) < 2:
            return 0.0
        return float(u.std(ddof=1) / math.sqrt(len(u)))

    def concentration(self, player=0):
        return _ratio_stats(self.utilities(player))

    def symmetry_gap(self):
        """``|mean_A - mean_B|`` in pooled standard errors; 0 when both errors vanish."""
        pooled = math.sqrt(self.standard_error(0) ** 2 + self.standard_error(1) ** 2)
        gap = abs(self.mean(0) - self.mean(1))
        if pooled == 0:
            return 0.0 if gap == 0 else float('inf')
        return gap / pooled

    def symmetry_holds(self, sigmas=3.0):
        return self.symmetry_gap() < sigmas

    def mean_bound_holds(self, sigmas=3.0):
        """One-sided check of the sample mean of U_A against 1/(5p)."""
        return self.mean(0) + sigmas * self.standard_error(0) >= mean_bound(self.p)

    def summary(self):
        return {
            'n': self.n,
            'p': self.p,
            'trials': self.trials,
            'seed_policy': self.seed_policy,
            'pair': list(self.pair) if self.pair else None,
            'master_seed': self.master_seed,
            'mean_utility_a': self.mean(0),
            'mean_utility_b': self.mean(1),
            'stderr_utility_a': self.standard_error(0),
            'stderr_utility_b': self.standard_error(1),
            'mean_gray_fraction': float(np.mean(self.gray_fractions)),
            'concentration_a': self.concentration(0),
            'concentration_b': self.concentration(1),
            'symmetry_gap_stderr': self.symmetry_gap(),
            'symmetry_holds': self.symmetry_holds(),
            'mean_bound': mean_bound(self.p),
            'finite_mean_bound': finite_mean_bound(self.n, self.p),
            'mean_bound_holds': self.mean_bound_holds(),
            'sandwich_failures': self.sandwich_failures,
        }

    def rows(self):
        for r in self.records:
            yield r._asdict()


def run_er_trials(n, p, trials, seed_policy=UNIFORM_PAIR, master_seed=0, pair=None, threads=None):
    """Run ``trials`` independent games on fresh G(n, p) samples.

    Args:
        n: node count.
        p: edge probability in (0, 1].
        trials: number of graphs to draw.
        seed_policy: ``uniform-distinct-pair`` or ``fixed-pair``.
        master_seed: root of every trial's random streams.
        pair: the ``(a, b)`` placement for ``fixed-pair``.
        threads: worker count; None reads CDGAME_THREADS.
    """
    _check_batch(n, p, trials)
    if seed_policy == FIXED_PAIR:
        if pair is None or len(pair) != 2 or pair[0] == pair[1]:
            raise CDGameError('fixed-pair needs two distinct nodes, got {}'.format(pair))
        for v in pair:
            if not 0 <= v < n:
                raise CDGameError('seed {} out of range for {} nodes'.format(v, n))
        pair = tuple(pair)
    elif seed_policy != UNIFORM_PAIR:
        raise CDGameError('unknown seed policy {!r}'.format(seed_policy))

    records = parallel_map(lambda t: _run_trial(n, p, seed_policy, pair, master_seed, t),
                           range(trials), threads=threads, desc='G({}, {:.4g})'.format(n, p))
    result = TrialBatchResult(n, p, trials, seed_policy, master_seed, records, pair)
    if result.sandwich_failures:
        logger.warning("{} trials broke the distance sandwich".format(len(result.sandwich_failures)))
    logger.info("G({}, {:.4g}): {} trials, mean U_A {:.3f}".format(n, p, trials, result.mean(0)))
    return result


def concentration_table(ns, p_rule='log', trials=200, master_seed=0, threads=None):
    """One row of concentration statistics per node count in ``ns``."""
    rows = []
    for n in ns:
        p = resolve_p(p_rule, n)
        batch = run_er_trials(n, p, trials, master_seed=master_seed, threads=threads)
        stats = batch.concentration(0)
        rows.append({
            'n': n,
            'p': p,
            'trials': trials,
            'mean_utility_a': batch.mean(0),
            'iqr_ratio_a': stats['iqr'],
            'std_ratio_a': stats['std'],
            'mean_bound': mean_bound(p),
            'finite_mean_bound': finite_mean_bound(n, p),
        })
    return rows


class TailStats(object):
    """Empirical frequency of a sphere outgrowing its inner ball, next to the analytic bound."""

    def __init__(self, n, p, samples, lam, hits, master_seed):
        self.n = n
        self.p = p
        self.samples = samples
        self.lam = lam
        self.hits = hits
        self.master_seed = master_seed

    @property
    def empirical(self):
        return self.hits / self.samples

    @property
    def analytic(self):
        mu = (self.n - 1) * self.p
        return self.n ** 2 * math.exp(-(self.lam - mu) ** 2 / (3.0 * mu))

    @property
    def vacuous(self):
        return self.analytic > 1.0

    @property
    def slack(self):
        # one-sided binomial margin plus one sample of rounding
        q = min(self.analytic, 1.0)
        return Z_ONE_SIDED_99 * math.sqrt(q * (1.0 - q) / self.samples) + 1.0 / self.samples

    @property
    def consistent(self):
        return self.vacuous or self.empirical <= self.analytic + self.slack

    def to_dict(self):
        return {
            'n': self.n, 'p': self.p, 'samples': self.samples, 'lambda': self.lam,
            'master_seed': self.master_seed, 'hits': self.hits, 'empirical': self.empirical,
            'analytic': self.analytic, 'vacuous': self.vacuous, 'slack': self.slack,
            'consistent': self.consistent,
        }


def default_lambda(n, p):
    return (1.0 + SQRT15) * n * p


def _tail_event(n, p, lam, master_seed, sample):
    g = make_erdos_renyi(n, p, [master_seed, sample])
    balls = ball_sizes(g, 0)
    return any(balls[i] - balls[i - 1] >= lam * balls[i - 1] for i in range(1, len(balls)))


def sphere_ball_tail_stats(n, p, samples, lam=None, master_seed=0, threads=None):
    """Estimate P(exists i: |S(i)| >= lam |B(i-1)|) around node 0 of G(n, p)."""
    _check_batch(n, p, samples)
    if lam is None:
        lam = default_lambda(n, p)
    if lam <= (n - 1) * p:
        raise CDGameError('lambda must exceed (n - 1) p = {}, got {}'.format((n - 1) * p, lam))
    events = parallel_map(lambda s: _tail_event(n, p, lam, master_seed, s), range(samples),
                          threads=threads, desc='tail')
    stats = TailStats(n, p, samples, lam, sum(1 for e in events if e), master_seed)
    logger.info("tail n={} p={:.4g} lambda={:.4g}: empirical {:.4g}, analytic {:.4g}".format(
        n, p, lam, stats.empirical, stats.analytic))
    return stats
