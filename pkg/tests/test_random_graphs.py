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


import math
import unittest

from parameterized import parameterized

from cdgame.common.errors import CDGameError
from cdgame.random_graphs import FIXED_PAIR, UNIFORM_PAIR, TailStats, concentration_table, default_lambda, \
    finite_mean_bound, mean_bound, parse_seed_policy, resolve_p, run_er_trials, sphere_ball_tail_stats
from meta_test import MetaTest, slow


class TrialBatchTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_complete_graph(self):
        batch = run_er_trials(6, 1.0, 5, master_seed=3)
        for r in batch.records:
            self.assertEqual((r.utility_a, r.utility_b, r.gray, r.edges), (1, 1, 4, 15))
            self.assertNotEqual(r.a, r.b)
            self.assertTrue(r.sandwich_ok)
        self.assertEqual(batch.mean(0), 1.0)
        self.assertEqual(batch.standard_error(0), 0.0)
        self.assertEqual(batch.symmetry_gap(), 0.0)
        self.assertTrue(batch.symmetry_holds())
        self.assertTrue(batch.summary()['symmetry_holds'])
        self.assertEqual(batch.concentration(0)['iqr'], 0.0)
        self.assertEqual(batch.gray_fractions, [4 / 6.0] * 5)

    def test_reproducible(self):
        first = run_er_trials(40, 0.1, 12, master_seed=7)
        again = run_er_trials(40, 0.1, 12, master_seed=7, threads=3)
        other = run_er_trials(40, 0.1, 12, master_seed=8)
        self.assertEqual(first.records, again.records)
        self.assertNotEqual(first.records, other.records)
        self.assertEqual([r.trial for r in first.records], list(range(12)))

    def test_trials_are_prefix_stable(self):
        short = run_er_trials(30, 0.2, 4, master_seed=1)
        long = run_er_trials(30, 0.2, 9, master_seed=1)
        self.assertEqual(short.records, long.records[:4])

    def test_fixed_pair(self):
        batch = run_er_trials(20, 0.3, 6, seed_policy=FIXED_PAIR, pair=(0, 1), master_seed=2)
        self.assertEqual(set((r.a, r.b) for r in batch.records), set([(0, 1)]))
        self.assertEqual(batch.summary()['pair'], [0, 1])

    @parameterized.expand([
        (1, 0.5, 3, UNIFORM_PAIR, None),
        (10, 0.0, 3, UNIFORM_PAIR, None),
        (10, 1.5, 3, UNIFORM_PAIR, None),
        (10, 0.5, 0, UNIFORM_PAIR, None),
        (10, 0.5, 3, FIXED_PAIR, None),
        (10, 0.5, 3, FIXED_PAIR, (2, 2)),
        (10, 0.5, 3, FIXED_PAIR, (2, 10)),
        (10, 0.5, 3, 'random-pair', None),
    ])
    def test_errors(self, n, p, trials, policy, pair):
        with self.assertRaises(CDGameError):
            run_er_trials(n, p, trials, seed_policy=policy, pair=pair)

    def test_summary_and_rows(self):
        batch = run_er_trials(25, 0.2, 10, master_seed=4)
        summary = batch.summary()
        self.assertEqual(summary['trials'], 10)
        self.assertEqual(summary['seed_policy'], UNIFORM_PAIR)
        self.assertEqual(summary['sandwich_failures'], [])
        self.assertAlmostEqual(summary['mean_bound'], 1.0)
        rows = list(batch.rows())
        self.assertEqual(len(rows), 10)
        self.assertEqual(sorted(rows[0].keys()),
                         sorted(['trial', 'a', 'b', 'utility_a', 'utility_b', 'gray', 'edges', 'sandwich_ok']))

    def test_concentration_table(self):
        rows = concentration_table([20, 40], trials=8, master_seed=5)
        self.assertEqual([r['n'] for r in rows], [20, 40])
        self.assertAlmostEqual(rows[0]['p'], math.log(20) / 20)
        for r in rows:
            self.assertGreaterEqual(r['iqr_ratio_a'], 0.0)

    @slow
    def test_mean_bound_large(self):
        for n in (1000, 2000):
            batch = run_er_trials(n, resolve_p("log", n), 200, master_seed=11, threads=4)
            self.assertTrue(batch.mean_bound_holds())
            self.assertLess(batch.symmetry_gap(), 3.0)
            self.assertTrue(batch.symmetry_holds())
            self.assertEqual(batch.sandwich_failures, [])

    @slow
    def test_concentration_shrinks(self):
        rows = concentration_table([500, 2000], trials=200, master_seed=13, threads=4)
        self.assertLessEqual(rows[1]['iqr_ratio_a'], rows[0]['iqr_ratio_a'])


class HelpersTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_parse_seed_policy(self):
        self.assertEqual(parse_seed_policy('uniform-distinct-pair'), (UNIFORM_PAIR, None))
        self.assertEqual(parse_seed_policy('fixed-pair:3,8'), (FIXED_PAIR, (3, 8)))
        for text in ('fixed-pair:3', 'fixed-pair:a,b', 'pairs'):
            with self.assertRaises(CDGameError):
                parse_seed_policy(text)

    def test_resolve_p(self):
        self.assertEqual(resolve_p(0.25, 10), 0.25)
        self.assertAlmostEqual(resolve_p('log', 100), math.log(100) / 100)
        self.assertEqual(resolve_p(lambda n: 2.0 / n, 8), 0.25)

    def test_bounds(self):
        self.assertAlmostEqual(mean_bound(0.5), 0.4)
        self.assertLess(finite_mean_bound(1000, 0.01), 1000)
        self.assertAlmostEqual(default_lambda(10, 0.1), 1.0 + math.sqrt(15))


class TailTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_complete_graph_never_hits(self):
        stats = sphere_ball_tail_stats(10, 1.0, 20, lam=40.0)
        self.assertEqual(stats.hits, 0)
        self.assertEqual(stats.empirical, 0.0)
        self.assertFalse(stats.vacuous)
        self.assertTrue(stats.consistent)

    def test_vacuous_bound(self):
        stats = sphere_ball_tail_stats(100, 0.1, 10, lam=10.5, master_seed=3)
        self.assertTrue(stats.vacuous)
        self.assertTrue(stats.consistent)
        d = stats.to_dict()
        self.assertEqual(d['lambda'], 10.5)
        self.assertEqual(d['samples'], 10)

    def test_lambda_must_exceed_mean_degree(self):
        with self.assertRaises(CDGameError):
            sphere_ball_tail_stats(10, 0.5, 5, lam=4.5)

    def test_slack_is_one_sided(self):
        n, p, samples, q = 10, 0.5, 100, 0.25
        mu = (n - 1) * p
        lam = mu + math.sqrt(3.0 * mu * math.log(n ** 2 / q))
        stats = TailStats(n, p, samples, lam, hits=0, master_seed=0)
        self.assertAlmostEqual(stats.analytic, q)
        self.assertAlmostEqual(stats.slack, 2.326 * math.sqrt(q * (1 - q) / samples) + 1.0 / samples, places=6)

    @slow
    def test_tail_at_scale(self):
        stats = sphere_ball_tail_stats(500, resolve_p("log", 500), 500, master_seed=19, threads=4)
        self.assertTrue(stats.consistent, msg=str(stats.to_dict()))

    def test_default_lambda_reproducible(self):
        first = sphere_ball_tail_stats(200, 0.05, 30, master_seed=9)
        again = sphere_ball_tail_stats(200, 0.05, 30, master_seed=9, threads=2)
        self.assertEqual(first.hits, again.hits)
        self.assertAlmostEqual(first.lam, default_lambda(200, 0.05))
        self.assertTrue(first.consistent)


if __name__ == '__main__':
    unittest.main()
