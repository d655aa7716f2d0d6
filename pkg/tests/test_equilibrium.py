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


import itertools
import random
import unittest

from hypothesis import given, settings, strategies as st
from parameterized import parameterized

from cdgame.common.errors import CDGameError, InvalidProfileError, StrategySpaceError
from cdgame.diffusion import SeedProfile, utilities
from cdgame.equilibrium import best_response, enumerate_equilibria_2p, is_equilibrium, \
    necessary_conditions_report, restricted_equilibria, utility_matrix
from cdgame.equilibrium.enumerate import EquilibriumReport, ceil_div
from cdgame.equilibrium.restricted import _ComponentGame
from cdgame.graph import Graph, make_complete, make_cycle, make_hypercube, make_lattice, make_path, make_star
from meta_test import MetaTest, slow
from utils import graphs_with_twins, random_connected_graph


def odd_hamming_pairs(k):
    size = 1 << k
    return set((a, b) for a in range(size) for b in range(size) if bin(a ^ b).count('1') % 2 == 1)


class UtilityMatrixTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_triangle(self):
        ua = utility_matrix(make_complete(3)).to_list()
        self.assertEqual(ua, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])

    def test_path_endpoints(self):
        m = utility_matrix(make_path(3))
        self.assertEqual(m.pair(0, 2), (1, 1))
        self.assertEqual(m.pair(1, 0), (2, 1))

    def test_hypercube_odd_distance(self):
        m = utility_matrix(make_hypercube(3))
        for a, b in odd_hamming_pairs(3):
            self.assertEqual(m.pair(a, b), (4, 4))

    @parameterized.expand([(1,), (3,)])
    def test_role_symmetry_and_range(self, threads):
        rng = random.Random(threads)
        g = random_connected_graph(11, 0.2, rng)
        m = utility_matrix(g, threads=threads)
        n = g.n
        for a in range(n):
            self.assertEqual(m.ua[a, a], 0)
        self.assertTrue(((m.ua >= 0) & (m.ua <= n)).all())
        for _ in range(30):
            a, b = rng.sample(range(n), 2)
            self.assertEqual(utilities(g, SeedProfile.single(a, b)), m.pair(a, b))

    def test_best_reply_values(self):
        m = utility_matrix(make_star(4))
        self.assertEqual(m.best_reply_values().tolist(), [1, 4, 4, 4, 4])


class EnumerationTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_cycle4(self):
        report = enumerate_equilibria_2p(make_cycle(4))
        expected = set((a, b) for a in range(4) for b in range(4) if (a - b) % 4 in (1, 3))
        self.assertEqual(report.pairs(), expected)
        for e in report.equilibria:
            self.assertEqual((e.utility_a, e.utility_b), (2, 2))

    def test_star(self):
        report = enumerate_equilibria_2p(make_star(4))
        expected = set([(0, leaf) for leaf in range(1, 5)] + [(leaf, 0) for leaf in range(1, 5)])
        self.assertEqual(report.pairs(), expected)

    def test_grid_center(self):
        g = make_lattice(2, 2)
        plain = enumerate_equilibria_2p(g)
        filtered = enumerate_equilibria_2p(g, use_block_filter=True, use_degree_filter=True)
        self.assertEqual(plain.pairs(), filtered.pairs())
        self.assertTrue(plain.pairs())
        for a, b in plain.pairs():
            self.assertIn(4, (a, b))
            self.assertTrue(g.has_edge(a, b))

    @parameterized.expand([(k,) for k in range(1, 5)])
    def test_hypercube(self, k):
        report = enumerate_equilibria_2p(make_hypercube(k), use_block_filter=True, use_degree_filter=True)
        self.assertEqual(report.pairs(), odd_hamming_pairs(k))

    @slow
    def test_hypercube_large(self):
        for k in range(5, 9):
            report = enumerate_equilibria_2p(make_hypercube(k), use_degree_filter=True)
            self.assertEqual(report.pairs(), odd_hamming_pairs(k))

    def test_filter_soundness(self):
        rng = random.Random(5)
        for trial in range(25):
            g = random_connected_graph(rng.randint(3, 12), rng.choice([0.05, 0.2, 0.4]), rng)
            matrix = utility_matrix(g)
            results = []
            for use_block, use_degree in itertools.product([False, True], repeat=2):
                report = enumerate_equilibria_2p(g, use_block, use_degree, matrix=matrix)
                total = report.candidates_examined + report.pruned_by_block + report.pruned_by_degree_bound
                self.assertEqual(total, g.n * (g.n - 1))
                results.append(report.pairs())
                self.assertTrue(necessary_conditions_report(g, report).passed)
            for pairs in results[1:]:
                self.assertEqual(pairs, results[0])

    @slow
    def test_filter_soundness_corpus(self):
        rng = random.Random(6)
        for _ in range(100):
            g = random_connected_graph(rng.randint(5, 40), rng.choice([0.03, 0.08, 0.15]), rng)
            matrix = utility_matrix(g)
            plain = enumerate_equilibria_2p(g, matrix=matrix)
            filtered = enumerate_equilibria_2p(g, True, True, matrix=matrix)
            self.assertEqual(plain.pairs(), filtered.pairs())
            self.assertTrue(necessary_conditions_report(g, plain).passed)

    def test_disconnected_disables_filters(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        report = enumerate_equilibria_2p(g, use_block_filter=True, use_degree_filter=True)
        self.assertFalse(report.filters_applied)
        self.assertEqual(report.pairs(), enumerate_equilibria_2p(g).pairs())
        conditions = necessary_conditions_report(g, report)
        self.assertFalse(conditions.applicable)
        self.assertTrue(conditions.passed)

    def test_report_dict(self):
        d = enumerate_equilibria_2p(make_path(2)).to_dict()
        self.assertEqual(len(d['equilibria']), 2)
        self.assertEqual(d['equilibria'][0], {'a': 0, 'b': 1, 'utility_a': 1, 'utility_b': 1})
        self.assertEqual(d['candidates_examined'], 2)


class NecessaryConditionsTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_ceil_div(self):
        self.assertEqual(ceil_div(4, 4), 1)
        self.assertEqual(ceil_div(3, 2), 2)
        self.assertEqual(ceil_div(7, 1), 7)

    def test_star(self):
        g = make_star(4)
        conditions = necessary_conditions_report(g, enumerate_equilibria_2p(g))
        self.assertEqual(len(conditions.checks), 8)
        self.assertTrue(conditions.passed)
        self.assertEqual(conditions.failures(), [])

    def test_cycle4(self):
        g = make_cycle(4)
        self.assertTrue(necessary_conditions_report(g, enumerate_equilibria_2p(g)).passed)

    def test_empty_is_vacuous(self):
        report = EquilibriumReport([], 0, 0, 0)
        self.assertTrue(necessary_conditions_report(make_path(4), report).passed)

    def test_flags_a_fake_equilibrium(self):
        from cdgame.equilibrium.enumerate import PairEquilibrium
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        report = EquilibriumReport([PairEquilibrium(0, 4, 1, 1)], 1, 0, 0)
        failures = necessary_conditions_report(g, report).failures()
        self.assertEqual(len(failures), 1)
        self.assertFalse(failures[0].common_block)
        self.assertFalse(failures[0].degree_bound_a)


class CertificationTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_cycle4_adjacent(self):
        decision = is_equilibrium(make_cycle(4), SeedProfile.single(0, 1))
        self.assertTrue(decision.is_equilibrium)
        self.assertIsNone(decision.deviation)
        self.assertEqual(decision.utilities, (2, 2))

    def test_cycle4_opposite(self):
        decision = is_equilibrium(make_cycle(4), SeedProfile.single(0, 2))
        self.assertFalse(decision.is_equilibrium)
        self.assertEqual(tuple(decision.deviation), (0, 1, 1))
        self.assertEqual(decision.utilities, (1, 1))

    def test_singleton_spaces(self):
        rng = random.Random(3)
        g = random_connected_graph(9, 0.3, rng)
        for _ in range(10):
            seeds = rng.sample(range(g.n), 3)
            decision = is_equilibrium(g, SeedProfile.single(*seeds), [[v] for v in seeds])
            self.assertTrue(decision.is_equilibrium)

    def test_errors(self):
        g = make_path(4)
        with self.assertRaises(StrategySpaceError):
            is_equilibrium(g, SeedProfile.single(0, 3), [[1, 2], None])
        with self.assertRaises(StrategySpaceError):
            is_equilibrium(g, SeedProfile.single(0, 3), [None])
        with self.assertRaises(InvalidProfileError):
            is_equilibrium(g, SeedProfile([[0, 1], [3]]))
        with self.assertRaises(InvalidProfileError):
            is_equilibrium(g, SeedProfile.single(0))
        with self.assertRaises(StrategySpaceError):
            best_response(g, [0], 1, [])
        with self.assertRaises(CDGameError):
            is_equilibrium(g, SeedProfile.single(0, 3), [[0, -1], None])
        with self.assertRaises(CDGameError):
            is_equilibrium(g, SeedProfile.single(0, 3), [None, [3, 4]])

    @parameterized.expand([
        ("star", make_star(4), [0], [1, 2, 3, 4], 1),
        ("p3", make_path(3), [1], [0, 2], 1),
        ("k4", make_complete(4), [0], [1, 2, 3], 1),
        ("c4", make_cycle(4), [0], [1, 3], 2),
    ])
    def test_best_response(self, _, g, fixed, expected, value):
        self.assertEqual(best_response(g, fixed, 1), (expected, value))
        self.assertEqual(best_response(g, fixed, 0), (expected, value))

    def test_best_response_restricted(self):
        self.assertEqual(best_response(make_star(4), [0], 1, [0, 3]), ([3], 1))

    def test_agrees_with_enumeration(self):
        rng = random.Random(11)
        for _ in range(12):
            g = random_connected_graph(rng.randint(2, 8), 0.3, rng)
            pairs = enumerate_equilibria_2p(g).pairs()
            for a, b in itertools.permutations(range(g.n), 2):
                decision = is_equilibrium(g, SeedProfile.single(a, b))
                self.assertEqual(decision.is_equilibrium, (a, b) in pairs)


class RestrictedTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_star_two_players(self):
        g = make_star(4)
        plain = restricted_equilibria(g, 2, quotient=False)
        self.assertEqual(plain.equilibria, [(0, 1), (0, 2), (0, 3), (0, 4)])
        folded = restricted_equilibria(g, 2)
        self.assertEqual(folded.equilibria, [(0, 1)])
        self.assertEqual(folded.utilities, [(4, 1)])
        self.assertLess(folded.profiles_examined, plain.profiles_examined)

    def test_star_three_players(self):
        g = make_star(4)
        folded = restricted_equilibria(g, 3)
        self.assertEqual(folded.equilibria, [(0, 1, 2)])
        self.assertEqual(folded.utilities, [(3, 1, 1)])
        self.assertEqual(len(restricted_equilibria(g, 3, quotient=False)), 6)

    def test_matches_pair_enumeration(self):
        rng = random.Random(2)
        for _ in range(10):
            g = random_connected_graph(rng.randint(2, 9), 0.3, rng)
            pairs = set(tuple(sorted(p)) for p in enumerate_equilibria_2p(g).pairs())
            self.assertEqual(set(restricted_equilibria(g, 2, quotient=False).equilibria), pairs)

    def test_matches_certification(self):
        rng = random.Random(4)
        g = random_connected_graph(7, 0.35, rng)
        space = [0, 1, 2, 4, 6]
        result = restricted_equilibria(g, 3, space, quotient=False)
        for nodes in itertools.combinations_with_replacement(space, 3):
            decision = is_equilibrium(g, SeedProfile.single(*nodes), [space] * 3)
            self.assertEqual(decision.is_equilibrium, nodes in result.equilibria, msg=str(nodes))

    @given(graphs_with_twins(), st.integers(min_value=2, max_value=3), st.data())
    @settings(max_examples=60, deadline=None)
    def test_folding_matches_plain_sweep(self, g, players, data):
        space = data.draw(st.one_of(st.none(), st.lists(st.integers(min_value=0, max_value=g.n - 1),
                                                        min_size=1, unique=True)))
        nodes = sorted(range(g.n)) if space is None else sorted(space)
        plain = restricted_equilibria(g, players, space, quotient=False)
        folded = restricted_equilibria(g, players, space)
        canonical = _ComponentGame(g, nodes, True).canonical
        self.assertEqual(set(canonical(p) for p in plain.equilibria), set(folded.equilibria))
        self.assertLessEqual(set(folded.equilibria), set(plain.equilibria))
        for seeds, values in zip(folded.equilibria, folded.utilities):
            decision = is_equilibrium(g, SeedProfile.single(*seeds), [nodes] * players)
            self.assertTrue(decision.is_equilibrium, msg=str(seeds))
            self.assertEqual(decision.utilities, values)

    def test_to_dict(self):
        d = restricted_equilibria(make_path(2), 2).to_dict()
        self.assertEqual(d['equilibria'], [{'seeds': [0, 1], 'utilities': [1, 1]}])
        self.assertEqual(d['players'], 2)

    def test_errors(self):
        with self.assertRaises(StrategySpaceError):
            restricted_equilibria(make_path(3), 1)
        with self.assertRaises(StrategySpaceError):
            restricted_equilibria(make_path(3), 2, [])


if __name__ == '__main__':
    unittest.main()
