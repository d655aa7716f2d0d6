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

from hypothesis import given, settings
from parameterized import parameterized

from cdgame.common.errors import InvalidProfileError
from cdgame.diffusion import GRAY, WHITE, SeedProfile, check_distance_sandwich, diffuse, pair_utilities, \
    parse_state, state_name, utilities
from cdgame.graph import Graph, make_complete, make_cycle, make_hypercube, make_path, make_star, \
    multi_source_distances
from meta_test import MetaTest, slow
from utils import graphs, graphs_with_pair, random_connected_graph, random_profile, reference_diffusion


class DiffusionTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_path_gray_block(self):
        out = diffuse(make_path(5), SeedProfile.single(0, 2))
        self.assertEqual(out.utilities, (1, 3))
        self.assertEqual(out.final, (0, GRAY, 1, 1, 1))
        self.assertEqual(out.steps, 2)
        self.assertEqual(out.adopters(0), [0])
        self.assertEqual(out.adopters(1), [2, 3, 4])

    def test_hypercube_antipodal(self):
        out = diffuse(make_hypercube(3), SeedProfile.single(0, 7))
        self.assertEqual(out.utilities, (4, 4))
        self.assertEqual(out.gray_count, 0)
        self.assertEqual(out.white_count, 0)

    @parameterized.expand([(make_path(4),), (make_cycle(5),), (make_star(3),)])
    def test_shared_seed_turns_gray(self, g):
        out = diffuse(g, SeedProfile.single(1, 1))
        self.assertEqual(out.utilities, (0, 0))
        self.assertEqual(out.final[1], GRAY)
        self.assertEqual(out.white_count, g.n - 1)
        self.assertEqual(out.steps, 0)

    @parameterized.expand([
        ("star", make_star(4), (0, 1), (4, 1)),
        ("k3", make_complete(3), (0, 1), (1, 1)),
        ("p3", make_path(3), (0, 2), (1, 1)),
        ("c4_opposite", make_cycle(4), (0, 2), (1, 1)),
        ("c4_adjacent", make_cycle(4), (0, 1), (2, 2)),
    ])
    def test_utilities(self, _, g, pair, expected):
        self.assertEqual(utilities(g, SeedProfile.single(*pair)), expected)
        self.assertEqual(pair_utilities(g, *pair), expected)

    def test_single_player_covers_component(self):
        g = make_path(6)
        out = diffuse(g, SeedProfile([[2]]))
        self.assertEqual(out.utilities, (6,))
        self.assertEqual(out.steps, 3)

    def test_multi_seed_and_three_players(self):
        # 0-1-2-3-4-5-6 with player 0 on both ends, player 1 in the middle
        g = make_path(7)
        out = diffuse(g, SeedProfile([[0, 6], [3]]))
        self.assertEqual(out.utilities, (4, 3))
        out = diffuse(make_star(3), SeedProfile([[1], [2], [3]]))
        self.assertEqual(out.final, (GRAY, 0, 1, 2))
        self.assertEqual(out.utilities, (1, 1, 1))

    def test_trace_is_monotone(self):
        g = make_path(5)
        out = diffuse(g, SeedProfile.single(0, 2), keep_trace=True)
        self.assertEqual(len(out.trace), out.steps + 1)
        self.assertEqual(out.trace[0], (0, WHITE, 1, WHITE, WHITE))
        self.assertEqual(out.trace[-1], out.final)
        for before, after in zip(out.trace, out.trace[1:]):
            for s, t in zip(before, after):
                if s != WHITE:
                    self.assertEqual(s, t)
        self.assertIsNone(diffuse(g, SeedProfile.single(0, 2)).trace)

    def test_white_behind_gray_stays_white(self):
        # 0 and 2 meet at 1, which walls off 3
        g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
        out = diffuse(g, SeedProfile.single(0, 2))
        self.assertEqual(out.final, (0, GRAY, 1, WHITE))

    @parameterized.expand([
        ([],),
        ([[0], []],),
        ([[0], [7]],),
        ([[-1], [0]],),
    ])
    def test_invalid_profiles(self, seeds):
        with self.assertRaises(InvalidProfileError):
            diffuse(make_path(4), SeedProfile(seeds))

    def test_state_names(self):
        for state in (WHITE, GRAY, 0, 3):
            self.assertEqual(parse_state(state_name(state)), state)
        with self.assertRaises(ValueError):
            parse_state('purple')

    def test_profile_permutation(self):
        g = make_path(7)
        profile = SeedProfile([[0], [3, 4], [6]])
        base = utilities(g, profile)
        for order in itertools.permutations(range(3)):
            self.assertEqual(utilities(g, profile.permuted(order)), tuple(base[p] for p in order))

    @parameterized.expand(itertools.product([2, 3], [1, 3]))
    def test_matches_reference(self, players, max_seeds):
        rng = random.Random(players * 100 + max_seeds)
        for _ in range(150):
            g = random_connected_graph(rng.randint(2, 14), rng.choice([0.05, 0.15, 0.3]), rng)
            seeds = random_profile(g, players, max_seeds, rng)
            out = diffuse(g, SeedProfile(seeds))
            for order_seed in range(3):
                final, utils, steps = reference_diffusion(g, seeds, random.Random(order_seed))
                self.assertEqual(out.final, final)
                self.assertEqual(out.utilities, utils)
                self.assertEqual(out.steps, steps)

    @given(graphs(min_nodes=2, max_nodes=12))
    @settings(max_examples=100, deadline=None)
    def test_conservation_and_termination(self, g):
        rng = random.Random(g.n)
        profile = SeedProfile(random_profile(g, 2, 2, rng))
        out = diffuse(g, profile)
        self.assertEqual(sum(out.utilities) + out.gray_count + out.white_count, g.n)
        self.assertLess(out.steps, g.n)
        solo = diffuse(g, SeedProfile([profile.seeds[0]]))
        self.assertEqual(solo.steps, multi_source_distances(g, profile.seeds[0]).eccentricity())

    def test_gray_detour_outlasts_eccentricity(self):
        # 1 turns gray and player 0 reaches 3 the long way round through 5, 6, 7 and 4
        g = Graph.from_edges(8, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5), (5, 6), (6, 7), (7, 4)])
        profile = SeedProfile.single(0, 2)
        out = diffuse(g, profile)
        self.assertEqual(out.final, (0, GRAY, 1, 0, 0, 0, 0, 0))
        self.assertEqual(out.steps, 5)
        ecc = max(multi_source_distances(g, s).eccentricity() for s in profile.seeds)
        self.assertEqual(ecc, 4)
        self.assertEqual(check_distance_sandwich(g, profile, out), [])


class SandwichTestCase(unittest.TestCase, metaclass=MetaTest):
    def test_path(self):
        self.assertEqual(check_distance_sandwich(make_path(5), SeedProfile.single(0, 2)), [])

    def test_triangle_gray_node_is_equidistant(self):
        g = make_complete(3)
        profile = SeedProfile.single(0, 1)
        out = diffuse(g, profile)
        self.assertEqual(out.final[2], GRAY)
        self.assertEqual(check_distance_sandwich(g, profile, out), [])

    def test_disconnected_white_nodes(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        self.assertEqual(check_distance_sandwich(g, SeedProfile.single(0, 2)), [])

    def test_reports_a_doctored_outcome(self):
        g = make_path(5)
        profile = SeedProfile.single(0, 2)
        out = diffuse(g, profile)
        out.final = (0, GRAY, 1, 0, 1)
        violations = check_distance_sandwich(g, profile, out)
        self.assertEqual([v.node for v in violations], [3])
        self.assertEqual((violations[0].dist_a, violations[0].dist_b), (3, 1))

    def test_needs_two_players(self):
        with self.assertRaises(InvalidProfileError):
            check_distance_sandwich(make_path(3), SeedProfile([[0], [1], [2]]))

    @given(graphs_with_pair(max_nodes=14))
    @settings(max_examples=200, deadline=None)
    def test_single_seed_pairs(self, case):
        g, a, b = case
        self.assertEqual(check_distance_sandwich(g, SeedProfile.single(a, b)), [])

    def _sweep(self, count, seed, max_nodes):
        rng = random.Random(seed)
        for _ in range(count):
            g = random_connected_graph(rng.randint(2, max_nodes), rng.choice([0.02, 0.1, 0.25]), rng)
            profile = SeedProfile(random_profile(g, 2, 3, rng))
            self.assertEqual(check_distance_sandwich(g, profile), [], msg=repr(profile))

    def test_random_sweep(self):
        self._sweep(200, 1, 30)

    @slow
    def test_random_sweep_full(self):
        self._sweep(1000, 2, 200)


if __name__ == '__main__':
    unittest.main()
