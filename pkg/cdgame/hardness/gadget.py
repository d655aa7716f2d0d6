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

import itertools

from cdgame.common import get_logger, max_exhaustive_nodes
from cdgame.common.combinatorics import binomial
from cdgame.common.errors import CDGameError, CoreVerificationError, InstanceError, SizeGuidelineError
from cdgame.diffusion.engine import SeedProfile
from cdgame.equilibrium.certify import is_equilibrium
from cdgame.equilibrium.enumerate import enumerate_equilibria_2p
from cdgame.equilibrium.restricted import restricted_equilibria
from cdgame.graph.core import Graph
from cdgame.hardness.core import STARS, CoreSpec, core_spec_by_name, make_core, select_core, verify_core
from cdgame.hardness.partition import solve_3partition

logger = get_logger('hardness')

# largest m whose T-restricted sweep is run by verify_reduction
MAX_SWEEP_GROUPS = 2


def star_size(inst):
    """Smallest integer d with (beta - 1) c / 4 < d < beta c / 4."""
    c = binomial(3 * inst.m, 3)
    d = (inst.beta - 1) * c // 4 + 1
    if 4 * d >= inst.beta * c:
        raise InstanceError('no integer star size in (({} - 1) * {} / 4, {} * {} / 4)'.format(
            inst.beta, c, inst.beta, c))
    if not (2 * 9 * d > 3 * inst.beta * c and 4 * d > (inst.beta - 1) * c):
        raise InstanceError('star size {} breaks the gadget inequalities'.format(d))
    return d


def guard_window(inst):
    """Bounds on the core guard under which both reduction directions hold.

    A middle player holding a triple of sum ``s`` earns ``c s + 1``. The best
    reply against the core player must beat that for ``s = beta - 1`` and
    lose to it for ``s = beta``.
    """
    c = binomial(3 * inst.m, 3)
    return (inst.beta - 1) * c + 2, inst.beta * c


class GadgetGraph(object):
    """Reduction graph for one 3-partition instance.

    Node ids run left region first, then the middle clique in triple order,
    then the core. ``regions[v]`` labels node ``v`` as ``left:i``,
    ``middle:i,j,k``, ``core:center:s`` or ``core:leaf:s``.

    Attributes:
        graph: the Graph.
        regions: one label per node.
        T: sorted middle and core nodes, the common strategy space.
        params: sizes, c, d and the chosen core.
        core_report: CoreReport of the core wiring in use.
        right_seed: core node where the core player is placed.
    """

    def __init__(self, instance, graph, regions, triples, params, core_report):
        self.instance = instance
        self.graph = graph
        self.regions = regions
        self.triples = triples
        self.params = params
        self.core_report = core_report
        self.middle_offset = params['n_left']
        self.core_offset = params['n_left'] + params['n_middle']
        self.T = tuple(range(self.middle_offset, graph.n))
        self.right_seed = self.core_offset + core_report.guard_node
        self._middle_of = dict((t, self.middle_offset + i) for i, t in enumerate(triples))

    def middle_node(self, triple):
        return self._middle_of[tuple(sorted(triple))]

    def region_nodes(self, prefix):
        return [v for v, label in enumerate(self.regions) if label.startswith(prefix)]

    def sidecar(self):
        return {
            'instance': self.instance.to_dict(),
            'params': dict(self.params),
            'T': list(self.T),
            'right_seed': self.right_seed,
            'regions': list(self.regions),
            'core': self.core_report.to_dict(),
        }

    def __repr__(self):
        return 'GadgetGraph(n={}, c={}, d={}, core={})'.format(
            self.graph.n, self.params['c'], self.params['d'], self.params['core'])


def _resolve_core(inst, d, core):
    window = guard_window(inst)
    if core is None:
        return select_core(d, window)
    spec = core if isinstance(core, CoreSpec) else core_spec_by_name(core)
    report = verify_core(spec, d)
    if not report.passed or not report.guard_within(*window):
        raise CoreVerificationError('core {} fails at d={}: sole_ok={} no_equilibrium={} deviation_ok={} '
                                    'guard={} window={}'.format(spec.name, d, report.sole_ok,
                                                                report.no_equilibrium, report.deviation_ok,
                                                                report.guard, window))
    return report


def build_reduction_graph(inst, core=None):
    """Build the left, middle and core regions for ``inst``.

    Args:
        inst: ThreePartitionInstance.
        core: None to search for a wiring, or a CoreSpec or wiring name.
    """
    c = binomial(3 * inst.m, 3)
    d = star_size(inst)
    report = _resolve_core(inst, d, core)

    triples = list(itertools.combinations(range(3 * inst.m), 3))
    regions = []
    left_start = []
    for i, alpha in enumerate(inst.alphas):
        left_start.append(len(regions))
        regions.extend(['left:{}'.format(i)] * (c * alpha))
    n_left = len(regions)
    regions.extend('middle:{},{},{}'.format(*t) for t in triples)
    core_offset = len(regions)
    for s in range(STARS):
        regions.append('core:center:{}'.format(s))
        regions.extend(['core:leaf:{}'.format(s)] * (d - 1))

    edges = []
    for i, alpha in enumerate(inst.alphas):
        holders = [n_left + x for x, t in enumerate(triples) if i in t]
        for v in range(left_start[i], left_start[i] + c * alpha):
            edges.extend((v, u) for u in holders)
    edges.extend(itertools.combinations(range(n_left, core_offset), 2))
    edges.extend((core_offset + u, core_offset + v) for u, v in make_core(report.spec, d).edges())

    graph = Graph.from_edges(len(regions), edges)
    params = {
        'm': inst.m, 'beta': inst.beta, 'c': c, 'd': d,
        'n_left': n_left, 'n_middle': len(triples), 'n_core': STARS * d,
        'core': report.spec.name,
    }
    gadget = GadgetGraph(inst, graph, regions, triples, params, report)
    logger.info("built {} with {} edges".format(gadget, graph.num_edges))
    return gadget


class ExtendedGraph(object):
    """Graph with a column of ``rows`` pendant nodes per strategy node.

    ``columns[t][j]`` is the node in row ``j`` under ``t``; each row is a
    clique across the columns.
    """

    def __init__(self, base, graph, T, columns, rows, labels):
        self.base = base
        self.graph = graph
        self.T = T
        self.columns = columns
        self.rows = rows
        self.labels = labels


def extend_graph(g, T, labels=None):
    """Attach ``2 |V| + 1`` column nodes to every node of ``T``.

    On the result, unrestricted equilibria coincide with the equilibria of
    ``g`` restricted to ``T``.
    """
    T = sorted(set(T))
    if not T:
        raise CDGameError('strategy set T must be nonempty')
    for t in T:
        g.check_node(t)
    rows = 2 * g.n + 1
    columns = {}
    edges = list(g.edges())
    next_id = g.n
    for t in T:
        columns[t] = list(range(next_id, next_id + rows))
        next_id += rows
        edges.extend((t, c) for c in columns[t])
    for j in range(rows):
        edges.extend(itertools.combinations([columns[t][j] for t in T], 2))
    graph = Graph.from_edges(next_id, edges)
    out_labels = list(labels) if labels is not None else ['original'] * g.n
    out_labels.extend(None for _ in range(next_id - g.n))
    for t in T:
        for j, c in enumerate(columns[t]):
            out_labels[c] = 'extension:{},{}'.format(t, j)
    return ExtendedGraph(g, graph, tuple(T), columns, rows, out_labels)


class ExtensionCheck(object):
    """T-restricted equilibria of a base graph against the equilibria of its extension."""

    def __init__(self, restricted, extended):
        self.restricted = set(restricted)
        self.extended = set(extended)

    @property
    def matched(self):
        return self.restricted == self.extended

    def to_dict(self):
        return {'matched': self.matched,
                'restricted': sorted(list(p) for p in self.restricted),
                'extended': sorted(list(p) for p in self.extended)}


def verify_extension(g, T, threads=None):
    """Compare ordered two-player equilibria of ``g`` over ``T`` with those of the extension."""
    ext = extend_graph(g, T)
    limit = max_exhaustive_nodes()
    if ext.graph.n > limit:
        raise SizeGuidelineError('extension has {} nodes, above the exhaustive limit {}'.format(
            ext.graph.n, limit))
    sweep = restricted_equilibria(g, 2, ext.T, quotient=False)
    restricted = set()
    for a, b in sweep.equilibria:
        if a != b:
            restricted.add((a, b))
            restricted.add((b, a))
    extended = enumerate_equilibria_2p(ext.graph, threads=threads).pairs()
    return ExtensionCheck(restricted, extended)


class ReductionReport(object):
    """Both directions of the reduction checked on one gadget.

    Attributes:
        partition: solver output, None when the instance has no partition.
        profile: the partition profile, when there is one.
        decision: EquilibriumDecision for ``profile`` over T.
        sweep: RestrictedEquilibria over T, or None when skipped.
    """

    def __init__(self, partition, profile, decision, sweep):
        self.partition = partition
        self.profile = profile
        self.decision = decision
        self.sweep = sweep

    @property
    def direction1_ok(self):
        return self.partition is None or self.decision.is_equilibrium

    @property
    def direction2_ok(self):
        if self.sweep is None:
            return None
        return bool(self.sweep.equilibria) == (self.partition is not None)

    @property
    def consistent(self):
        return self.direction1_ok and self.direction2_ok is not False

    def to_dict(self):
        result = {
            'partition': [list(p) for p in self.partition] if self.partition is not None else None,
            'direction1_ok': self.direction1_ok,
            'direction2_ok': self.direction2_ok,
            'consistent': self.consistent,
        }
        if self.profile is not None:
            result['profile'] = [sorted(s)[0] for s in self.profile.seeds]
            result['utilities'] = list(self.decision.utilities)
            result['deviation'] = self.decision.deviation._asdict() if self.decision.deviation else None
        result['sweep'] = self.sweep.to_dict() if self.sweep is not None else None
        return result


def partition_profile(gadget, partition):
    seeds = [gadget.middle_node(part) for part in partition]
    seeds.append(gadget.right_seed)
    return SeedProfile.single(*seeds)


def verify_reduction(inst, gadget, threads=None, sweep=True):
    """Check that T-restricted equilibria of ``gadget`` exist exactly when ``inst`` has a partition.

    With a partition, the profile placing one player per part in the middle
    and one on the core is certified. The exhaustive sweep over T runs for
    ``m <= MAX_SWEEP_GROUPS`` and is skipped with a warning above that.
    """
    if gadget.instance != inst:
        raise InstanceError('gadget was built from {!r}, not {!r}'.format(gadget.instance, inst))
    players = inst.m + 1
    partition = solve_3partition(inst)
    profile = decision = None
    if partition is not None:
        profile = partition_profile(gadget, partition)
        decision = is_equilibrium(gadget.graph, profile, [gadget.T] * players, threads=threads)
        logger.info("partition profile utilities {}, equilibrium={}".format(
            decision.utilities, decision.is_equilibrium))

    result = None
    if sweep and inst.m <= MAX_SWEEP_GROUPS:
        result = restricted_equilibria(gadget.graph, players, gadget.T)
    elif sweep:
        logger.warning("skipping the T sweep for m={} (limit {})".format(inst.m, MAX_SWEEP_GROUPS))
    return ReductionReport(partition, profile, decision, result)
