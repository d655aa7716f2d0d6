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

"""Command line surface; ``bin/cdgame`` calls ``main``.

Every command writes one report (JSON by default) that embeds the resolved
run configuration. Exit status is 0 on success, 1 when a library error is
raised or a file cannot be read or written, and 2 on usage errors. With
``--format csv`` er-trials writes its per-trial rows to ``--output`` and the
summary report next to them (``--summary``, default ``OUTPUT.summary.json``).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import json
import logging

from cdgame.characterizations import parse_family, verify_characterization
from cdgame.common.errors import CDGameError
from cdgame.diffusion import SeedProfile, check_distance_sandwich, diffuse, state_name
from cdgame.equilibrium import enumerate_equilibria_2p, necessary_conditions_report, utility_matrix
from cdgame.graph import make_complete, make_cycle, make_erdos_renyi, make_hypercube, make_lattice, \
    make_path, make_star, read_edge_list, to_dot, to_edge_list
from cdgame.hardness import build_reduction_graph, extend_graph, read_instance, verify_extension, \
    verify_reduction
from cdgame.random_graphs import UNIFORM_PAIR, concentration_table, parse_seed_policy, resolve_p, \
    run_er_trials, sphere_ball_tail_stats
from cdgame.report import CONCENTRATION_COLUMNS, OUTPUT_FORMATS, RANDOMIZED_COMMANDS, TRIAL_COLUMNS, \
    RunConfig, render_csv, write_report, write_text
from cdgame.welfare import bound_fields, find_submodularity_witness, optimal_welfare_bruteforce, \
    submodularity_search, welfare_lower_bound, welfare_lower_bound_matrix

GRAPH_FLAGS = ('edge_list', 'hypercube', 'lattice', 'complete', 'path', 'cycle', 'star', 'er')
_CONFIG_KEYS = GRAPH_FLAGS + ('command', 'func', 'seed', 'format', 'output')
SUMMARY_SUFFIX = '.summary.json'


def parse_seeds(text):
    """``"0,3;7"``: player 0 owns {0, 3}, player 1 owns {7}."""
    try:
        players = [[int(v) for v in part.split(',') if v.strip()] for part in text.split(';')]
    except ValueError:
        raise argparse.ArgumentTypeError('seeds must look like "0,3;7", got {!r}'.format(text))
    if any(not nodes for nodes in players):
        raise argparse.ArgumentTypeError('every player needs at least one seed in {!r}'.format(text))
    return SeedProfile(players)


def parse_nodes(text):
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated node ids, got {!r}'.format(text))


def parse_pair_dims(text):
    try:
        m, n = (int(x) for x in text.lower().split('x'))
    except ValueError:
        raise argparse.ArgumentTypeError('expected MxN, got {!r}'.format(text))
    return m, n


def parse_er(text):
    try:
        n, p = text.split(',')
        return int(n), float(p)
    except ValueError:
        raise argparse.ArgumentTypeError('expected N,P, got {!r}'.format(text))


def parse_p(text):
    if text == 'log':
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError('p must be a number or "log", got {!r}'.format(text))


def _graph_source(args):
    for flag in GRAPH_FLAGS:
        value = getattr(args, flag, None)
        if value is None:
            continue
        if isinstance(value, tuple):
            value = ','.join(str(x) for x in value) if flag == 'er' else 'x'.join(str(x) for x in value)
        return '{}:{}'.format(flag.replace('_', '-'), value)
    return None


def load_graph(args):
    if args.edge_list is not None:
        return read_edge_list(args.edge_list)
    if args.hypercube is not None:
        return make_hypercube(args.hypercube)
    if args.lattice is not None:
        return make_lattice(*args.lattice)
    if args.complete is not None:
        return make_complete(args.complete)
    if args.path is not None:
        return make_path(args.path)
    if args.cycle is not None:
        return make_cycle(args.cycle)
    if args.star is not None:
        return make_star(args.star)
    if args.er is not None:
        n, p = args.er
        return make_erdos_renyi(n, p, args.seed)
    raise CDGameError('no graph given')


def make_config(args):
    params = dict((k, v) for k, v in sorted(vars(args).items()) if k not in _CONFIG_KEYS)
    for key, value in params.items():
        if isinstance(value, tuple):
            params[key] = list(value)
        elif isinstance(value, SeedProfile):
            params[key] = [sorted(s) for s in value.seeds]
    return RunConfig(args.command, _graph_source(args), params, args.seed, args.format, args.output)


def summary_path(args):
    """Where er-trials puts its summary report when the rows go out as csv."""
    if args.summary:
        return args.summary
    if args.output and args.output != '-':
        return args.output + SUMMARY_SUFFIX
    return None


def _emit(args, config, result, csv_rows=None, dot_text=None):
    # argparse limits --format to what each command can render
    if args.format == 'csv':
        columns, rows = csv_rows
        write_text(render_csv(config, columns, rows), args.output)
    elif args.format == 'dot':
        write_text(dot_text, args.output)
    else:
        write_report(config, result, args.output)
    return 0


def cmd_simulate(args, config):
    g = load_graph(args)
    outcome = diffuse(g, args.seeds, keep_trace=args.trace)
    result = {
        'n': g.n,
        'seeds': [sorted(s) for s in args.seeds.seeds],
        'utilities': list(outcome.utilities),
        'steps': outcome.steps,
        'gray': outcome.gray_count,
        'white': outcome.white_count,
        'final': [state_name(s) for s in outcome.final],
    }
    if args.trace:
        result['trace'] = [[state_name(s) for s in snapshot] for snapshot in outcome.trace]
    rows = [{'node': v, 'state': state_name(s)} for v, s in enumerate(outcome.final)]
    return _emit(args, config, result, (('node', 'state'), rows), to_dot(g, outcome.final))


def cmd_sandwich_check(args, config):
    g = load_graph(args)
    violations = check_distance_sandwich(g, args.seeds)
    result = {'passed': not violations, 'violations': [v._asdict() for v in violations]}
    return _emit(args, config, result)


def cmd_utility_matrix(args, config):
    g = load_graph(args)
    matrix = utility_matrix(g, threads=args.threads)
    rows = []
    for a, row in enumerate(matrix.to_list()):
        entry = {'a': a}
        entry.update((str(b), u) for b, u in enumerate(row))
        rows.append(entry)
    columns = ('a',) + tuple(str(b) for b in range(g.n))
    return _emit(args, config, {'n': g.n, 'matrix': matrix.to_list()}, (columns, rows))


def cmd_equilibria(args, config):
    g = load_graph(args)
    report = enumerate_equilibria_2p(g, use_block_filter=args.block_filter,
                                     use_degree_filter=args.degree_filter, threads=args.threads)
    result = report.to_dict()
    if args.check_conditions:
        conditions = necessary_conditions_report(g, report)
        result['conditions'] = {'applicable': conditions.applicable, 'passed': conditions.passed,
                                'failures': [c._asdict() for c in conditions.failures()]}
    rows = [e._asdict() for e in report.equilibria]
    return _emit(args, config, result, (('a', 'b', 'utility_a', 'utility_b'), rows))


def cmd_verify_family(args, config):
    verdicts = [verify_characterization(parse_family(text), threads=args.threads) for text in args.families]
    return _emit(args, config, {'verdicts': [v.to_dict() for v in verdicts]})


def cmd_gadget_build(args, config):
    inst = read_instance(args.instance)
    gadget = build_reduction_graph(inst, core=args.core)
    if args.graph_out:
        comments = ['gadget for m={} beta={} alphas={}'.format(inst.m, inst.beta, list(inst.alphas)),
                    'core={} d={}'.format(gadget.params['core'], gadget.params['d'])]
        write_text(to_edge_list(gadget.graph, comments), args.graph_out)
    if args.sidecar:
        write_text(json.dumps(gadget.sidecar(), indent=2, sort_keys=True) + '\n', args.sidecar)
    result = {'params': gadget.params, 'n': gadget.graph.n, 'edges': gadget.graph.num_edges,
              'T_size': len(gadget.T), 'right_seed': gadget.right_seed, 'core': gadget.core_report.to_dict()}
    return _emit(args, config, result)


def cmd_gadget_verify(args, config):
    inst = read_instance(args.instance)
    gadget = build_reduction_graph(inst, core=args.core)
    report = verify_reduction(inst, gadget, threads=args.threads, sweep=not args.no_sweep)
    result = report.to_dict()
    result['params'] = gadget.params
    return _emit(args, config, result)


def cmd_extend(args, config):
    g = load_graph(args)
    ext = extend_graph(g, args.T)
    if args.graph_out:
        write_text(to_edge_list(ext.graph, ['extension of {} over T={}'.format(config.graph_source, ext.T)]),
                   args.graph_out)
    result = {'n': ext.graph.n, 'edges': ext.graph.num_edges, 'added_nodes': ext.graph.n - g.n,
              'added_edges': ext.graph.num_edges - g.num_edges, 'rows': ext.rows, 'T': list(ext.T),
              'labels': ext.labels}
    if args.verify:
        result['bijection'] = verify_extension(g, args.T, threads=args.threads).to_dict()
    return _emit(args, config, result)


def cmd_er_trials(args, config):
    if args.ns:
        rows = concentration_table(args.ns, args.p, args.trials, args.seed, threads=args.threads)
        return _emit(args, config, {'concentration': rows}, (CONCENTRATION_COLUMNS, rows))
    policy, pair = parse_seed_policy(args.policy)
    batch = run_er_trials(args.n, resolve_p(args.p, args.n), args.trials, policy, args.seed, pair=pair,
                          threads=args.threads)
    summary = batch.summary()
    if args.format == 'csv':
        write_report(config, summary, summary_path(args))
    return _emit(args, config, summary, (TRIAL_COLUMNS, list(batch.rows())))


def cmd_tail_stats(args, config):
    stats = sphere_ball_tail_stats(args.n, resolve_p(args.p, args.n), args.samples, args.lam, args.seed,
                                   threads=args.threads)
    return _emit(args, config, stats.to_dict())


def cmd_welfare_bound(args, config):
    g = load_graph(args)
    bound = welfare_lower_bound(g)
    result = {'n': g.n}
    result.update(bound_fields(bound))
    if args.check_matrix:
        result['matrix_form_equal'] = welfare_lower_bound_matrix(g) == bound
    return _emit(args, config, result)


def cmd_welfare_optimum(args, config):
    g = load_graph(args)
    return _emit(args, config, optimal_welfare_bruteforce(g, threads=args.threads).to_dict())


def cmd_submod_search(args, config):
    if args.search_nodes:
        witness = find_submodularity_witness(args.search_nodes, args.max_set_size)
        if witness is None:
            return _emit(args, config, {'found': False})
        g, opponent, violations = witness.graph, [witness.opponent], [witness.violation]
    else:
        g = load_graph(args)
        if not args.opponent:
            raise CDGameError('--opponent is required unless --search-nodes is given')
        opponent = args.opponent
        violations = submodularity_search(g, opponent, args.max_set_size, threads=args.threads)
    if args.witness_out and violations:
        v = violations[0]
        comments = ['opponent={}'.format(','.join(str(x) for x in opponent)),
                    'small={}'.format(','.join(str(x) for x in v.small)),
                    'large={}'.format(','.join(str(x) for x in v.large)),
                    'node={}'.format(v.node)]
        write_text(to_edge_list(g, comments), args.witness_out)
    result = {'found': bool(violations), 'n': g.n, 'edges': [list(e) for e in g.edges()],
              'opponent': list(opponent), 'violations': [v._asdict() for v in violations]}
    return _emit(args, config, result)


def _add_graph_flags(parser, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--edge-list', type=str, help='read the graph from an edge-list file')
    group.add_argument('--hypercube', type=int, metavar='K', help='the k-dimensional hypercube')
    group.add_argument('--lattice', type=parse_pair_dims, metavar='MxN', help='the (m+1) x (n+1) grid')
    group.add_argument('--complete', type=int, metavar='N', help='the complete graph')
    group.add_argument('--path', type=int, metavar='N', help='the path on N nodes')
    group.add_argument('--cycle', type=int, metavar='N', help='the cycle on N nodes')
    group.add_argument('--star', type=int, metavar='LEAVES', help='a star with center 0')
    group.add_argument('--er', type=parse_er, metavar='N,P', help='a G(n, p) sample, needs --seed')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, help='master random seed')
    common.add_argument('--threads', type=int, help='worker processes, overrides CDGAME_THREADS')
    common.add_argument('--output', type=str, help='write the report here instead of stdout')

    parser = argparse.ArgumentParser(prog='cdgame', description='Competitive diffusion games on graphs')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def command(name, func, help, graph=True, formats=('json',)):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument('--format', choices=formats, default='json', help='output format')
        if graph:
            _add_graph_flags(p, required=graph is True)
        p.set_defaults(func=func)
        return p

    p = command('simulate', cmd_simulate, 'run the diffusion for a seed profile', formats=OUTPUT_FORMATS)
    p.add_argument('--seeds', type=parse_seeds, required=True, help='per-player seeds, e.g. "0,3;7"')
    p.add_argument('--trace', action='store_true', help='include the state after every round')

    p = command('sandwich-check', cmd_sandwich_check, 'check adopters against seed distances')
    p.add_argument('--seeds', type=parse_seeds, required=True, help='two players, e.g. "0;4"')

    command('utility-matrix', cmd_utility_matrix, 'utilities of every ordered single-seed pair',
            formats=('json', 'csv'))

    p = command('equilibria', cmd_equilibria, 'enumerate two-player pure equilibria', formats=('json', 'csv'))
    p.add_argument('--block-filter', action='store_true', help='skip pairs sharing no block')
    p.add_argument('--degree-filter', action='store_true', help='skip pairs failing the degree bound')
    p.add_argument('--check-conditions', action='store_true', help='report the necessary conditions')

    p = command('verify-family', cmd_verify_family, 'compare predicted and enumerated equilibria', graph=False)
    p.add_argument('families', nargs='+', help='hypercube:K or lattice:MxN')

    for name, func, help in (('gadget-build', cmd_gadget_build, 'build the reduction gadget'),
                             ('gadget-verify', cmd_gadget_verify, 'check the reduction on an instance')):
        p = command(name, func, help, graph=False)
        p.add_argument('--instance', type=str, required=True, help='instance file: "m beta" then the integers')
        p.add_argument('--core', type=str, help='core wiring name instead of the searched default')
        if name == 'gadget-build':
            p.add_argument('--graph-out', type=str, help='write the gadget edge list here')
            p.add_argument('--sidecar', type=str, help='write region labels and parameters here')
        else:
            p.add_argument('--no-sweep', action='store_true', help='skip the exhaustive profile sweep')

    p = command('extend', cmd_extend, 'attach the column gadget to a strategy set')
    p.add_argument('--T', type=parse_nodes, required=True, help='comma separated strategy nodes')
    p.add_argument('--graph-out', type=str, help='write the extended edge list here')
    p.add_argument('--verify', action='store_true', help='compare equilibria of base and extension')

    p = command('er-trials', cmd_er_trials, 'Monte Carlo games on G(n, p)', graph=False,
                formats=('json', 'csv'))
    p.add_argument('--n', type=int, default=1000, help='node count')
    p.add_argument('--p', type=parse_p, default='log', help='edge probability or "log" for ln(n)/n')
    p.add_argument('--trials', type=int, default=200, help='graphs to draw')
    p.add_argument('--policy', type=str, default=UNIFORM_PAIR,
                   help='uniform-distinct-pair or fixed-pair:A,B')
    p.add_argument('--ns', type=parse_nodes, help='node counts for a concentration table')
    p.add_argument('--summary', type=str,
                   help='with --format csv, write the summary report here (default: OUTPUT' + SUMMARY_SUFFIX + ')')

    p = command('tail-stats', cmd_tail_stats, 'sphere against ball tail frequency on G(n, p)', graph=False)
    p.add_argument('--n', type=int, default=500, help='node count')
    p.add_argument('--p', type=parse_p, default='log', help='edge probability or "log" for ln(n)/n')
    p.add_argument('--samples', type=int, default=500, help='graphs to draw')
    p.add_argument('--lam', type=float, help='threshold; default (1 + sqrt(15)) n p')

    p = command('welfare-bound', cmd_welfare_bound, 'exact welfare lower bound')
    p.add_argument('--check-matrix', action='store_true', help='also evaluate the matrix form')

    command('welfare-optimum', cmd_welfare_optimum, 'brute-force best welfare')

    p = command('submod-search', cmd_submod_search, 'look for diminishing-returns violations', graph='optional')
    p.add_argument('--opponent', type=parse_nodes, help='opponent seed nodes')
    p.add_argument('--max-set-size', type=int, default=2, help='largest own seed set')
    p.add_argument('--search-nodes', type=int, help='scan all connected graphs up to this size instead')
    p.add_argument('--witness-out', type=str, help='write the first violation as an annotated edge list')
    return parser


def check_usage(parser, args):
    """Flag combinations argparse cannot express; exits 2 through ``parser.error``."""
    randomized = args.command in RANDOMIZED_COMMANDS or getattr(args, 'er', None) is not None
    if randomized and args.seed is None:
        parser.error('argument --seed: {} draws random graphs and needs an explicit seed'.format(args.command))
    if args.command == 'er-trials' and not args.ns and args.format == 'csv' and summary_path(args) is None:
        parser.error('argument --summary: csv rows on stdout need --summary for the summary report')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    check_usage(parser, args)
    try:
        config = make_config(args)
        return args.func(args, config)
    except (CDGameError, OSError) as e:
        logging.error(str(e))
        return 1
