# -*- coding: utf-8; -*-

from lclbench.algorithms import ALGORITHMS, solve
from lclbench.argparsing import gamma_schedule, non_negative_int, positive_int
from lclbench.checkers import make_problem
from lclbench.commands.base import Command
from lclbench.exc import ValidationFailed
from lclbench.filters import colorize, sig
from lclbench.labels import VARIANTS, store_labeling
from lclbench.sim import node_averaged
from lclbench.tree import load_graph
from lclbench.utils import format_available_options


class Solve(Command):
    """
    Run a solver on a graph file, write its labeling and per-node trace,
    and validate the labeling with the matching checker.

    The graph defaults to the one the last `lcl gen' wrote. Exits with
    status 1 if the checker finds a violation.
    """

    name = 'solve'
    help_line = "Solve an instance and validate the output"

    default_algorithm = 'generic'
    default_labels = 'labels.json'
    default_trace = 'trace.csv'

    def setup_arg_parser(self, parser):
        super(Solve, self).setup_arg_parser(parser)
        parser.add_argument('-g', '--graph', help='Graph file to solve.')
        parser.add_argument('-a', '--algorithm', metavar='ALGORITHM',
                            choices=[name for name, _ in ALGORITHMS],
                            default=self.default_algorithm,
                            help='Solver to run (default: %(default)s).')
        parser.add_argument('--variant', choices=VARIANTS, default='2.5',
                            help='Coloring variant (default: %(default)s).')
        parser.add_argument('-k', type=positive_int, default=2,
                            help='Number of levels (default: %(default)s).')
        parser.add_argument('--delta', type=positive_int,
                            help='Degree bound; defaults to the one the graph was built for.')
        parser.add_argument('--d', type=non_negative_int, default=2,
                            help='Decline budget of weight nodes (default: %(default)s).')
        parser.add_argument('--gammas', type=gamma_schedule,
                            help='Phase lengths gamma_1..gamma_{k-1}, or "logstar".')
        parser.add_argument('--max-rounds', type=positive_int,
                            help='Abort runs longer than this many rounds.')
        parser.add_argument('-l', '--labels', default=self.default_labels,
                            help='Labeling file to write (default: %(default)s).')
        parser.add_argument('-t', '--trace', default=self.default_trace,
                            help='Per-node trace CSV to write (default: %(default)s).')
        parser.add_argument('--summary', help='Also write the run summary as JSON here.')

        parser.epilog = 'Algorithms:\n' + format_available_options(
            ALGORITHMS, head_width=10, default=self.default_algorithm)

    def run(self, args):
        path = self.e.recall('graph', args.graph, 'graph file')
        tree, meta = load_graph(path)
        delta = args.delta or meta.get('delta') or tree.max_degree

        solution = solve(args.algorithm, tree, tree.inputs, k=args.k, variant=args.variant,
                         delta=delta, d=args.d, gammas=args.gammas,
                         max_rounds=self.e.max_rounds)
        trace = solution.trace

        store_labeling(args.labels, solution.problem, solution.params, trace.outputs)
        trace.to_csv(args.trace, tree, trace.levels, tree.inputs)
        if args.summary:
            trace.summary_to_json(args.summary)
        self.e.remember('graph', path)
        self.e.remember('labels', args.labels)
        self.e.remember('trace', args.trace)

        print('%s on n=%d: avg %s, worst %d, total %d rounds' % (
            colorize(trace.program or args.algorithm, 'cyan'), tree.n,
            sig(node_averaged(trace), 6), max(trace.termination_round or [0]), trace.total))
        for entry in trace.violations:
            print(colorize('%s: observed %s above bound %s' % (
                entry.name, entry.observed, entry.bound), 'yellow'))

        problem = make_problem(solution.problem, tree, tree.inputs, **solution.params)
        verdict = problem.check(trace.outputs)
        if not verdict:
            raise ValidationFailed(solution.problem, verdict)
        print('%s: %s' % (solution.problem, colorize('valid', 'green')))
