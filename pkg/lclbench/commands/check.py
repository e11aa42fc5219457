# -*- coding: utf-8; -*-

from lclbench.checkers import make_problem
from lclbench.commands.base import Command
from lclbench.filters import colorize
from lclbench.labels import load_labeling
from lclbench.tree import load_graph


class Check(Command):
    """
    Check a labeling file against its problem on a graph file.

    The problem and its parameters are read from the labeling file. Both
    files default to the last ones `lcl gen' and `lcl solve' wrote. Every
    violation is printed; the exit status is 1 if there is any.
    """

    name = 'check'
    help_line = "Validate a labeling"

    def setup_arg_parser(self, parser):
        super(Check, self).setup_arg_parser(parser)
        parser.add_argument('-g', '--graph', help='Graph file.')
        parser.add_argument('-l', '--labels', help='Labeling file.')
        parser.add_argument('--limit', type=int, default=0,
                            help='Print at most this many violations (0: all).')

    def run(self, args):
        graph = self.e.recall('graph', args.graph, 'graph file')
        labels = self.e.recall('labels', args.labels, 'labeling file')
        tree, _ = load_graph(graph)
        problem_name, params, out = load_labeling(labels)
        problem = make_problem(problem_name, tree, tree.inputs, **params)
        verdict = problem.check(out)
        if verdict:
            print('%s: %s' % (problem_name, colorize('valid', 'green')))
            return 0

        shown = verdict.violations[:args.limit] if args.limit else verdict.violations
        for v in shown:
            print('%s %s: %s' % (colorize('node %d' % v.node, 'cyan'),
                                 colorize(v.rule, 'yellow'), v.message))
        print(colorize('%s: %d violation(s) of %s' % (
            problem_name, len(verdict.violations), ', '.join(verdict.rules())), 'red'))
        return 1
