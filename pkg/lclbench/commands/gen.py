# -*- coding: utf-8; -*-

import os.path

from lclbench import formulas
from lclbench.argparsing import int_list, non_negative_int, number_list, positive_int
from lclbench.commands.base import Command
from lclbench.families import FAMILIES, make_instance
from lclbench.filters import colorize
from lclbench.tree import store_graph
from lclbench.utils import format_available_options


class Gen(Command):
    """
    Generate one instance of a family and write it as a JSON graph.

    Path lengths come from --lengths if given, else from --alphas, else
    from the exponents that are optimal for the family and (delta, d, k).
    --x P/Q picks delta and d with efficiency factor exactly P/Q.
    """

    name = 'gen'
    help_line = "Generate an instance graph"

    default_family = 'lb'
    default_output = 'graph.json'

    def setup_arg_parser(self, parser):
        super(Gen, self).setup_arg_parser(parser)
        parser.add_argument('family', nargs='?', metavar='FAMILY',
                            choices=[name for name, _ in FAMILIES],
                            default=self.default_family,
                            help='Instance family (default: %(default)s).')
        parser.add_argument('-n', type=positive_int, required=True,
                            help='Target number of nodes.')
        parser.add_argument('-k', type=positive_int, default=2,
                            help='Number of levels (default: %(default)s).')
        parser.add_argument('--delta', type=positive_int, default=5,
                            help='Degree bound (default: %(default)s).')
        parser.add_argument('--d', type=non_negative_int, default=2,
                            help='Decline budget of weight nodes (default: %(default)s).')
        parser.add_argument('--x', metavar='P/Q',
                            help='Set delta and d so that the efficiency factor is P/Q.')
        parser.add_argument('--alphas', type=number_list,
                            help='Level exponents alpha_1..alpha_{k-1}, comma separated.')
        parser.add_argument('--lengths', type=int_list,
                            help='Explicit path lengths l_1..l_k.')
        parser.add_argument('--regime', choices=formulas.REGIMES, default='poly',
                            help='Length regime (default: %(default)s).')
        parser.add_argument('--seed', type=non_negative_int, default=0,
                            help='Random seed (default: %(default)s).')
        parser.add_argument('--id-factor', type=positive_int, default=1,
                            help='Draw ids from 1..n*R instead of 1..n.')
        parser.add_argument('--rounding', choices=formulas.ROUNDINGS, default='half-up',
                            help='Rounding of n**alpha path lengths (default: %(default)s).')
        parser.add_argument('-o', '--output', default=self.default_output,
                            help='Graph file to write (default: %(default)s).')

        parser.epilog = 'Families:\n' + format_available_options(
            FAMILIES, head_width=12, default=self.default_family)

    def run(self, args):
        delta, d = args.delta, args.d
        if args.x:
            delta, d = formulas.params_from_rational(*formulas.parse_rational(args.x))
        instance = make_instance(args.family, args.n, k=args.k, delta=delta, d=d,
                                 alphas=args.alphas, lengths=args.lengths,
                                 regime=args.regime, seed=args.seed, rounding=args.rounding,
                                 id_factor=args.id_factor)
        tree, meta = instance.tree, instance.meta
        store_graph(args.output, tree, meta)
        self.e.remember('graph', args.output)

        print('%s: %s instance, n=%d, max degree %d' % (
            colorize(os.path.basename(args.output), 'cyan'), args.family,
            tree.n, tree.max_degree))
        for key in ('lengths', 'level_sizes', 'weight_per_level', 'delta', 'd'):
            if meta.get(key) is not None:
                print('  %s: %s' % (key, meta[key]))
