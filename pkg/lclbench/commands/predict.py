# -*- coding: utf-8; -*-

from lclbench import formulas
from lclbench.argparsing import non_negative_int, positive_int
from lclbench.bench import predict
from lclbench.commands.base import Command
from lclbench.utils import format_available_options


class Predict(Command):
    """
    Print the exponent the node-averaged complexity of weighted
    hierarchical 2.5-coloring is expected to have for (delta, d, k).

    Also echoes the efficiency factor x and its upper-bound counterpart x'.
    """

    name = 'predict'
    help_line = "Print the expected exponent"

    default_regime = 'poly'

    def setup_arg_parser(self, parser):
        super(Predict, self).setup_arg_parser(parser)
        parser.add_argument('--delta', type=positive_int, required=True,
                            help='Degree bound.')
        parser.add_argument('--d', type=non_negative_int, required=True,
                            help='Decline budget of weight nodes.')
        parser.add_argument('-k', type=positive_int, default=2,
                            help='Number of levels (default: %(default)s).')
        parser.add_argument('--regime', choices=formulas.REGIMES, default=self.default_regime,
                            help='Length regime (default: %(default)s).')

        parser.epilog = 'Regimes:\n' + format_available_options(
            [('poly', 'alpha_1 = 1 / sum_{j<k} (2 - x)^j'),
             ('logstar', 'alpha_1 = 1 / (1 + (1 - x) sum_{j<k-1} (2 - x)^j)')],
            head_width=8, default=self.default_regime)

    def run(self, args):
        self.render('predict.jinja', p=predict(args.delta, args.d, args.k, args.regime))
