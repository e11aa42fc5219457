# -*- coding: utf-8; -*-

from lclbench.bench import X_TRANSFORMS, check_monotone, fit_exponent, mean_by_n, read_rows
from lclbench.commands.base import Command


class Fit(Command):
    """
    Fit the scaling exponent of a CSV column against n.

    Rows of every given file or glob (e.g. 'runs/**/*.csv') are averaged
    per n before a least squares fit of log y on log x. With --x logstar, x
    is log* n. If the fit has r2 below 0.98 the smallest n is dropped once;
    the report says so.
    """

    name = 'fit'
    help_line = "Fit an exponent to benchmark rows"

    def setup_arg_parser(self, parser):
        super(Fit, self).setup_arg_parser(parser)
        parser.add_argument('--csv', nargs='+', metavar='PATH',
                            help='CSV files or glob patterns; defaults to the last bench CSV.')
        parser.add_argument('--x', choices=X_TRANSFORMS, default='n',
                            help='x axis (default: %(default)s).')
        parser.add_argument('--y', default='avg_rounds',
                            help='Column to fit (default: %(default)s).')
        parser.add_argument('--expect', type=float,
                            help='Exponent to compare the fit against.')

    def run(self, args):
        patterns = args.csv or [self.e.recall('csv', None, 'CSV file')]
        points = mean_by_n(read_rows(patterns), args.y)
        result = fit_exponent(points, args.x)
        monotone = check_monotone(points) if args.x == 'logstar' else None
        self.render('fit.jinja', fit=result, x=args.x, y=args.y, expect=args.expect,
                    monotone=monotone)
