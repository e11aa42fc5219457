# -*- coding: utf-8; -*-

from lclbench import formulas
from lclbench.algorithms import ALGORITHMS
from lclbench.argparsing import gamma_schedule, int_list, non_negative_int, positive_int
from lclbench.bench import ExperimentConfig, check_monotone, run_experiment, summarize
from lclbench.commands.base import Command
from lclbench.families import FAMILIES
from lclbench.labels import VARIANTS


class Bench(Command):
    """
    Sweep a family over a grid of sizes, solve and check every instance and
    append one CSV row per (n, seed) cell.

    The sweep is read from --config (a JSON object with the fields family,
    algorithm, variant, n_grid, seeds, csv, k, delta, d, regime, alphas,
    gammas, id_factor, rounding); flags given on the command line override it.

    Cells run in parallel, at most --workers or $LCL_WORKERS at a time.
    In the poly regime the report fits the exponent of the node-averaged
    rounds; in the logstar regime it checks that they do not decrease with
    log* n instead. Exits with status 1 if any cell failed validation or a
    diagnostic bound.
    """

    name = 'bench'
    help_line = "Run a benchmark sweep"

    def setup_arg_parser(self, parser):
        super(Bench, self).setup_arg_parser(parser)
        parser.add_argument('-c', '--config', help='Experiment JSON file.')
        parser.add_argument('--csv', help='CSV file to append rows to.')
        parser.add_argument('--family', choices=[name for name, _ in FAMILIES])
        parser.add_argument('-a', '--algorithm', choices=[name for name, _ in ALGORITHMS])
        parser.add_argument('--variant', choices=VARIANTS)
        parser.add_argument('--n-grid', type=int_list, help='Sizes, e.g. 1000,10000,100000.')
        parser.add_argument('--seeds', type=positive_int, help='Seeds per size.')
        parser.add_argument('-k', type=positive_int)
        parser.add_argument('--delta', type=positive_int)
        parser.add_argument('--d', type=non_negative_int)
        parser.add_argument('--regime', choices=formulas.REGIMES)
        parser.add_argument('--gammas', type=gamma_schedule)
        parser.add_argument('--id-factor', type=positive_int)
        parser.add_argument('--rounding', choices=formulas.ROUNDINGS,
                            help='How path lengths are rounded (config default: ceil).')
        parser.add_argument('-w', '--workers', type=positive_int,
                            help='Worker processes (capped by $LCL_WORKERS).')
        parser.add_argument('--check-monotone', action='store_true',
                            help='Report the monotonicity check also in the poly regime.')

    def run(self, args):
        overrides = dict(csv=args.csv, family=args.family, algorithm=args.algorithm,
                         variant=args.variant, n_grid=args.n_grid, seeds=args.seeds,
                         k=args.k, delta=args.delta, d=args.d, regime=args.regime,
                         gammas=args.gammas, id_factor=args.id_factor,
                         rounding=args.rounding)
        if args.config:
            config = ExperimentConfig.from_json(args.config, **overrides)
        else:
            config = ExperimentConfig.from_dict({}, **overrides)

        cells = run_experiment(config, workers=args.workers or self.e.get('workers'))
        summary = summarize(config, cells)
        monotone = summary.monotone
        if monotone is None and args.check_monotone:
            monotone = check_monotone(summary.points)
        self.render('bench.jinja', summary=summary, monotone=monotone)
        if config.csv:
            self.e.remember('csv', config.csv)
        return 1 if summary.failures else 0
