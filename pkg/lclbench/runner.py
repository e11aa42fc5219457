# -*- coding: utf-8; -*-

"""\
lcl simulates LOCAL-model algorithms for hierarchical coloring problems on
bounded-degree trees and measures their node-averaged round complexity.

It is split in a bunch of subcommands: generate an instance, solve it,
check a labeling, sweep a family over growing n, fit the measured exponent
and print the predicted one. Run any of them with --help for details, e.g.:

    lcl bench --help
"""

import argparse
import inspect
import logging
import sys

import lclbench.commands

from lclbench.argparsing import FlexiFormatter
from lclbench.commands.base import Command
from lclbench.conf import configure
from lclbench.environment import Environment
from lclbench.exc import Abort
from lclbench.filters import colorize


def setup_logging(verbose):
    if not verbose:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger('lclbench')
    root.addHandler(handler)
    root.setLevel(logging.DEBUG)


def main(argv=None, environment=None, conf=None):
    """Run one subcommand; returns the exit status."""
    if argv is None:
        argv = sys.argv[1:]
    e = environment if environment is not None else Environment()
    e.load()

    try:
        conf = conf if conf is not None else configure()
    except Abort as exc:
        print(colorize(str(exc), 'red'))
        return 1

    current_command = argv[0] if argv else None

    parser = argparse.ArgumentParser(prog='lcl', formatter_class=FlexiFormatter, description=__doc__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    is_command = lambda x: inspect.isclass(x) and issubclass(x, Command) and x != Command
    commands = [cls(e) for _, cls in inspect.getmembers(lclbench.commands, is_command)]
    for cmd in commands:
        p = subparsers.add_parser(cmd.name, formatter_class=FlexiFormatter, help=cmd.help_line)
        if current_command != cmd.name:
            continue
        cmd.setup_arg_parser(p)
        p.set_defaults(func=cmd.run, **conf.as_dict(cmd.name))

    args = parser.parse_args(argv)
    setup_logging(getattr(args, 'verbose', False))

    try:
        e.process_args(args)
        return args.func(args) or 0
    except Abort as exc:
        print(colorize(str(exc), 'red'))
        return 1
    except KeyboardInterrupt:
        print('Terminated by user')
        return 1
    finally:
        e.dump()


if __name__ == '__main__':
    sys.exit(main())
