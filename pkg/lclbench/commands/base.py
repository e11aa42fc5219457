# -*- coding: utf-8; -*-

import textwrap

from lclbench.argparsing import add_verbose_arg
from lclbench.utils import render_template


class Command(object):
    name = None
    help_line = None

    def __init__(self, environment):
        self.e = environment

    def setup_arg_parser(self, parser):
        if self.__doc__:
            parser.description = textwrap.dedent(self.__doc__)
        add_verbose_arg(parser)

    def run(self, args):
        raise NotImplementedError

    def render(self, template, **ctx):
        print(render_template(template, **ctx), end='')
