# -*- coding: utf-8; -*-

from lclbench import __version__
from lclbench.commands.base import Command


class Version(Command):

    """
    Print the version of lcl.
    """

    name = 'version'
    help_line = "Print the current version of lcl."

    def run(self, args):
        print("lcl {}".format(__version__))
