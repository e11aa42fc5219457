# -*- coding: utf-8; -*-

import argparse
import re
import textwrap

from fractions import Fraction


class FlexiFormatter(argparse.RawTextHelpFormatter):
    """Help formatter that keeps explicit line breaks and wraps the rest.

    Indented lines and list items keep their indent when wrapped, so command
    docstrings can carry small lists and examples.
    """

    def _split_lines(self, text, width):
        lines = []
        main_indent = len(re.match(r'( *)', text).group(1))
        for line in text.splitlines():
            indent = len(re.match(r'( *)', line).group(1))
            list_match = re.match(r'( *)(([*-+>]+|\w+\)|\w+\.) +)', line)
            sub_indent = indent + len(list_match.group(2)) if list_match else indent

            line = self._whitespace_matcher.sub(' ', line).strip()
            wrapped = textwrap.wrap(
                text=line,
                width=width,
                initial_indent=' ' * (indent - main_indent),
                subsequent_indent=' ' * (sub_indent - main_indent),
            )
            # textwrap eats blank lines
            lines.extend(wrapped or [' '])
        return lines


def positive_int(text):
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError('%r is not an integer' % (text,))
    if value < 1:
        raise argparse.ArgumentTypeError('%d is not positive' % value)
    return value


def non_negative_int(text):
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError('%r is not an integer' % (text,))
    if value < 0:
        raise argparse.ArgumentTypeError('%d is negative' % value)
    return value


def int_list(text):
    """``'1000,10000'`` or ``'3 5 8'``."""
    try:
        return [int(x) for x in text.replace(',', ' ').split()]
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not a list of integers' % (text,))


def number_list(text):
    """Comma separated numbers; fractions like ``1/3`` stay exact."""
    try:
        return [Fraction(x) for x in text.replace(',', ' ').split()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('%r is not a list of numbers' % (text,))


def gamma_schedule(text):
    if text == 'logstar':
        return text
    return int_list(text)


def add_verbose_arg(parser):
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Log debug records of the library to stderr.')
