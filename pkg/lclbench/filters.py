# -*- coding: utf-8; -*-

"""Helpers for terminal output, also installed as jinja filters."""

import sys
from fractions import Fraction


def filter(f):
    f.filter = True
    return f


ANSI = {
    'red': 91,
    'green': 92,
    'yellow': 93,
    'blue': 94,
    'purple': 95,
    'cyan': 96,
}


@filter
def colorize(s, color):
    if not sys.stdout.isatty():
        return s
    return '\033[%dm%s\033[0m' % (ANSI[color], s)


@filter
def sig(value, digits=12):
    """``value`` with ``digits`` significant digits, as in the CSV files."""
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        return '%.*g' % (digits, value)
    return str(value)


@filter
def verdict(ok):
    return colorize('ok', 'green') if ok else colorize('FAILED', 'red')
