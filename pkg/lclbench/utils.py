# -*- coding: utf-8; -*-

import inspect
import os.path

import jinja2
from jinja2.runtime import StrictUndefined

import lclbench.filters
from lclbench.filters import colorize

TEMPLATES_DIR = os.path.join(os.path.dirname(__file__), 'templates')


def format_available_options(items, head_width, head_color='cyan',
                             default=None, default_mark="[DEFAULT]",
                             default_mark_color='red'):
    default_mark = colorize(default_mark + ' ', default_mark_color)
    lines = ['%s: %s%s' % (colorize('%%%ds' % head_width % key, head_color),
                           default_mark if key == default else '',
                           val)
             for key, val in items]
    return '\n'.join(lines)


def create_jinja(templates_dir=TEMPLATES_DIR):
    jenv = jinja2.Environment(
        loader=jinja2.FileSystemLoader(templates_dir),
        undefined=StrictUndefined,  # bark on Undefined render
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True)

    # inject @filters from lclbench.filters
    for name, f in inspect.getmembers(lclbench.filters, lambda x: getattr(x, 'filter', False)):
        jenv.filters[name] = f
    return jenv


def render_template(name, jenv=None, **ctx):
    jenv = jenv or create_jinja()
    return jenv.get_template(name).render(**ctx)
