# -*- coding: utf-8; -*-

import os.path

from configobj import ConfigObj, ConfigObjError

from lclbench.exc import ParameterError

CONFIG_FILES = ('/etc/lcl.ini', '~/.lclrc', 'lcl.ini')


class Configuration(object):
    """Ini files merged in order; keys of a later file replace earlier ones."""

    def __init__(self, *files):
        self.merged = ConfigObj()
        for path in files:
            try:
                self.merged.merge(ConfigObj(os.path.expanduser(path)))
            except ConfigObjError as exc:
                raise ParameterError('cannot parse %s: %s' % (path, exc))

    def as_dict(self, command):
        """Top-level keys overlaid with the ``[command]`` section, as argparse dests."""
        result = _scalars(self.merged)
        if command in self.merged.sections:
            result.update(_scalars(self.merged[command]))
        return result


def _scalars(section):
    return {key.replace('-', '_'): section[key] for key in section.scalars}


def configure(files=CONFIG_FILES):
    return Configuration(*files)
