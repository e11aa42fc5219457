# -*- coding: utf-8; -*-

import logging
import os.path
import pickle

from lclbench import sim
from lclbench.exc import Abort

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class Environment(dict):
    """State kept between runs in the working directory.

    ``solve`` and ``check`` fall back to the last graph, labels and trace
    another command wrote when their inputs are omitted.
    """

    output_dir = '.lcl'
    object_version = 1

    def __init__(self, output_dir=None):
        super(Environment, self).__init__()
        if output_dir is not None:
            self.output_dir = output_dir
        self['__lcl_objectVersion__'] = self.object_version

    def dump(self):
        if not os.path.isdir(self.output_dir):
            return
        with open(self.dump_filepath, 'wb') as f:
            pickle.dump(list(self.items()), f, pickle.HIGHEST_PROTOCOL)

    def load(self):
        if not os.path.exists(self.dump_filepath):
            return
        reset = False
        with open(self.dump_filepath, 'rb') as f:
            try:
                unjarred = dict(pickle.load(f))
                if unjarred.get('__lcl_objectVersion__') != self.object_version:
                    reset = True
                else:
                    self.update(unjarred)
            except (pickle.UnpicklingError, EOFError, TypeError, ValueError):
                reset = True

        if reset:
            log.debug('discarding stale %s', self.dump_filepath)
            os.remove(self.dump_filepath)

    @property
    def dump_filepath(self):
        return os.path.join(self.output_dir, 'environment.pickle')

    def __getattr__(self, attr):
        try:
            return super(Environment, self).__getitem__(attr)
        except KeyError:
            raise AttributeError("Environment has no attribute %r" % attr)

    def ensure_output_dir(self):
        if not os.path.isdir(self.output_dir):
            os.makedirs(self.output_dir)

    def remember(self, key, path):
        self.ensure_output_dir()
        self[key] = os.path.abspath(path)

    def recall(self, key, given, human_name):
        """``given`` if set, else the path remembered under ``key``."""
        if given:
            return given
        path = self.get(key)
        if not path or not os.path.exists(path):
            raise Abort('No %s given and none remembered from an earlier command' % human_name)
        return path

    @property
    def max_rounds(self):
        return self.get('max_rounds') or sim.max_rounds_from_env()

    def process_args(self, args):
        max_rounds = getattr(args, 'max_rounds', None)
        if max_rounds:
            self['max_rounds'] = int(max_rounds)
        workers = getattr(args, 'workers', None)
        if workers:
            self['workers'] = int(workers)
