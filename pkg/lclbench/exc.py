# -*- coding: utf-8; -*-


class Abort(Exception):
    pass


class InvalidTree(Abort):
    pass


class InvalidLabel(Abort):
    pass


class ParameterError(Abort):
    pass


class SimulationError(Abort):
    pass


class CapExceeded(Abort):
    pass


class ValidationFailed(Abort):
    def __init__(self, what, verdict):
        self.verdict = verdict
        super(ValidationFailed, self).__init__(
            '%s: %d violation(s), first: %s' % (
                what, len(verdict.violations), verdict.violations[0]))
