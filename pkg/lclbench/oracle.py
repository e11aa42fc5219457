# -*- coding: utf-8; -*-

"""Exhaustive solution oracle for small trees.

Backtracking over the problem variables in a fixed order. A node's rules run
as soon as every variable they read is assigned; a labeling is produced iff
the checker accepts it, in lexicographic order of the candidate alphabets.
"""

import logging

from lclbench.checkers import make_problem
from lclbench.exc import CapExceeded

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

DEFAULT_CAP = 10 ** 7


def search(problem, cap=DEFAULT_CAP, fixed=None, count_only=False):
    """Enumerate every labeling of ``problem`` its rules accept.

    ``fixed`` pins node labels (``{node: label}``) or any search variable by
    its key, e.g. ``('edge', u, w)``. ``cap`` bounds the number of partial
    assignments visited.
    """
    fixed = fixed or {}
    keys = problem.variables()
    position = dict((key, i) for i, key in enumerate(keys))
    ready = [[] for _ in keys]
    for v in problem.node_list():
        ready[max(position[key] for key in problem.depends(v))].append(v)

    domains = []
    for key in keys:
        if key in fixed:
            domains.append([fixed[key]])
        elif key[0] == 'node' and key[1] in fixed:
            domains.append([fixed[key[1]]])
        else:
            domains.append(list(problem.domain(key)))

    found = []
    counter = {'visited': 0, 'solutions': 0}
    if not keys or any(not dom for dom in domains):
        return 0 if count_only else found

    state = problem.new_state()
    out = problem.labels(state)

    def extend(i):
        if i == len(keys):
            counter['solutions'] += 1
            if not count_only:
                found.append(problem.snapshot(state))
            return
        for value in domains[i]:
            counter['visited'] += 1
            if counter['visited'] > cap:
                raise CapExceeded('search visited more than %d partial labelings' % cap)
            problem.assign(state, keys[i], value)
            if all(not any(True for _ in problem.rules(v, out)) for v in ready[i]):
                extend(i + 1)

    extend(0)
    log.debug('%s: %d solution(s), %d partial labelings visited',
              problem.name, counter['solutions'], counter['visited'])
    return counter['solutions'] if count_only else found


def brute_force(tree, problem, params=None, inputs=None, cap=DEFAULT_CAP,
                fixed=None, count_only=False):
    """All valid labelings (or their count) of a named problem on ``tree``."""
    instance = make_problem(problem, tree, inputs=inputs, **(params or {}))
    return search(instance, cap=cap, fixed=fixed, count_only=count_only)
