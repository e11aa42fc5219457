# -*- coding: utf-8; -*-

"""Phased solver for hierarchical 2½ / 3½-coloring.

Schedule, with S_1 = k + 1:

* round 0: neighbours exchange ids and inputs;
* rounds 1..k: level peeling, nodes still present after round k get level
  k + 1 and output E at round k;
* phase i < k starts at S_i: every undecided level-i path measures its size
  up to gamma_i for 2 gamma_i rounds, then declines or 2-colors; the next
  k + 1 rounds leave room for E to travel up the levels, so
  S_{i+1} = S_i + 2 gamma_i + k + 1;
* phase k: remaining level-k paths 2-color once both ends are known (2½)
  or 3-color with Cole-Vishkin (3½).
"""

import logging
from collections import namedtuple

from lclbench import formulas
from lclbench.algorithms.paths import (THREE_COLORS, cv_iterations, cv_reduce,
                                       first_free, forest_parents)
from lclbench.exc import ParameterError, SimulationError
from lclbench.labels import (BLACK, DECLINE_COLOR, EXEMPT, RED, VARIANTS, WEIGHT,
                             WHITE)
from lclbench.sim import ON_MESSAGE, NodeProgram, Step, run
from lclbench.tree import LevelMap

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

GenericParams = namedtuple('GenericParams', 'gammas variant')

UNKNOWN_SIDE = (0, None, False)


def generic_params(k, gammas, variant, n=None):
    """Resolve and check a gamma schedule; ``'logstar'`` needs ``n``."""
    if variant not in VARIANTS:
        raise ParameterError('unknown variant %r, expected one of %s' % (variant, ', '.join(VARIANTS)))
    if gammas == 'logstar':
        gammas = formulas.logstar_gammas(n, k)
    gammas = [int(g) for g in gammas]
    if len(gammas) != k - 1:
        raise ParameterError('k=%d needs %d gamma values, got %d' % (k, k - 1, len(gammas)))
    if any(g < 1 for g in gammas):
        raise ParameterError('gamma values must be >= 1: %r' % (gammas,))
    return GenericParams(gammas, variant)


class ActiveState(object):
    def __init__(self, view):
        self.index = view.index
        self.id = view.id
        self.input = view.input
        self.ports = view.ports
        self.id_bound = view.id_bound
        self.nbr_id = {}
        self.active = []
        self.level = None
        self.nbr_level = {}
        self.nbr_out = {}
        self.path = []
        self.side = {}
        self.reported = set()
        self.col = None
        self.nbr_col = {}
        self.parents = (None, None)
        self.iterations = 0
        self.comb = None
        self.nbr_comb = {}
        self.output = None

    kind = 'active'


class GenericProgram(NodeProgram):

    def __init__(self, k, params):
        self.k = k
        self.gammas = list(params.gammas)
        self.variant = params.variant
        self.name = 'generic-%s' % self.variant
        starts = [None, k + 1]
        for gamma in self.gammas:
            starts.append(starts[-1] + 2 * gamma + k + 1)
        self.starts = starts

    def init(self, view):
        if view.input == WEIGHT:
            raise ParameterError('node %d is a weight node; run the solver on Active nodes only'
                                 % view.index)
        return ActiveState(view)

    def step(self, rnd, state, inbox):
        return self.active_step(rnd, state, inbox)

    # -- helpers -----------------------------------------------------------

    def level_of(self, st, u):
        return st.nbr_level.get(u, self.k + 1)

    def emit(self, st, label, messages=None):
        messages = messages or {}
        for u in st.ports:
            messages.setdefault(u, {})['out'] = label
        st.output = label
        return Step(st, messages, label)

    def absorb(self, st, inbox):
        for u, m in inbox.items():
            if 'hello' in m:
                ident, given = m['hello']
                st.nbr_id[u] = ident
                if given != WEIGHT:
                    st.active.append(u)
            if 'peel' in m:
                st.nbr_level[u] = m['peel']
            if 'out' in m:
                st.nbr_out[u] = m['out']
            if 'side' in m:
                st.side[u] = m['side']
            if 'col' in m:
                st.nbr_col[u] = m['col']
            if 'comb' in m:
                st.nbr_comb[u] = m['comb']

    # -- the schedule ------------------------------------------------------

    def active_step(self, rnd, st, inbox):
        k = self.k
        if rnd == 0:
            return Step(st, dict((u, {'hello': (st.id, st.input)}) for u in st.ports))
        self.absorb(st, inbox)

        if rnd <= k:
            messages = {}
            if st.level is None:
                alive = sum(1 for u in st.active if u not in st.nbr_level)
                if alive <= 2:
                    st.level = rnd
                    messages = dict((u, {'peel': rnd}) for u in st.active)
                elif rnd == k:
                    st.level = k + 1
            if st.level == k + 1:
                return self.emit(st, EXEMPT, messages)
            return Step(st, messages, wake=None if st.level is None else self.starts[st.level])

        if st.level >= 2 and any(
                st.nbr_out.get(u) in (WHITE, BLACK, EXEMPT) and self.level_of(st, u) < st.level
                for u in inbox if u in st.nbr_level and 'out' in inbox[u]):
            return self.emit(st, EXEMPT)

        start = self.starts[st.level]
        if rnd < start:
            return Step(st, {}, wake=start)
        t = rnd - start
        if t == 0:
            st.path = sorted(u for u in st.active
                             if self.level_of(st, u) == st.level and u not in st.nbr_out)
            st.side = {}
            st.reported = set()
        if st.level < k:
            return self.measure(st, rnd, t, self.gammas[st.level - 1])
        if self.variant == '2.5':
            return self.final_two(st)
        return self.final_three(st, t)

    def side_messages(self, st, cap=None):
        """Reports for path neighbours whose far side just closed.

        An open side is silent: its count after t rounds is t, which the
        receiver knows from the clock.
        """
        messages = {}
        for u in st.path:
            if u in st.reported:
                continue
            others = [w for w in st.path if w != u]
            if others:
                count, end, closed = st.side.get(others[0], UNKNOWN_SIDE)
                if not closed:
                    continue
                info = (1 + count, end, True)
            else:
                info = (1, st.id, True)
            if cap is not None and info[0] > cap:
                info = (cap,) + info[1:]
            st.reported.add(u)
            messages[u] = {'side': info}
        return messages

    def sides(self, st):
        return [st.side.get(u, UNKNOWN_SIDE) for u in st.path]

    def parity_label(self, st, sides):
        ends = [(end if count else st.id, count) for count, end, _ in sides]
        ends.extend([(st.id, 0)] * (2 - len(ends)))
        return WHITE if min(ends)[1] % 2 == 0 else BLACK

    def measure(self, st, rnd, t, gamma):
        if t < 2 * gamma:
            return Step(st, self.side_messages(st, cap=gamma), wake=rnd - t + 2 * gamma)
        sides = self.sides(st)
        total = 1 + sum(s[0] for s in sides)
        if total >= gamma or not all(s[2] for s in sides):
            return self.emit(st, DECLINE_COLOR)
        return self.emit(st, self.parity_label(st, sides))

    def final_two(self, st):
        messages = self.side_messages(st)
        sides = self.sides(st)
        if all(s[2] for s in sides):
            return self.emit(st, self.parity_label(st, sides), messages)
        return Step(st, messages, wake=ON_MESSAGE)

    def final_three(self, st, t):
        if t == 0:
            if not st.path:
                return self.emit(st, RED)
            by_id = dict((st.nbr_id[u], u) for u in st.path)
            st.parents = tuple(by_id.get(p) for p in forest_parents(st.id, sorted(by_id)))
            st.col = [st.id, st.id]
            st.nbr_col = dict((u, (st.nbr_id[u], st.nbr_id[u])) for u in st.path)
            st.iterations = cv_iterations(st.id_bound)

        reduce_from = st.iterations
        if t < reduce_from:
            st.col = [cv_reduce(st.col[f], st.nbr_col[st.parents[f]][f]
                                if st.parents[f] is not None else None)
                      for f in (0, 1)]
        elif t < reduce_from + 3:
            target = 5 - (t - reduce_from)
            st.col = [first_free(set(st.nbr_col[u][f] for u in st.path))
                      if st.col[f] == target else st.col[f]
                      for f in (0, 1)]
        else:
            s = t - reduce_from - 3
            if s == 0:
                st.comb = 3 * st.col[0] + st.col[1]
                st.nbr_comb = dict((u, 3 * c[0] + c[1]) for u, c in st.nbr_col.items())
            if st.comb == 8 - s:
                st.comb = first_free(set(st.nbr_comb[u] for u in st.path))
            if s == 5:
                return self.emit(st, THREE_COLORS[st.comb])
            return Step(st, dict((u, {'comb': st.comb}) for u in st.path))
        return Step(st, dict((u, {'col': tuple(st.col)}) for u in st.path))

    # -- diagnostics -------------------------------------------------------

    def undecided(self, trace, nodes, rnd):
        term = trace.termination_round
        return sum(1 for v in nodes if term[v] >= rnd)

    def finish(self, trace, states):
        active = [v for v, st in enumerate(states) if st.kind == 'active']
        level = [None] * len(states)
        for v in active:
            level[v] = states[v].level
        trace.levels = LevelMap(level, self.k)
        for i, gamma in enumerate(self.gammas, 1):
            before = self.undecided(trace, active, self.starts[i])
            after = self.undecided(trace, active, self.starts[i + 1])
            log.debug('%s phase %d: gamma=%d undecided %d -> %d',
                      self.name, i, gamma, before, after)
            trace.record('phase-%d-remaining' % i,
                         2 * (1 + 2 ** self.k) * before / float(gamma), after)


def generic_khier(tree, k, variant='2.5', gammas=None, levels=None, max_rounds=None):
    """Run the phased solver on an all-Active tree; returns the RunTrace.

    ``gammas`` is a list of k - 1 positive integers or ``'logstar'``.
    ``trace.levels`` holds the levels the nodes computed; a given ``levels``
    must agree with them.
    """
    if gammas is None:
        raise ParameterError('generic_khier needs a gamma schedule')
    if levels is not None and levels.k != k:
        raise ParameterError('level map was computed for k=%d, solving k=%d' % (levels.k, k))
    params = generic_params(k, gammas, variant, tree.n)
    trace = run(tree, GenericProgram(k, params), max_rounds=max_rounds)
    if levels is not None and trace.levels != levels:
        raise SimulationError('levels computed in the run differ from the given level map')
    return trace
