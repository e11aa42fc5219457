# -*- coding: utf-8; -*-

"""Weighted hierarchical coloring: the phased solver plus the d-free solver.

Active nodes run :class:`GenericProgram` with gamma_i = ceil(n ** alpha_i).
Weight nodes say hello, learn which neighbours are Active (those weight
nodes are the A nodes of their component), gather for 3L + 3 rounds and
decide. Connect and Decline terminate right away; a seed copies the output
of its lowest-id Active neighbour and floods it through its Copy component.
"""

import logging

from lclbench import formulas
from lclbench.algorithms.generic import ActiveState, GenericProgram, generic_params
from lclbench.algorithms.weight import CopyPlanner, Gather, edge_fact
from lclbench.exc import ParameterError
from lclbench.labels import ACTIVE, COPY, WEIGHT, WeightOutput
from lclbench.sim import ON_MESSAGE, Step, run

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class WeightState(object):
    def __init__(self, view):
        self.index = view.index
        self.id = view.id
        self.ports = view.ports
        self.weight_nbrs = []
        self.nbr_id = {}
        self.active_nbrs = []
        self.gather = Gather()
        self.heard = {}
        self.copy_nbrs = None
        self.source = None

    kind = 'weight'


class APolyProgram(GenericProgram):

    def __init__(self, k, params, d, n, x):
        super(APolyProgram, self).__init__(k, params)
        self.name = 'apoly-%s' % params.variant
        self.planner = CopyPlanner(d, n)
        self.decision_round = self.planner.gather_radius + 1
        self.x = x
        self.n = n

    def init(self, view):
        if view.input == WEIGHT:
            return WeightState(view)
        return ActiveState(view)

    def step(self, rnd, state, inbox):
        if state.kind == 'active':
            return self.active_step(rnd, state, inbox)
        return self.weight_step(rnd, state, inbox)

    def weight_step(self, rnd, st, inbox):
        if rnd == 0:
            return Step(st, dict((u, {'hello': (st.id, WEIGHT)}) for u in st.ports))

        facts = []
        for u, m in inbox.items():
            if 'hello' in m:
                ident, given = m['hello']
                st.nbr_id[u] = ident
                if given == WEIGHT:
                    st.weight_nbrs.append(u)
                    facts.append(edge_fact(st.id, ident))
                else:
                    st.active_nbrs.append(u)
            if 'out' in m:
                st.heard[u] = m['out']
            if 'facts' in m:
                facts.extend(m['facts'])
            if 'copy' in m and st.source is None and not st.active_nbrs:
                st.source = m['copy']
        if rnd == 1:
            facts.append(('v', st.id, bool(st.active_nbrs)))
        new = st.gather.learn(facts)

        if rnd < self.decision_round:
            facts_out = dict((u, {'facts': tuple(new)}) for u in st.weight_nbrs) if new else {}
            return Step(st, facts_out, wake=self.decision_round)

        if st.copy_nbrs is None:
            label, plan = self.planner.decide(st.id, st.gather)
            if label != COPY:
                return Step(st, {}, WeightOutput(label))
            st.copy_nbrs = [u for u in st.weight_nbrs if plan.labels.get(st.nbr_id[u]) == COPY]

        if st.source is None and st.active_nbrs:
            anchor = min(st.active_nbrs, key=st.nbr_id.get)
            if anchor in st.heard:
                st.source = (st.heard[anchor], st.nbr_id[anchor])
        if st.source is None:
            return Step(st, {}, wake=ON_MESSAGE)
        return Step(st, dict((u, {'copy': st.source}) for u in st.copy_nbrs),
                    WeightOutput(COPY, st.source[0]))

    def finish(self, trace, states):
        super(APolyProgram, self).finish(trace, states)
        self.planner.record(trace, self.x)

        term = trace.termination_round
        by_id = dict((st.id, v) for v, st in enumerate(states))
        counted = [v for v, st in enumerate(states) if st.kind == 'active']
        sources = {}
        for v, st in enumerate(states):
            if st.kind == 'weight' and trace.outputs[v].primary == COPY:
                sources[v] = by_id[st.source[1]]
        product = 1
        for i, gamma in enumerate(self.gammas + [None], 1):
            start = self.starts[i]
            observed = self.undecided(trace, counted, start)
            observed += sum(1 for a in sources.values() if term[a] >= start)
            trace.record('phase-%d-undecided' % i, 7 * self.n * float(product) ** (self.x - 1),
                         observed)
            if gamma is not None:
                product *= gamma


def a_poly(tree, inputs, delta, d, k, variant='2.5', gammas=None, max_rounds=None):
    """Solve weighted hierarchical coloring on ``tree``; returns the RunTrace.

    ``gammas`` defaults to ceil(n ** alpha_i) with the exponents of the
    efficiency factor of (delta, d).
    """
    if delta < d + 3:
        raise ParameterError('need delta >= d + 3 (delta=%d, d=%d)' % (delta, d))
    inputs = list(inputs if inputs is not None else tree.inputs)
    if any(i not in (ACTIVE, WEIGHT) for i in inputs):
        raise ParameterError('weighted instances need Active / Weight inputs')
    x = formulas.x_factor(delta, d)
    if gammas is None:
        gammas = formulas.poly_gammas(tree.n, formulas.alpha_seq_poly(x, k))
    params = generic_params(k, gammas, variant, tree.n)
    program = APolyProgram(k, params, d, tree.n, x)
    log.debug('apoly: n=%d x=%.4f gammas=%r', tree.n, x, params.gammas)
    return run(tree, program, inputs, max_rounds=max_rounds)
