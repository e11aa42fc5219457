# -*- coding: utf-8; -*-

"""Hierarchical labeling and its weight-augmented version, from a layering.

A node raked in iteration i takes R_i and points to its unique higher
neighbour. Inner nodes of a compress piece of iteration i take C_i, the
piece's endpoints take R_{i+1}; inner nodes next to an endpoint point to
it and endpoints point to their higher neighbour.
"""

import logging
import math

from lclbench.algorithms.decomposition import (RAKE, decomposition_gamma,
                                               rake_compress)
from lclbench.algorithms.generic import ActiveState, GenericProgram, generic_params
from lclbench.exc import ParameterError
from lclbench.labels import (ACTIVE, DECLINE, IN, NONE, OUT, WEIGHT, WHITE,
                             HierLabel, compress, is_compress, rake)
from lclbench.sim import Step, run, trace_from_schedule

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

PIECE_LENGTH = 4


def hier_layout(tree, dec):
    """Per-node tags and orientation maps for a decomposition of ``tree``."""
    tags = [None] * tree.n
    up = [None] * tree.n

    def piece_nbrs(v):
        return [u for u in tree.neighbours(v) if dec[u] == dec[v]]

    def higher(v):
        return [u for u in tree.neighbours(v) if dec.rank(u) > dec.rank(v)]

    for v in tree.nodes():
        layer = dec[v]
        if layer.kind == RAKE:
            tags[v] = rake(layer.i)
            above = higher(v)
            up[v] = above[0] if above else None
        elif len(piece_nbrs(v)) <= 1:
            tags[v] = rake(layer.i + 1)
            above = higher(v)
            up[v] = above[0] if above else None
        else:
            tags[v] = compress(layer.i)
            ends = [u for u in piece_nbrs(v) if len(piece_nbrs(u)) <= 1]
            up[v] = ends[0] if ends else None

    orient = []
    for v in tree.nodes():
        orient.append(dict((u, OUT if up[v] == u else IN if up[u] == v else NONE)
                           for u in tree.neighbours(v)))
    return tags, orient


def _layered(tree, k, gamma):
    dec = rake_compress(tree, gamma, PIECE_LENGTH)
    if dec.layers > k:
        raise ParameterError('tree needs %d rake layers at gamma=%d, more than k=%d'
                             % (dec.layers, gamma, k))
    return dec


def hier_labeling_solve(tree, k, gamma=None):
    """Hierarchical labeling of ``tree`` with ``k`` rake labels; returns a RunTrace.

    A node is charged its layering round plus one round to learn its
    neighbours' layers.
    """
    if k < 1:
        raise ParameterError('k must be >= 1')
    if gamma is None:
        gamma = decomposition_gamma(tree.n, k, PIECE_LENGTH)
    dec = _layered(tree, k, gamma)
    tags, orient = hier_layout(tree, dec)
    labels = [HierLabel(tags[v], orient[v]) for v in tree.nodes()]
    log.debug('hier-labeling: gamma=%d, %d rake / %d compress layer(s)',
              gamma, dec.rake_layers(), dec.compress_layers())
    return trace_from_schedule(labels, [r + 1 for r in dec.rounds], program='hier-labeling')


class _IdleState(object):
    kind = 'idle'

    def __init__(self, view):
        self.id = view.id
        self.ports = view.ports


class ActiveOnlyProgram(GenericProgram):
    """The phased 2½ solver where weight nodes only announce themselves."""

    def init(self, view):
        if view.input == WEIGHT:
            return _IdleState(view)
        return ActiveState(view)

    def step(self, rnd, state, inbox):
        if state.kind == 'idle':
            return Step(state, dict((u, {'hello': (state.id, WEIGHT)}) for u in state.ports),
                        WEIGHT)
        return self.active_step(rnd, state, inbox)


def worst_case_gammas(n, k):
    return [max(1, int(math.ceil(n ** (float(i) / k) - 1e-9))) for i in range(1, k)]


def weight_augmented_solve(tree, inputs, k):
    """Active nodes 2½-color, weight components carry a hierarchical labeling.

    Weight nodes next to Active nodes point to the lowest-id one and copy
    its output; rake-labeled weight nodes copy the node they point to,
    compress-labeled ones away from Active nodes decline, and rake nodes
    with nothing to copy take W.
    """
    if k < 2:
        raise ParameterError('weight-augmented solving needs k >= 2')
    inputs = list(inputs if inputs is not None else tree.inputs)
    n = tree.n
    params = generic_params(k, worst_case_gammas(n, k), '2.5')
    active_trace = run(tree, ActiveOnlyProgram(k, params), inputs)
    outputs = list(active_trace.outputs)
    rounds = list(active_trace.termination_round)

    gamma = decomposition_gamma(n, k, PIECE_LENGTH)
    weights = [v for v in tree.nodes() if inputs[v] == WEIGHT]
    secondary = {}
    for comp in tree.components(weights):
        sub, index = tree.subtree(comp)
        dec = _layered(sub, k, gamma)
        tags, orient = hier_layout(sub, dec)
        for w in sorted(sub.nodes(), key=dec.rank, reverse=True):
            v = index[w]
            ready = dec.rounds[w] + 1
            edges = dict((index[u], o) for u, o in orient[w].items())
            actives = sorted((u for u in tree.neighbours(v) if inputs[u] == ACTIVE),
                             key=lambda u: tree.ids[u])
            targets = [index[u] for u, o in orient[w].items() if o == OUT]
            if actives:
                source = actives[0]
                for u in actives:
                    edges[u] = OUT if u == source else NONE
                sec = outputs[source]
                ready = max(ready, rounds[source] + 1)
            elif is_compress(tags[w]):
                sec = DECLINE
            elif targets and secondary[targets[0]] != DECLINE:
                sec = secondary[targets[0]]
                ready = max(ready, rounds[targets[0]] + 1)
            else:
                sec = WHITE
            secondary[v] = sec
            outputs[v] = HierLabel(tags[w], edges, sec)
            rounds[v] = ready

    trace = trace_from_schedule(outputs, rounds, program='weight-augmented')
    trace.levels = active_trace.levels
    trace.diagnostics = list(active_trace.diagnostics)
    trace.violations = list(active_trace.violations)
    return trace
