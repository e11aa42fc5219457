# -*- coding: utf-8; -*-

"""Rake-and-compress layering of a tree.

Iteration i rakes gamma times (sublayers (i, 1)..(i, gamma)), then
compresses every chain of at least ``ell`` degree-2 nodes into pieces of
``ell``..``2 ell`` nodes. Chains are cut from their lower-id end; the node
between two pieces is kept back and raked in the next iteration.
"""

import logging
import math
from collections import namedtuple

import networkx as nx

from lclbench.exc import CapExceeded, ParameterError

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

RAKE = 'rake'
COMPRESS = 'compress'

Layer = namedtuple('Layer', 'kind i j')


def layer_rank(layer):
    if layer.kind == RAKE:
        return (layer.i, 0, layer.j)
    return (layer.i, 1, 0)


class Decomposition(object):
    def __init__(self, assignment, gamma, ell, layers, rounds):
        self.assignment = list(assignment)
        self.gamma = gamma
        self.ell = ell
        self.layers = layers
        self.rounds = list(rounds)

    def __repr__(self):
        return '<Decomposition gamma=%d ell=%d L=%d>' % (self.gamma, self.ell, self.layers)

    def __getitem__(self, v):
        return self.assignment[v]

    def rank(self, v):
        return layer_rank(self.assignment[v])

    def rake_layers(self):
        return len(set(a.i for a in self.assignment if a.kind == RAKE))

    def compress_layers(self):
        return len(set(a.i for a in self.assignment if a.kind == COMPRESS))

    def nodes_in(self, kind, i, j=None):
        return [v for v, a in enumerate(self.assignment)
                if a.kind == kind and a.i == i and (j is None or a.j == j)]


def decomposition_gamma(n, k, ell):
    """gamma = ceil(n ** (1/k) * (ell/2) ** (1 - 1/k))."""
    if k < 1:
        raise ParameterError('k must be >= 1')
    return max(1, int(math.ceil(n ** (1.0 / k) * (ell / 2.0) ** (1 - 1.0 / k) - 1e-9)))


def _chains(tree, alive, degree):
    seen = set()
    for start in sorted(alive, key=lambda v: tree.ids[v]):
        if degree[start] != 2 or start in seen:
            continue
        seen.add(start)
        arms = []
        for first in [u for u in tree.neighbours(start) if u in alive]:
            prev, cur, arm = start, first, []
            while degree[cur] == 2 and cur not in seen:
                arm.append(cur)
                seen.add(cur)
                prev, cur = cur, [u for u in tree.neighbours(cur) if u in alive and u != prev][0]
            arms.append(arm)
        chain = list(reversed(arms[0])) + [start] + arms[1]
        if tree.ids[chain[-1]] < tree.ids[chain[0]]:
            chain.reverse()
        yield chain


def _split(chain, ell):
    pieces, splitters = [], []
    pos = 0
    while len(chain) - pos > 2 * ell:
        pieces.append(chain[pos:pos + ell])
        splitters.append(chain[pos + ell])
        pos += ell + 1
    pieces.append(chain[pos:])
    return pieces, splitters


def rake_compress(tree, gamma, ell, max_layers=None):
    """Layer ``tree``; raises :class:`CapExceeded` past ``max_layers`` iterations.

    Rounds are charged per iteration as gamma rake rounds plus 2 ell + 1
    rounds for a compress node to see its chain up to the next cut.
    """
    if gamma < 1 or ell < 1:
        raise ParameterError('need gamma >= 1 and ell >= 1 (gamma=%r, ell=%r)' % (gamma, ell))
    n = tree.n
    alive = set(tree.nodes())
    degree = [tree.degree(v) for v in tree.nodes()]
    assignment = [None] * n
    rounds = [0] * n
    per_iteration = gamma + 2 * ell + 1

    def remove(v):
        alive.discard(v)
        for u in tree.neighbours(v):
            if u in alive:
                degree[u] -= 1

    i = 0
    while alive:
        i += 1
        if max_layers is not None and i > max_layers:
            raise CapExceeded('%d node(s) left after %d rake-and-compress iterations'
                              % (len(alive), max_layers))
        offset = (i - 1) * per_iteration
        for j in range(1, gamma + 1):
            leaves = sorted((v for v in alive if degree[v] <= 1), key=lambda v: tree.ids[v])
            if not leaves:
                break
            chosen = set()
            for v in leaves:
                if not any(u in chosen for u in tree.neighbours(v)):
                    chosen.add(v)
            for v in chosen:
                assignment[v] = Layer(RAKE, i, j)
                rounds[v] = offset + j
            for v in chosen:
                remove(v)
        if not alive:
            break

        compressed = []
        for chain in list(_chains(tree, alive, degree)):
            if len(chain) < ell:
                continue
            pieces, _ = _split(chain, ell)
            for piece in pieces:
                compressed.extend(piece)
        for v in compressed:
            assignment[v] = Layer(COMPRESS, i, None)
            rounds[v] = offset + per_iteration
        for v in compressed:
            remove(v)
        log.debug('iteration %d: %d node(s) compressed, %d left', i, len(compressed), len(alive))

    return Decomposition(assignment, gamma, ell, i, rounds)


def _tree_diameter(graph):
    """Exact for trees: the farthest node from anywhere is a diameter end."""
    start = next(iter(graph))
    dist = nx.single_source_shortest_path_length(graph, start)
    far = max(dist, key=dist.get)
    return max(nx.single_source_shortest_path_length(graph, far).values())


def validate_decomposition(tree, decomposition):
    """Structural problems of ``decomposition``; empty when it is sound."""
    dec = decomposition
    graph = tree.to_networkx()
    problems = []
    if any(a is None for a in dec.assignment):
        return ['%d node(s) have no layer' % sum(1 for a in dec.assignment if a is None)]

    def higher(v):
        return [u for u in graph[v] if dec.rank(u) > dec.rank(v)]

    for i in range(1, dec.layers + 1):
        compress = dec.nodes_in(COMPRESS, i)
        for comp in nx.connected_components(graph.subgraph(compress)):
            sub = graph.subgraph(comp)
            if max(dict(sub.degree()).values()) > 2:
                problems.append('compress layer %d: component is not a path' % i)
            if not dec.ell <= len(comp) <= 2 * dec.ell:
                problems.append('compress layer %d: path of %d nodes outside [%d, %d]'
                                % (i, len(comp), dec.ell, 2 * dec.ell))
            for v in comp:
                if len(higher(v)) + sub.degree(v) != 2:
                    problems.append('compress node %d: %d higher neighbour(s) with %d on its path'
                                    % (v, len(higher(v)), sub.degree(v)))

        rake = dec.nodes_in(RAKE, i)
        for comp in nx.connected_components(graph.subgraph(rake)):
            if _tree_diameter(graph.subgraph(comp)) > 2 * dec.gamma:
                problems.append('rake layer %d: component diameter above 2 gamma' % i)
            exits = sum(1 for v in comp for u in higher(v) if u not in comp)
            if exits > 1:
                problems.append('rake layer %d: component with %d upward edges' % (i, exits))

        for j in sorted(set(dec[v].j for v in rake)):
            members = set(dec.nodes_in(RAKE, i, j))
            for v in members:
                if any(u in members for u in graph[v]):
                    problems.append('rake sublayer (%d, %d): node %d is not isolated' % (i, j, v))
                if len(higher(v)) > 1:
                    problems.append('rake sublayer (%d, %d): node %d has %d higher neighbours'
                                    % (i, j, v, len(higher(v))))
    return problems
