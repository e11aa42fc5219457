# -*- coding: utf-8; -*-

"""Bounded-degree trees, level peeling and the JSON graph format.

Path "length" means number of nodes everywhere in lclbench.
"""

import json
import logging
import random
from collections import deque

import networkx as nx

from lclbench.exc import InvalidTree, ParameterError
from lclbench.labels import INPUT_LABELS

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class Tree(object):
    """Immutable tree on nodes ``0..n-1`` with unique positive ids.

    Use :func:`build_tree` rather than the constructor, it validates the
    edge list.
    """

    def __init__(self, adjacency, ids, inputs=None):
        self._adj = tuple(tuple(sorted(a)) for a in adjacency)
        self.ids = tuple(ids)
        self.inputs = tuple(inputs) if inputs is not None else None
        self.node_count = len(self._adj)
        self.max_degree = max(len(a) for a in self._adj) if self._adj else 0

    def __len__(self):
        return self.node_count

    def __repr__(self):
        return '<Tree n=%d delta=%d>' % (self.node_count, self.max_degree)

    @property
    def n(self):
        return self.node_count

    def nodes(self):
        return range(self.node_count)

    def neighbours(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def edges(self):
        return [(u, v) for u in self.nodes() for v in self._adj[u] if u < v]

    def input_of(self, v):
        return self.inputs[v] if self.inputs is not None else None

    def with_inputs(self, inputs):
        return Tree(self._adj, self.ids, inputs)

    def with_ids(self, ids):
        _check_ids(ids, self.node_count)
        return Tree(self._adj, ids, self.inputs)

    def ball(self, v, radius, within=None):
        """Return ``{node: hop distance}`` for nodes at distance <= radius.

        With ``within`` given, the search stays inside that node set.
        """
        dist = {v: 0}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            if dist[u] == radius:
                continue
            for w in self._adj[u]:
                if w not in dist and (within is None or w in within):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def components(self, nodes):
        """Connected components of the subgraph induced by ``nodes``.

        Components come ordered by their smallest index, each sorted.
        """
        nodes = set(nodes)
        seen = set()
        result = []
        for v in sorted(nodes):
            if v in seen:
                continue
            comp = sorted(self.ball(v, self.node_count, within=nodes))
            seen.update(comp)
            result.append(comp)
        return result

    def subtree(self, nodes):
        """Induced subtree on a connected node set.

        Returns ``(tree, index)`` where ``index[new] == old``.
        """
        index = sorted(nodes)
        position = dict((old, new) for new, old in enumerate(index))
        adjacency = [[position[u] for u in self._adj[old] if u in position]
                     for old in index]
        inputs = [self.inputs[old] for old in index] if self.inputs is not None else None
        sub = Tree(adjacency, [self.ids[old] for old in index], inputs)
        if len(index) > 1 and sum(len(a) for a in adjacency) != 2 * (len(index) - 1):
            raise InvalidTree('node set is not connected')
        return sub, index

    def to_networkx(self):
        g = nx.Graph()
        for v in self.nodes():
            g.add_node(v, id=self.ids[v], input=self.input_of(v))
        g.add_edges_from(self.edges())
        return g


class LevelMap(object):
    """Per-node level in ``1..k+1``."""

    def __init__(self, level, k):
        self.level = tuple(level)
        self.k = k

    def __getitem__(self, v):
        return self.level[v]

    def __len__(self):
        return len(self.level)

    def __eq__(self, other):
        return (isinstance(other, LevelMap) and self.k == other.k
                and self.level == other.level)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<LevelMap k=%d sizes=%r>' % (self.k, self.sizes())

    def nodes_at(self, i):
        return [v for v, l in enumerate(self.level) if l == i]

    def sizes(self):
        counts = [0] * (self.k + 2)
        for l in self.level:
            counts[l] += 1
        return dict((i, counts[i]) for i in range(1, self.k + 2))


def _check_ids(ids, n):
    if len(ids) != n:
        raise InvalidTree('expected %d ids, got %d' % (n, len(ids)))
    if len(set(ids)) != n:
        raise InvalidTree('duplicate ids')
    if any(int(i) < 1 for i in ids):
        raise InvalidTree('ids must be positive integers')


def build_tree(edge_list, inputs=None, ids=None, n=None):
    edge_list = [tuple(e) for e in edge_list]
    if n is None:
        n = 1 + max([max(e) for e in edge_list] or [0])
    if n < 1:
        raise InvalidTree('a tree needs at least one node')

    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    adjacency = [[] for _ in range(n)]
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidTree('edge (%d, %d) outside nodes 0..%d' % (u, v, n - 1))
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InvalidTree('cycle detected at edge (%d, %d)' % (u, v))
        parent[ru] = rv
        adjacency[u].append(v)
        adjacency[v].append(u)

    if len(edge_list) != n - 1:
        raise InvalidTree('graph is disconnected (%d nodes, %d edges)' % (n, len(edge_list)))

    if ids is None:
        ids = range(1, n + 1)
    ids = [int(i) for i in ids]
    _check_ids(ids, n)

    if inputs is not None:
        inputs = list(inputs)
        if len(inputs) != n:
            raise InvalidTree('expected %d inputs, got %d' % (n, len(inputs)))
        bad = [x for x in inputs if x not in INPUT_LABELS]
        if bad:
            raise InvalidTree('unknown input label %r' % (bad[0],))

    return Tree(adjacency, ids, inputs)


def path_graph(n):
    if n < 1:
        raise InvalidTree('a path needs at least one node')
    return build_tree([(i, i + 1) for i in range(n - 1)], n=n)


def balanced_regular_tree(delta, size):
    """Breadth-first filled tree with fan-out ``delta - 1``; root is node 0."""
    if delta < 3:
        raise ParameterError('balanced tree needs delta >= 3, got %d' % delta)
    if size < 1:
        raise InvalidTree('a tree needs at least one node')
    fan = delta - 1
    return build_tree([((j - 1) // fan, j) for j in range(1, size)], n=size)


def random_tree(n, max_degree, seed):
    """Uniform attachment to a node that still has spare degree."""
    if max_degree < 2 and n > 2:
        raise ParameterError('max_degree must be >= 2 for %d nodes' % n)
    rng = random.Random(seed)
    degree = [0] * n
    spare = [0]
    edges = []
    for v in range(1, n):
        i = rng.randrange(len(spare))
        u = spare[i]
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1
        if degree[u] >= max_degree:
            spare[i] = spare[-1]
            spare.pop()
        if degree[v] < max_degree:
            spare.append(v)
    return build_tree(edges, n=n)


def permute_ids(tree, factor, seed):
    """Distinct ids drawn uniformly from ``1..n*factor``."""
    if factor < 1:
        raise ParameterError('id factor must be >= 1')
    rng = random.Random(seed)
    return tree.with_ids(rng.sample(range(1, tree.n * factor + 1), tree.n))


def compute_levels(tree, k):
    """Peel nodes of remaining degree <= 2, k times.

    A node removed in step i gets level i, whatever is left gets k+1.
    Isolated nodes count as degree <= 2.
    """
    if k < 1:
        raise ParameterError('k must be >= 1, got %r' % (k,))
    degree = [tree.degree(v) for v in tree.nodes()]
    level = [k + 1] * tree.n
    alive = set(tree.nodes())
    for i in range(1, k + 1):
        peeled = [v for v in alive if degree[v] <= 2]
        if not peeled:
            break
        for v in peeled:
            level[v] = i
            alive.discard(v)
        for v in peeled:
            for u in tree.neighbours(v):
                if u in alive:
                    degree[u] -= 1
    return LevelMap(tuple(level), k)


def _plain(value):
    if isinstance(value, float):
        return '%.12g' % value
    if isinstance(value, dict):
        return dict((str(k), _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def dump_graph(tree, meta=None):
    doc = {'n': tree.n, 'edges': [list(e) for e in tree.edges()], 'ids': list(tree.ids)}
    if tree.inputs is not None:
        doc['inputs'] = list(tree.inputs)
    if meta:
        doc['meta'] = _plain(meta)
    return json.dumps(doc, sort_keys=True, separators=(',', ':'))


def store_graph(path, tree, meta=None):
    with open(path, 'wt') as f:
        f.write(dump_graph(tree, meta))
        f.write('\n')


def load_graph(path):
    """Return ``(tree, meta)`` read from a graph file."""
    try:
        with open(path) as f:
            doc = json.load(f)
    except (IOError, ValueError) as exc:
        raise InvalidTree('cannot read graph %s: %s' % (path, exc))
    try:
        tree = build_tree(doc['edges'], inputs=doc.get('inputs'),
                          ids=doc.get('ids'), n=doc['n'])
    except KeyError as exc:
        raise InvalidTree('%s: missing field %s' % (path, exc))
    return tree, doc.get('meta', {})
