# -*- coding: utf-8; -*-

"""The d-free weight solver and its Copy assignment.

A weight node collects its radius-(3L + 3) neighbourhood, L being
ceil(log_{d+1} n), and then decides on its own:

* Connect if it lies on a path of at most 2L + 2 hops between two A nodes;
* an A node that is not Connect seeds a Copy plan on its L-ball;
* a node inside the plan of a seed takes the plan's label;
* everything else declines.
"""

import logging
from collections import namedtuple

from lclbench import formulas
from lclbench.exc import ParameterError
from lclbench.labels import A, CONNECT, COPY, DECLINE, dfree_input
from lclbench.sim import NodeProgram, Step, run

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

INF = float('inf')

CopyPlan = namedtuple('CopyPlan', 'labels copies depth')


def log_radius(n, d):
    """Smallest L with (d + 1) ** L >= n."""
    if d < 1:
        raise ParameterError('d-free weight solving needs d >= 1, got %r' % (d,))
    radius, reach = 0, 1
    while reach < n:
        reach *= d + 1
        radius += 1
    return radius


def _rooted(neighbours, root, depth_cap):
    order = [root]
    parent = {root: None}
    depth = {root: 0}
    children = {}
    for v in order:
        children[v] = []
        if depth[v] > depth_cap:
            continue
        for u in neighbours(v):
            if u in depth:
                continue
            parent[u] = v
            depth[u] = depth[v] + 1
            children[v].append(u)
            order.append(u)
    return order, children, depth


def copy_plan(neighbours, root, d, depth_cap, key=None, greedy=False):
    """Copy/Decline labels for the ball of ``depth_cap + 1`` around ``root``.

    The root copies, a Copy node lets at most d children decline, a declining
    node's subtree declines and nodes deeper than ``depth_cap`` decline. The
    default minimises the number of Copy nodes, declining the costliest
    children (higher key first on ties); ``greedy`` declines the largest
    subtrees instead.
    """
    key = key or (lambda v: v)
    order, children, depth = _rooted(neighbours, root, depth_cap)
    cost, size, declined = {}, {}, {}
    for v in reversed(order):
        kids = children[v]
        size[v] = 1 + sum(size[c] for c in kids)
        if depth[v] > depth_cap:
            cost[v] = INF
            declined[v] = []
            continue
        if greedy:
            ranked = sorted(kids, key=lambda c: (-size[c], -key(c)))
            declined[v] = ranked[:d]
            cost[v] = 1 + sum(cost[c] for c in ranked[d:])
            continue
        forced = [c for c in kids if cost[c] == INF]
        if len(forced) > d:
            cost[v] = INF
            declined[v] = forced
            continue
        optional = sorted((c for c in kids if cost[c] != INF), key=lambda c: (-cost[c], -key(c)))
        room = d - len(forced)
        declined[v] = forced + optional[:room]
        cost[v] = 1 + sum(cost[c] for c in optional[room:])

    if cost[root] == INF:
        raise ParameterError('no Copy assignment keeps d=%d within depth %d' % (d, depth_cap))
    labels = dict.fromkeys(order, DECLINE)
    stack = [root]
    while stack:
        v = stack.pop()
        labels[v] = COPY
        skip = set(declined[v])
        stack.extend(c for c in children[v] if c not in skip)
    return CopyPlan(labels, int(cost[root]), depth)


def min_copy_assignment(tree, d, root=0, depth_cap=None):
    """Fewest Copy nodes for a weight tree rooted at ``root``.

    Returns ``(labels, count)``; ``depth_cap`` defaults to ceil(log_{d+1} n).
    """
    if depth_cap is None:
        depth_cap = log_radius(tree.n, d)
    plan = copy_plan(tree.neighbours, root, d, depth_cap, key=lambda v: tree.ids[v])
    return plan.labels, plan.copies


def greedy_copy_assignment(tree, d, root=0, depth_cap=None):
    if depth_cap is None:
        depth_cap = tree.n
    plan = copy_plan(tree.neighbours, root, d, depth_cap,
                     key=lambda v: tree.ids[v], greedy=True)
    return plan.labels, plan.copies


class Gather(object):
    """What one node knows about its neighbourhood: node flags and edges by id."""

    def __init__(self):
        self.flags = {}
        self.edges = set()
        self._adjacency = None

    def learn(self, facts):
        new = []
        for fact in facts:
            if fact[0] == 'v':
                if fact[1] in self.flags:
                    continue
                self.flags[fact[1]] = fact[2]
            else:
                if fact[1:] in self.edges:
                    continue
                self.edges.add(fact[1:])
            new.append(fact)
        if new:
            self._adjacency = None
        return new

    def adjacency(self):
        if self._adjacency is None:
            adj = {}
            for a, b in self.edges:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
            for nbrs in adj.values():
                nbrs.sort()
            self._adjacency = adj
        return self._adjacency


def edge_fact(a, b):
    return ('e', min(a, b), max(a, b))


def _bfs(adj, root, radius):
    dist = {root: 0}
    branch = {root: None}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            if dist[v] == radius:
                continue
            for u in adj.get(v, ()):
                if u in dist:
                    continue
                dist[u] = dist[v] + 1
                branch[u] = u if v == root else branch[v]
                nxt.append(u)
        frontier = nxt
    return dist, branch


def is_connect(adj, flags, v, radius):
    """Whether ``v`` lies on an A-to-A path of at most ``2 * radius + 2`` hops."""
    limit = 2 * radius + 2
    dist, branch = _bfs(adj, v, limit)
    best = {}
    for u, du in dist.items():
        if u != v and flags.get(u):
            best[branch[u]] = min(best.get(branch[u], INF), du)
    closest = sorted(best.values())
    if flags.get(v):
        return bool(closest) and closest[0] <= limit
    return len(closest) >= 2 and closest[0] + closest[1] <= limit


SeedStats = namedtuple('SeedStats', 'seed ball copies greedy')


class CopyPlanner(object):
    """Decisions of the d-free solver, shared by all nodes of one run.

    Plans are memoised per seed: every node that evaluates the plan of a
    seed sees the same neighbourhood of it and would compute the same labels.
    """

    def __init__(self, d, n):
        self.d = d
        self.radius = log_radius(n, d)
        self.gather_radius = 3 * self.radius + 3
        self.plans = {}
        self.stats = []

    def plan(self, adj, seed):
        if seed not in self.plans:
            neighbours = lambda v: adj.get(v, ())
            plan = copy_plan(neighbours, seed, self.d, self.radius)
            greedy = copy_plan(neighbours, seed, self.d, self.radius, greedy=True)
            ball = sum(1 for depth in plan.depth.values() if depth <= self.radius)
            self.plans[seed] = plan
            self.stats.append(SeedStats(seed, ball, plan.copies, greedy.copies))
        return self.plans[seed]

    def decide(self, me, gather):
        """``(label, plan)``; the plan is given for Copy nodes."""
        adj = gather.adjacency()
        flags = gather.flags
        if is_connect(adj, flags, me, self.radius):
            return CONNECT, None
        dist, _ = _bfs(adj, me, self.radius + 1)
        seeds = [s for s in sorted(dist) if flags.get(s) and
                 not is_connect(adj, flags, s, self.radius)]
        if not seeds:
            return DECLINE, None
        if len(seeds) > 1:
            raise AssertionError('node %r sees %d seeds within %d hops'
                                 % (me, len(seeds), self.radius + 1))
        plan = self.plan(adj, seeds[0])
        label = plan.labels.get(me, DECLINE)
        return label, plan if label == COPY else None

    def record(self, trace, x=None):
        for entry in self.stats:
            trace.record('copy-dp-vs-greedy', entry.greedy, entry.copies)
            if x is not None:
                trace.record('copy-bound', 6 * entry.ball ** x, entry.copies)


class DFreeState(object):
    def __init__(self, view):
        self.index = view.index
        self.id = view.id
        self.is_a = dfree_input(view.input) == A
        self.ports = view.ports
        self.gather = Gather()

    kind = 'weight'


class DFreeProgram(NodeProgram):
    """Standalone d-free solver; inputs are A / W and known from round 0."""

    name = 'dfree'

    def __init__(self, d, n, delta=None):
        self.planner = CopyPlanner(d, n)
        self.x = None
        if delta is not None and delta >= d + 3:
            self.x = formulas.x_factor(delta, d)

    def init(self, view):
        return DFreeState(view)

    def step(self, rnd, st, inbox):
        if rnd == 0:
            fact = ('v', st.id, st.is_a)
            st.gather.learn([fact])
            return Step(st, dict((u, (fact,)) for u in st.ports),
                        wake=self.planner.gather_radius)
        facts = []
        for u, message in inbox.items():
            facts.extend(message)
            if rnd == 1:
                facts.append(edge_fact(st.id, message[0][1]))
        new = st.gather.learn(facts)
        if rnd >= self.planner.gather_radius:
            return self.done(st)
        return Step(st, dict((u, tuple(new)) for u in st.ports) if new else {},
                    wake=self.planner.gather_radius)

    def done(self, st):
        label, _ = self.planner.decide(st.id, st.gather)
        return Step(st, {}, label)

    def finish(self, trace, states):
        self.planner.record(trace, self.x)


def dfree_algorithm_a(tree, inputs=None, d=1, n=None, delta=None, max_rounds=None):
    """Solve the d-free weight problem on ``tree`` (inputs A / W).

    Every node terminates at round 3 ceil(log_{d+1} n) + 3. With ``delta``
    given and ``delta >= d + 3`` each seeded ball is checked against the
    6 |ball| ** x copy bound in the trace diagnostics.
    """
    inputs = list(inputs if inputs is not None else tree.inputs)
    if n is None:
        n = tree.n
    program = DFreeProgram(d, n, delta)
    trace = run(tree, program, inputs, max_rounds=max_rounds)
    log.debug('dfree: %d seed(s), %d Copy node(s)', len(program.planner.stats),
              sum(1 for o in trace.outputs if o == COPY))
    return trace
