# -*- coding: utf-8; -*-

"""Validity checkers for the hierarchical coloring family.

Each problem is a :class:`Problem` whose :meth:`Problem.rules` looks at one
node and its direct neighbours only. :meth:`Problem.check` runs the rules on
every node; :mod:`lclbench.oracle` reuses the very same rules to prune its
exhaustive search, so checker and oracle cannot drift apart.
"""

import logging
from collections import namedtuple

from lclbench import labels as L
from lclbench.exc import InvalidLabel, ParameterError
from lclbench.tree import LevelMap, compute_levels

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Violation = namedtuple('Violation', 'node rule message')


class Verdict(object):
    def __init__(self, violations=()):
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __eq__(self, other):
        return isinstance(other, Verdict) and self.violations == other.violations

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<Verdict ok=%s violations=%d>' % (self.ok, len(self.violations))

    def rules(self):
        return sorted(set(v.rule for v in self.violations))


class Problem(object):
    """Base class of a locally checkable problem on (a node subset of) a tree."""

    name = None

    def __init__(self, tree, nodes=None):
        self.tree = tree
        self.members = None if nodes is None else frozenset(nodes)

    def node_list(self):
        if self.members is None:
            return list(self.tree.nodes())
        return sorted(self.members)

    def nbrs(self, v):
        if self.members is None:
            return self.tree.neighbours(v)
        return [u for u in self.tree.neighbours(v) if u in self.members]

    def candidates(self, v):
        raise NotImplementedError

    def validate(self, out):
        pass

    def rules(self, v, out):
        raise NotImplementedError

    def violations(self, out, nodes=None):
        found = []
        for v in (self.node_list() if nodes is None else nodes):
            for rule, message in self.rules(v, out):
                found.append(Violation(v, rule, message))
        return found

    def check(self, out):
        if len(out) != self.tree.n:
            raise InvalidLabel('expected %d labels, got %d' % (self.tree.n, len(out)))
        self.validate(out)
        verdict = Verdict(self.violations(out))
        log.debug('%s: %d violation(s)', self.name, len(verdict.violations))
        return verdict

    # search plumbing for the oracle

    def search_order(self):
        order = []
        for comp in self.tree.components(self.node_list()):
            within = None if self.members is None else self.members
            order.extend(self.tree.ball(comp[0], self.tree.n, within=within))
        return order

    def variables(self):
        return [('node', v) for v in self.search_order()]

    def domain(self, key):
        return self.candidates(key[1])

    def depends(self, v):
        return [('node', v)] + [('node', u) for u in self.nbrs(v)]

    def new_state(self):
        return [None] * self.tree.n

    def assign(self, state, key, value):
        state[key[1]] = value

    def labels(self, state):
        return state

    def snapshot(self, state):
        return list(state)


class KHierColoring(Problem):
    """Hierarchical 2½- or 3½-coloring over the levels in ``levels``."""

    def __init__(self, tree, k, variant, levels, nodes=None):
        super(KHierColoring, self).__init__(tree, nodes)
        self.k = k
        self.variant = variant
        self.alphabet = L.alphabet(variant)
        self.level = levels
        self.name = 'khier-%s' % variant

    def candidates(self, v):
        return self.alphabet

    def validate(self, out):
        for v in self.node_list():
            if out[v] not in self.alphabet:
                raise InvalidLabel('node %d: label %r outside the %s alphabet'
                                   % (v, out[v], self.variant))

    def rules(self, v, out):
        k, lv, lab = self.k, self.level[v], out[v]
        nbrs = self.nbrs(v)

        if lv == k + 1:
            if lab != L.EXEMPT:
                yield 'top-level', 'level-%d node must be E, got %s' % (lv, lab)
            return

        if lv == 1 and lab == L.EXEMPT:
            yield 'level1-exempt', 'level-1 node labeled E'

        lower = [u for u in nbrs if self.level[u] < lv]
        if lv >= 2:
            trigger = any(out[u] in (L.WHITE, L.BLACK, L.EXEMPT) for u in lower)
            if lab == L.EXEMPT and not trigger:
                yield 'exempt-iff', 'E without a colored or exempt lower-level neighbour'
            elif lab != L.EXEMPT and trigger:
                yield 'exempt-iff', 'lower-level neighbour colored or exempt, %s is not E' % lab

        if lv == k:
            if self.variant == '2.5' and lab == L.DECLINE_COLOR:
                yield 'level-k-label', 'level-k node labeled D'
            if self.variant == '3.5' and lab in (L.DECLINE_COLOR, L.WHITE, L.BLACK):
                yield 'level-k-label', 'level-k node labeled %s' % lab
            if lab == L.EXEMPT and lower and all(out[u] == L.DECLINE_COLOR for u in lower):
                yield 'level-k-exempt', 'E at level k while every lower neighbour declined'
        elif lab in (L.RED, L.GREEN, L.YELLOW):
            yield 'level-k-label', '%s below level k' % lab

        if lab in (L.WHITE, L.BLACK):
            for u in nbrs:
                if self.level[u] != lv:
                    continue
                if out[u] == lab:
                    yield 'same-color', 'same-level neighbour %d also %s' % (u, lab)
                elif out[u] == L.DECLINE_COLOR:
                    yield 'color-decline', 'same-level neighbour %d declined' % u
        elif lab in (L.RED, L.GREEN, L.YELLOW):
            for u in nbrs:
                if out[u] == lab:
                    yield 'same-color', 'neighbour %d also %s' % (u, lab)


def _primary(label):
    return label.primary if isinstance(label, L.WeightOutput) else label


def _component_levels(tree, nodes, k):
    """Levels computed separately on every component induced by ``nodes``."""
    level = [None] * tree.n
    for comp in tree.components(nodes):
        sub, index = tree.subtree(comp)
        sub_levels = compute_levels(sub, k)
        for new, old in enumerate(index):
            level[old] = sub_levels[new]
    return level


def _check_weighted_params(delta, d):
    if delta < d + 3:
        raise ParameterError('weighted problems need delta >= d + 3 (delta=%d, d=%d)'
                             % (delta, d))


class WeightedColoring(Problem):
    """Active nodes solve hierarchical Z-coloring, weight nodes copy or decline."""

    def __init__(self, tree, inputs, variant, delta, d, k):
        super(WeightedColoring, self).__init__(tree)
        _check_weighted_params(delta, d)
        self.inputs = list(inputs)
        self.variant = variant
        self.delta, self.d, self.k = delta, d, k
        self.name = 'weighted-%s' % variant
        active = [v for v in tree.nodes() if self.inputs[v] == L.ACTIVE]
        self.active = frozenset(active)
        self.coloring = KHierColoring(tree, k, variant,
                                      _component_levels(tree, active, k), nodes=active)

    def candidates(self, v):
        if v in self.active:
            return self.coloring.alphabet
        return ([L.WeightOutput(L.DECLINE), L.WeightOutput(L.CONNECT)] +
                [L.WeightOutput(L.COPY, s) for s in self.coloring.alphabet])

    def validate(self, out):
        self.coloring.validate(out)
        for v in self.tree.nodes():
            if v in self.active:
                continue
            lab = out[v]
            if not isinstance(lab, L.WeightOutput) or lab.primary not in L.WEIGHT_PRIMARIES:
                raise InvalidLabel('weight node %d: %r is not a weight output' % (v, lab))
            if (lab.primary == L.COPY) != (lab.secondary is not None):
                raise InvalidLabel('weight node %d: secondary output present iff Copy' % v)
            if lab.secondary is not None and lab.secondary not in self.coloring.alphabet:
                raise InvalidLabel('weight node %d: secondary %r outside the alphabet'
                                   % (v, lab.secondary))

    def rules(self, v, out):
        if v in self.active:
            for found in self.coloring.rules(v, out):
                yield found
            return

        lab = out[v]
        nbrs = self.tree.neighbours(v)
        active_nbrs = [u for u in nbrs if u in self.active]

        if active_nbrs and lab.primary == L.DECLINE:
            yield 'weight-adjacent', 'weight node next to an active node declined'

        if lab.primary == L.CONNECT:
            support = sum(1 for u in nbrs
                          if u in self.active or out[u].primary == L.CONNECT)
            if support < 2:
                yield 'weight-connect', 'Connect with %d supporting neighbour(s)' % support

        if lab.primary == L.COPY:
            declined = sum(1 for u in nbrs
                           if u not in self.active and out[u].primary == L.DECLINE)
            if declined > self.d:
                yield 'weight-dfree', 'Copy with %d declining neighbours (d=%d)' % (declined, self.d)
            if active_nbrs and not any(out[u] == lab.secondary for u in active_nbrs):
                yield 'weight-copy', 'secondary %s matches no active neighbour' % lab.secondary
            for u in nbrs:
                if (u not in self.active and out[u].primary == L.COPY
                        and out[u].secondary != lab.secondary):
                    yield 'weight-copy', 'secondary differs from copying neighbour %d' % u


class DFreeWeight(Problem):
    """The d-free weight problem on inputs A / W."""

    name = 'dfree'

    def __init__(self, tree, inputs, d, delta=None):
        super(DFreeWeight, self).__init__(tree)
        if delta is not None and not (d < delta and delta >= 3):
            raise ParameterError('d-free needs d < delta and delta >= 3 (delta=%d, d=%d)'
                                 % (delta, d))
        self.inputs = [L.dfree_input(i) for i in inputs]
        self.d = d

    def candidates(self, v):
        return L.WEIGHT_PRIMARIES

    def validate(self, out):
        for v in self.tree.nodes():
            if self.inputs[v] not in (L.A, L.W_INPUT):
                raise InvalidLabel('node %d: d-free input must be A or W' % v)
            if _primary(out[v]) not in L.WEIGHT_PRIMARIES:
                raise InvalidLabel('node %d: %r is not a d-free output' % (v, out[v]))

    def rules(self, v, out):
        lab = _primary(out[v])
        nbrs = self.tree.neighbours(v)
        is_a = self.inputs[v] == L.A

        if lab == L.CONNECT:
            if is_a:
                support = sum(1 for u in nbrs if _primary(out[u]) == L.CONNECT)
                need = 1
            else:
                support = sum(1 for u in nbrs if self.inputs[u] == L.A
                              or _primary(out[u]) == L.CONNECT)
                need = 2
            if support < need:
                yield 'dfree-connect', 'Connect with %d of %d supporting neighbours' % (support, need)

        if lab == L.COPY:
            declined = sum(1 for u in nbrs if _primary(out[u]) == L.DECLINE)
            if declined > self.d:
                yield 'dfree-copy', 'Copy with %d declining neighbours (d=%d)' % (declined, self.d)

        if is_a and lab == L.DECLINE:
            yield 'dfree-adjacent', 'A node declined'


class _HierState(object):
    def __init__(self, n):
        self.out = [None] * n
        self.orient = [dict() for _ in range(n)]


class HierLabeling(Problem):
    """Rake / compress labels with edge orientations."""

    name = 'hier-labeling'

    def __init__(self, tree, k, nodes=None):
        super(HierLabeling, self).__init__(tree, nodes)
        if k < 1:
            raise ParameterError('k must be >= 1')
        self.k = k
        self.tags = L.hier_tags(k)

    def candidates(self, v):
        return self.tags

    def _orient(self, out, v, u):
        return out[v].orient.get(u, L.NONE)

    def hier_nodes(self):
        return Problem.node_list(self)

    def validate(self, out):
        tags = set(self.tags)
        for v in self.hier_nodes():
            lab = out[v]
            if not isinstance(lab, L.HierLabel) or lab.tag not in tags:
                raise InvalidLabel('node %d: %r is not a hierarchical label for k=%d'
                                   % (v, lab, self.k))
            for u, o in lab.orient.items():
                if u not in self.tree.neighbours(v):
                    raise InvalidLabel('node %d: orientation towards non-neighbour %r' % (v, u))
                if o not in L.ORIENTATIONS:
                    raise InvalidLabel('node %d: unknown orientation %r' % (v, o))
            for u in self.nbrs(v):
                if self._orient(out, v, u) != L.flip(self._orient(out, u, v)):
                    raise InvalidLabel('inconsistent orientation records on edge (%d, %d)' % (v, u))

    def rules(self, v, out):
        tag = out[v].tag
        rank = L.tag_rank(tag)
        nbrs = self.nbrs(v)
        rake = L.is_rake(tag)
        outgoing = [u for u in nbrs if self._orient(out, v, u) == L.OUT]
        incoming = [u for u in nbrs if self._orient(out, v, u) == L.IN]
        compress_nbrs = [u for u in nbrs if L.is_compress(out[u].tag)]

        if rake and len(outgoing) + len(incoming) < len(nbrs):
            yield 'rake-oriented', 'rake node with an unoriented edge'

        if len(outgoing) > 1:
            yield 'one-outgoing', '%d outgoing edges' % len(outgoing)
        if not rake and len(compress_nbrs) >= 2 and outgoing:
            yield 'one-outgoing', 'inner compress node with an outgoing edge'

        for u in outgoing:
            if L.tag_rank(out[u].tag) < rank:
                yield 'ordered', 'edge towards %d goes from %s down to %s' % (u, tag, out[u].tag)

        if not rake:
            same = [u for u in nbrs if out[u].tag == tag]
            if len(same) > 2:
                yield 'compress-path', '%s node with %d %s neighbours' % (tag, len(same), tag)
            for u in compress_nbrs:
                if out[u].tag != tag:
                    yield 'compress-disjoint', '%s next to %s' % (tag, out[u].tag)
        else:
            pointing = [u for u in incoming if L.is_compress(out[u].tag)]
            if len(pointing) > 1:
                yield 'one-compress-in', '%d compress neighbours point here' % len(pointing)
            if pointing and any(L.tag_rank(out[u].tag) >= rank for u in incoming):
                yield 'one-compress-in', 'incoming label not strictly lower than %s' % tag

    # search plumbing: edge orientations are variables of their own

    def _edge_keys(self, v):
        keys = []
        for u in self.nbrs(v):
            keys.append(('edge', min(u, v), max(u, v)))
        return keys

    def variables(self):
        keys = []
        placed = set()
        for v in self.search_order():
            keys.append(('node', v))
            placed.add(v)
            for u in self.nbrs(v):
                if u in placed:
                    keys.append(('edge', min(u, v), max(u, v)))
        return keys

    def domain(self, key):
        if key[0] == 'edge':
            return L.ORIENTATIONS
        return self.candidates(key[1])

    def depends(self, v):
        return super(HierLabeling, self).depends(v) + self._edge_keys(v)

    def new_state(self):
        return _HierState(self.tree.n)

    def assign(self, state, key, value):
        if key[0] == 'edge':
            _, u, w = key
            state.orient[u][w] = value
            state.orient[w][u] = L.flip(value)
        else:
            v = key[1]
            state.out[v] = L.HierLabel(value, state.orient[v])

    def labels(self, state):
        return state.out

    def snapshot(self, state):
        return [l if not isinstance(l, L.HierLabel) else
                L.HierLabel(l.tag, dict(l.orient), l.secondary) for l in state.out]


class WeightAugmented(HierLabeling):
    """Hierarchical 2½-coloring on Active nodes, hierarchical labeling on weights."""

    name = 'weight-augmented'

    def __init__(self, tree, inputs, k):
        self.inputs = list(inputs)
        weights = [v for v in tree.nodes() if self.inputs[v] == L.WEIGHT]
        active = [v for v in tree.nodes() if self.inputs[v] == L.ACTIVE]
        super(WeightAugmented, self).__init__(tree, k, nodes=weights)
        self.active = frozenset(active)
        self.coloring = KHierColoring(tree, k, '2.5',
                                      _component_levels(tree, active, k), nodes=active)
        self.secondaries = L.ALPHABET_25 + (L.DECLINE,)

    def node_list(self):
        return list(self.tree.nodes())

    def candidates(self, v):
        if v in self.active:
            return L.ALPHABET_25
        return [(t, s) for t in self.tags for s in self.secondaries]

    def validate(self, out):
        self.coloring.validate(out)
        super(WeightAugmented, self).validate(out)
        for v in self.members:
            if out[v].secondary not in self.secondaries:
                raise InvalidLabel('weight node %d: secondary %r not allowed'
                                   % (v, out[v].secondary))

    def rules(self, v, out):
        if v in self.active:
            for found in self.coloring.rules(v, out):
                yield found
            return

        for found in super(WeightAugmented, self).rules(v, out):
            yield found

        lab = out[v]
        sec = lab.secondary
        nbrs = self.tree.neighbours(v)
        active_nbrs = [u for u in nbrs if u in self.active]
        towards_active = [u for u in active_nbrs if lab.orient.get(u) == L.OUT]

        if active_nbrs:
            if len(towards_active) != 1:
                yield 'orient-active', 'oriented towards %d active neighbours' % len(towards_active)
            elif sec != out[towards_active[0]]:
                yield 'copy-active', 'secondary %s differs from active %d (%s)' % (
                    sec, towards_active[0], out[towards_active[0]])

        if L.is_rake(lab.tag) and not towards_active:
            for u in self.nbrs(v):
                if self._orient(out, v, u) != L.OUT:
                    continue
                if out[u].secondary != L.DECLINE and out[u].secondary != sec:
                    yield 'copy-weight', 'secondary differs from pointed-to %d' % u

        if sec == L.DECLINE and L.is_rake(lab.tag):
            yield 'decline', 'rake-labeled weight node declined'
        if L.is_compress(lab.tag) and (sec == L.DECLINE) == bool(active_nbrs):
            yield 'decline', ('compress node next to an active node declined' if active_nbrs
                              else 'compress node away from active nodes must decline')

    def _edge_keys(self, v):
        if v in self.active:
            return [('edge', u, v) for u in self.tree.neighbours(v) if u not in self.active]
        return [('edge', v, u) if u in self.active else ('edge', min(u, v), max(u, v))
                for u in self.tree.neighbours(v)]

    def depends(self, v):
        keys = [('node', v)] + [('node', u) for u in self.tree.neighbours(v)
                                if (u in self.active) == (v in self.active) or v not in self.active]
        return keys + self._edge_keys(v)

    def search_order(self):
        return list(self.tree.ball(0, self.tree.n)) if self.tree.n else []

    def variables(self):
        keys = []
        placed = set()
        for v in self.search_order():
            keys.append(('node', v))
            placed.add(v)
            for u in self.tree.neighbours(v):
                if u not in placed:
                    continue
                if v in self.active and u in self.active:
                    continue
                if v in self.active or u in self.active:
                    w, a = (u, v) if v in self.active else (v, u)
                    keys.append(('edge', w, a))
                else:
                    keys.append(('edge', min(u, v), max(u, v)))
        return keys

    def domain(self, key):
        if key[0] == 'edge' and (key[2] in self.active):
            return (L.OUT, L.NONE)
        return super(WeightAugmented, self).domain(key)

    def assign(self, state, key, value):
        if key[0] == 'edge' and key[2] in self.active:
            state.orient[key[1]][key[2]] = value
        elif key[0] == 'node' and key[1] in self.active:
            state.out[key[1]] = value
        elif key[0] == 'node':
            tag, sec = value
            state.out[key[1]] = L.HierLabel(tag, state.orient[key[1]], sec)
        else:
            super(WeightAugmented, self).assign(state, key, value)


def check_khier(tree, levels, out, k, variant):
    if levels.k != k or len(levels) != tree.n:
        raise ParameterError('level map was computed for k=%d, checking k=%d' % (levels.k, k))
    return KHierColoring(tree, k, variant, levels).check(out)


def check_weighted(tree, inputs, out, variant, delta, d, k):
    return WeightedColoring(tree, inputs, variant, delta, d, k).check(out)


def check_dfree(tree, inputs, out, d, delta=None):
    return DFreeWeight(tree, inputs, d, delta).check(out)


def check_hier_labeling(tree, out, k):
    return HierLabeling(tree, k).check(out)


def check_weight_augmented(tree, inputs, out, k):
    return WeightAugmented(tree, inputs, k).check(out)


def make_problem(problem, tree, inputs=None, **params):
    """Build a :class:`Problem` from its identifier and parameters."""
    try:
        if problem in ('khier', 'khier-2.5', 'khier-3.5'):
            variant = params.get('variant') or problem.split('-')[1]
            k = params['k']
            levels = params.get('levels') or compute_levels(tree, k)
            return KHierColoring(tree, k, variant, levels)
        if problem in ('weighted', 'weighted-2.5', 'weighted-3.5'):
            variant = params.get('variant') or problem.split('-')[1]
            return WeightedColoring(tree, inputs, variant, params['delta'],
                                    params['d'], params['k'])
        if problem == 'dfree':
            return DFreeWeight(tree, inputs, params['d'], params.get('delta'))
        if problem == 'hier-labeling':
            return HierLabeling(tree, params['k'])
        if problem == 'weight-augmented':
            return WeightAugmented(tree, inputs, params['k'])
    except (KeyError, IndexError) as exc:
        raise ParameterError('problem %s is missing parameter %s' % (problem, exc))
    raise ParameterError('unknown problem %r' % (problem,))


PROBLEMS = (
    ('khier', 'hierarchical 2.5- or 3.5-coloring (params: k, variant)'),
    ('weighted', 'weighted coloring (params: variant, delta, d, k)'),
    ('dfree', 'd-free weight problem on A/W inputs (params: d)'),
    ('hier-labeling', 'k-hierarchical labeling (params: k)'),
    ('weight-augmented', 'weight augmented 2.5-coloring (params: k)'),
)

__all__ = ['Verdict', 'Violation', 'LevelMap', 'check_khier', 'check_weighted',
           'check_dfree', 'check_hier_labeling', 'check_weight_augmented',
           'make_problem']
