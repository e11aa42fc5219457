# -*- coding: utf-8; -*-

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lclbench.algorithms.generic import generic_khier
from lclbench.algorithms.hierarchical import hier_labeling_solve
from lclbench.checkers import KHierColoring, make_problem
from lclbench.exc import CapExceeded
from lclbench.labels import (ACTIVE, COPY, DECLINE, NONE, ORIENTATIONS, WEIGHT, WEIGHT_PRIMARIES,
                             HierLabel, alphabet, flip, hier_tags)
from lclbench.oracle import brute_force, search
from lclbench.tree import balanced_regular_tree, build_tree, compute_levels, path_graph

from tests.strategies import dfree_instances, trees


def accepted(problem, candidates):
    return [list(out) for out in candidates if problem.check(list(out))]


class TestBruteForce(object):
    def test_two_nodes_single_level(self):
        found = brute_force(path_graph(2), 'khier', {'k': 1, 'variant': '2.5'})
        assert found == [['W', 'B'], ['B', 'W']]

    def test_count_only(self):
        assert brute_force(path_graph(2), 'khier', {'k': 1, 'variant': '2.5'},
                           count_only=True) == 2

    def test_empty_alphabet(self):
        class Unlabelable(KHierColoring):
            def candidates(self, v):
                return ()

        tree = path_graph(3)
        assert search(Unlabelable(tree, 2, '2.5', compute_levels(tree, 2))) == []

    def test_dfree_star(self):
        tree = build_tree([(0, 1), (0, 2), (0, 3)])
        found = brute_force(tree, 'dfree', {'d': 2}, inputs=['A', 'W', 'W', 'W'])
        copying = [out for out in found if out[0] == COPY]
        assert copying
        assert all(out[1:].count(DECLINE) <= 2 for out in copying)
        assert [COPY] + [DECLINE] * 3 not in found

    def test_fixed_labels(self):
        found = brute_force(path_graph(3), 'khier', {'k': 1, 'variant': '2.5'}, fixed={0: 'B'})
        assert found == [['B', 'W', 'B']]

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_force(path_graph(8), 'khier', {'k': 2, 'variant': '3.5'}, cap=10)


class TestOracleMatchesChecker(object):
    @settings(max_examples=30, deadline=None)
    @given(trees(max_nodes=6), st.integers(1, 2))
    def test_khier_25(self, tree, k):
        self.compare_khier(tree, k, '2.5')

    @settings(max_examples=15, deadline=None)
    @given(trees(max_nodes=4), st.integers(1, 2))
    def test_khier_35(self, tree, k):
        self.compare_khier(tree, k, '3.5')

    def compare_khier(self, tree, k, variant):
        params = {'k': k, 'variant': variant}
        problem = make_problem('khier', tree, **params)
        everything = itertools.product(alphabet(variant), repeat=tree.n)
        expected = accepted(problem, everything)
        assert sorted(brute_force(tree, 'khier', params)) == sorted(expected)

    @settings(max_examples=30, deadline=None)
    @given(dfree_instances(max_nodes=7), st.integers(1, 2))
    def test_dfree(self, instance, d):
        tree, inputs = instance
        problem = make_problem('dfree', tree, inputs, d=d)
        expected = accepted(problem, itertools.product(WEIGHT_PRIMARIES, repeat=tree.n))
        assert sorted(brute_force(tree, 'dfree', {'d': d}, inputs=inputs)) == sorted(expected)

    @settings(max_examples=15, deadline=None)
    @given(trees(max_nodes=4))
    def test_hier_labeling(self, tree):
        problem = make_problem('hier-labeling', tree, k=2)
        edges = tree.edges()
        expected = []
        for tags in itertools.product(hier_tags(2), repeat=tree.n):
            for orients in itertools.product(ORIENTATIONS, repeat=len(edges)):
                orient = [dict() for _ in tree.nodes()]
                for (u, v), o in zip(edges, orients):
                    orient[u][v] = o
                    orient[v][u] = flip(o)
                out = [HierLabel(t, orient[v]) for v, t in enumerate(tags)]
                if problem.check(out):
                    expected.append(out)
        found = brute_force(tree, 'hier-labeling', {'k': 2})
        key = lambda out: [(l.tag, sorted(l.orient.items())) for l in out]
        assert sorted(map(key, found)) == sorted(map(key, expected))


def free_nodes(data, tree, most):
    return sorted(data.draw(st.lists(st.integers(0, tree.n - 1), unique=True,
                                     max_size=min(most, tree.n))))


def relabel(problem, base, free, values):
    """Labelings equal to ``base`` off ``free`` that ``problem`` accepts."""
    accepted = []
    for combo in itertools.product(values, repeat=len(free)):
        out = list(base)
        for v, label in zip(free, combo):
            out[v] = label
        if problem.check(out):
            accepted.append(out)
    return accepted


class TestOracleOnNineNodes(object):
    """Exact agreement on every relabeling of a few nodes of a known solution."""

    @settings(max_examples=500, deadline=None)
    @given(trees(max_nodes=9), st.integers(1, 2), st.data())
    def test_khier_25(self, tree, k, data):
        self.compare_khier(tree, k, '2.5', data, most=4)

    @settings(max_examples=500, deadline=None)
    @given(trees(max_nodes=9), st.integers(1, 2), st.data())
    def test_khier_35(self, tree, k, data):
        self.compare_khier(tree, k, '3.5', data, most=3)

    def compare_khier(self, tree, k, variant, data, most):
        gammas = data.draw(st.lists(st.integers(1, 4), min_size=k - 1, max_size=k - 1))
        base = generic_khier(tree, k, variant, gammas).outputs
        free = free_nodes(data, tree, most)
        params = {'k': k, 'variant': variant}
        expected = relabel(make_problem('khier', tree, **params), base, free, alphabet(variant))
        assert base in expected
        fixed = dict((v, base[v]) for v in tree.nodes() if v not in free)
        assert sorted(brute_force(tree, 'khier', params, fixed=fixed)) == sorted(expected)

    @settings(max_examples=500, deadline=None)
    @given(dfree_instances(max_nodes=9), st.integers(1, 2), st.data())
    def test_dfree(self, instance, d, data):
        tree, inputs = instance
        params = {'d': d}
        solutions = brute_force(tree, 'dfree', params, inputs=inputs)
        if solutions:
            base = data.draw(st.sampled_from(solutions))
        else:
            base = data.draw(st.lists(st.sampled_from(WEIGHT_PRIMARIES),
                                      min_size=tree.n, max_size=tree.n))
        free = free_nodes(data, tree, 5)
        problem = make_problem('dfree', tree, inputs, **params)
        expected = relabel(problem, base, free, WEIGHT_PRIMARIES)
        fixed = dict((v, base[v]) for v in tree.nodes() if v not in free)
        assert sorted(brute_force(tree, 'dfree', params, inputs=inputs,
                                  fixed=fixed)) == sorted(expected)
        assert all(problem.check(out) for out in solutions)

    @settings(max_examples=500, deadline=None)
    @given(trees(max_nodes=9), st.data())
    def test_hier_labeling(self, tree, data):
        base = hier_labeling_solve(tree, 2).outputs
        orient = [dict((u, base[v].orient.get(u, NONE)) for u in tree.neighbours(v))
                  for v in tree.nodes()]
        tags = [label.tag for label in base]
        free = free_nodes(data, tree, 2)
        edges = tree.edges()
        loose = sorted(data.draw(st.lists(st.sampled_from(edges), unique=True, max_size=3))
                       if edges else [])

        problem = make_problem('hier-labeling', tree, k=2)
        expected = []
        for combo in itertools.product(hier_tags(2), repeat=len(free)):
            for turns in itertools.product(ORIENTATIONS, repeat=len(loose)):
                now = [dict(o) for o in orient]
                for (u, v), o in zip(loose, turns):
                    now[u][v] = o
                    now[v][u] = flip(o)
                chosen = list(tags)
                for v, tag in zip(free, combo):
                    chosen[v] = tag
                out = [HierLabel(t, now[v]) for v, t in enumerate(chosen)]
                if problem.check(out):
                    expected.append(out)

        fixed = dict((v, tags[v]) for v in tree.nodes() if v not in free)
        fixed.update((('edge', u, v), orient[u][v]) for u, v in edges if (u, v) not in loose)
        found = brute_force(tree, 'hier-labeling', {'k': 2}, fixed=fixed)
        key = lambda out: [(l.tag, sorted(l.orient.items())) for l in out]
        assert sorted(map(key, found)) == sorted(map(key, expected))
        assert key([HierLabel(t, orient[v]) for v, t in enumerate(tags)]) in list(map(key, expected))


class TestWeightLowerBound(object):
    """One Active node holding a balanced weight tree (delta=5, d=2, k=2)."""

    @pytest.mark.parametrize('w, least', [(4, 2), (5, 3), (6, 3), (7, 3), (8, 3), (9, 3),
                                          (10, 3)])
    def test_fewest_matching_copies(self, w, least):
        weight = balanced_regular_tree(5, w)
        edges = [(0, 1)] + [(a + 1, b + 1) for a, b in weight.edges()]
        inputs = [ACTIVE] + [WEIGHT] * w
        tree = build_tree(edges, inputs, n=w + 1)
        found = brute_force(tree, 'weighted', {'variant': '2.5', 'delta': 5, 'd': 2, 'k': 2},
                            inputs=inputs)
        assert found
        copies = [sum(1 for label in out[1:]
                      if label.primary == COPY and label.secondary == out[0])
                  for out in found]
        assert min(copies) == least
        # the bound holds rounded down: w = 10 gets by with 3 < 10 ** 0.5
        assert least >= int(w ** 0.5)
