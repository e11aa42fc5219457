# -*- coding: utf-8; -*-

import pytest

from lclbench import formulas
from lclbench.algorithms.generic import generic_khier
from lclbench.algorithms.hierarchical import (hier_labeling_solve, weight_augmented_solve,
                                              worst_case_gammas)
from lclbench.checkers import check_hier_labeling, check_weight_augmented
from lclbench.exc import ParameterError
from lclbench.families import lower_bound_graph
from lclbench.labels import ACTIVE, IN, OUT, WEIGHT, HierLabel
from lclbench.tree import balanced_regular_tree, build_tree, path_graph, random_tree


def active_path_with_weight(length=5, weight=6):
    edges = [(i, i + 1) for i in range(length - 1)]
    inputs = [ACTIVE] * length
    size = length
    for i in range(length):
        sub = balanced_regular_tree(5, weight)
        edges.append((i, size))
        edges.extend((size + a, size + b) for a, b in sub.edges())
        inputs.extend([WEIGHT] * weight)
        size += weight
    return build_tree(edges, inputs=inputs, n=size), inputs


class TestHierLabeling(object):
    def test_path(self):
        tree = path_graph(20)
        trace = hier_labeling_solve(tree, 2)
        assert check_hier_labeling(tree, trace.outputs, 2)

    def test_star(self):
        tree = build_tree([(0, 1), (0, 2), (0, 3)])
        out = hier_labeling_solve(tree, 2).outputs
        assert all(isinstance(l, HierLabel) and l.tag == 'R1' for l in out)
        assert out[0].orient == {1: IN, 2: IN, 3: IN}
        assert all(out[v].orient == {0: OUT} for v in (1, 2, 3))

    def test_random_tree(self):
        tree = random_tree(500, 3, 2)
        trace = hier_labeling_solve(tree, 2)
        assert check_hier_labeling(tree, trace.outputs, 2)

    def test_too_many_layers(self):
        with pytest.raises(ParameterError):
            hier_labeling_solve(path_graph(100), 1, gamma=1)

    def test_bad_k(self):
        with pytest.raises(ParameterError):
            hier_labeling_solve(path_graph(3), 0)


class TestWeightAugmented(object):
    def test_valid(self):
        tree, inputs = active_path_with_weight()
        trace = weight_augmented_solve(tree, inputs, 2)
        assert check_weight_augmented(tree, inputs, trace.outputs, 2)

    def test_weight_roots_copy_their_active(self):
        tree, inputs = active_path_with_weight()
        out = weight_augmented_solve(tree, inputs, 2).outputs
        for v in tree.nodes():
            if inputs[v] != WEIGHT:
                continue
            actives = [u for u in tree.neighbours(v) if inputs[u] == ACTIVE]
            if actives:
                assert out[v].orient[actives[0]] == OUT
                assert out[v].secondary == out[actives[0]]

    def test_without_weight(self):
        tree, _ = lower_bound_graph((3, 4))
        inputs = [ACTIVE] * tree.n
        augmented = weight_augmented_solve(tree, inputs, 2)
        plain = generic_khier(tree, 2, '2.5', worst_case_gammas(tree.n, 2))
        assert augmented.outputs == plain.outputs

    @pytest.mark.parametrize('w, k', [(6, 2), (21, 2), (85, 2), (85, 3)])
    def test_copies_of_a_single_active(self, w, k):
        weight = balanced_regular_tree(5, w)
        edges = [(0, 1)] + [(a + 1, b + 1) for a, b in weight.edges()]
        inputs = [ACTIVE] + [WEIGHT] * w
        tree = build_tree(edges, inputs=inputs, n=w + 1)
        out = weight_augmented_solve(tree, inputs, k).outputs
        assert check_weight_augmented(tree, inputs, out, k)
        copies = sum(1 for label in out[1:] if label.secondary == out[0])
        assert copies >= formulas.augmented_copy_bound(w, 5, k)

    def test_needs_two_levels(self):
        tree, inputs = active_path_with_weight()
        with pytest.raises(ParameterError):
            weight_augmented_solve(tree, inputs, 1)

    def test_gammas(self):
        assert worst_case_gammas(100, 2) == [10]
        assert worst_case_gammas(1000, 3) == [10, 100]
